"""Command-line surface: gen, synthesize, verify, oracle, bench.

Exit codes: 0 success/verified, 1 semantic failure (pattern mismatch),
2 usage or parse error, 3 capability refusal (size caps, search budget).
"""

from __future__ import annotations

import argparse
import sys

from . import bench as benchmod
from .construct import mcgarvey_baseline, synthesize, voter_count_bound
from .core import (
    BudgetExceededError,
    SizeCapError,
    Tournament,
    majority_pattern,
    margins,
    random_tournament,
)
from .fileio import read_profile, read_tournament, write_profile, write_tournament
from .oracle import DEFAULT_BUDGET, min_voters_exact

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _report_lines(t: Tournament, method: str, voters: int, report=None) -> list[str]:
    n = t.n
    lines = [
        f"method: {method}",
        f"n: {n}",
        f"k: {n.bit_length() - 1}",
        f"bound: {voter_count_bound(n)}",
        f"voters: {voters}",
        "verified: true",
    ]
    if report is not None:
        lines += [
            f"chain_len: {len(report.base_chain) + int(report.base_trimmed)}",
            f"base_chain: {' '.join(str(v) for v in report.base_chain)}",
            f"base_trimmed: {'true' if report.base_trimmed else 'false'}",
            f"steps: {' '.join(f'{a}>{b}' for a, b in report.steps)}",
        ]
    return lines


def cmd_gen(args) -> int:
    t = random_tournament(args.n, args.seed)
    write_tournament(t, args.output)
    print(f"wrote {args.output}: n={t.n} seed={args.seed}")
    return EXIT_OK


def cmd_synthesize(args) -> int:
    t = read_tournament(args.input)
    if args.method == "fiol":
        try:
            profile, report = synthesize(t)
        except RuntimeError as exc:  # re-verification failed: implementation bug
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        voters = report.final_size
    else:
        profile = mcgarvey_baseline(t)
        report = None
        voters = profile.size
        if majority_pattern(profile) != t:
            print("error: baseline profile failed re-verification", file=sys.stderr)
            return EXIT_MISMATCH
    write_profile(profile, args.output)
    lines = _report_lines(t, args.method, voters, report)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"wrote {args.output}: n={t.n} method={args.method} voters={voters} verified=true")
    return EXIT_OK


def cmd_verify(args) -> int:
    t = read_tournament(args.input)
    p = read_profile(args.votes)
    if p.n != t.n:
        print(
            f"error: label mismatch: tournament has {t.n} candidates, "
            f"votes rank {p.n}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    margin = margins(p).margin
    bad = []
    for i in range(t.n):
        for j in range(i + 1, t.n):
            m = int(margin[i, j])
            if m == 0:
                bad.append(f"pair ({i}, {j}): tie, margin 0")
            elif (m > 0) != bool(t.beats[i, j]):
                x, y = (i, j) if t.beats[i, j] else (j, i)
                bad.append(
                    f"pair ({x}, {y}): pattern says {x}>{y}, votes margin({x},{y}) = {-abs(m)}"
                )
    if bad:
        for line in bad:
            print(line)
        print(f"mismatch: {len(bad)} of {t.n * (t.n - 1) // 2} pairs disagree or tie")
        return EXIT_MISMATCH
    print(f"ok: votes generate the pattern (n={t.n}, voters={p.size})")
    return EXIT_OK


def cmd_oracle(args) -> int:
    t = read_tournament(args.input)
    result = min_voters_exact(t, n_cap=args.cap, budget=args.budget)
    _, report = synthesize(t)
    print(f"min: {result.min_voters}")
    print(f"fiol: {report.final_size}")
    print(f"gap: {report.final_size - result.min_voters}")
    print(f"sizes_searched: {' '.join(str(s) for s in result.sizes_searched)}")
    print("witness:")
    for row in result.witness.rows:
        print(" ".join(str(int(x)) for x in row))
    return EXIT_OK


def cmd_bench(args) -> int:
    if not 2 <= args.n_min <= args.n_max <= 512:
        raise UsageError("bench range must satisfy 2 <= n-min <= n-max <= 512")
    methods = ("fiol", "mcgarvey") if args.method == "both" else (args.method,)
    records = benchmod.run_bench(args.n_min, args.n_max, args.trials, args.seed, methods)
    benchmod.write_csv(records, args.csv)
    for line in benchmod.summaries(records):
        print(line)
    print(f"wrote {args.csv}: {len(records)} records, all verified")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voterset",
        description=(
            "Construct, verify, and benchmark small voter sets whose pairwise "
            "majority reproduces a given tournament."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a seeded random tournament file")
    p.add_argument("--n", type=_positive_int, required=True, help="candidate count (>= 1)")
    p.add_argument("--seed", type=int, default=0, help="64-bit stream seed")
    p.add_argument("--output", required=True, help="output .tour path")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("synthesize", help="build a voter profile generating a tournament")
    p.add_argument("--input", required=True, help="input .tour path")
    p.add_argument("--method", choices=("fiol", "mcgarvey"), default="fiol")
    p.add_argument("--output", required=True, help="output .votes path")
    p.add_argument("--report", help="optional key:value report path")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("verify", help="re-tally a votes file against a tournament file")
    p.add_argument("--input", required=True, help="input .tour path")
    p.add_argument("--votes", required=True, help="input .votes path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact minimum voter count (tiny n only)")
    p.add_argument("--input", required=True, help="input .tour path")
    p.add_argument("--cap", type=int, default=4, help="refuse instances above this n")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="seeded sweep of voter counts against the bound")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--trials", type=_positive_int, default=10)
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--method", choices=("fiol", "mcgarvey", "both"), default="fiol")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeCapError, BudgetExceededError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, OSError) as exc:
        # covers file format, malformed profile, and bad-input domain errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
