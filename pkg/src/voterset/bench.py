"""Seeded benchmark sweeps: achieved voter counts against the guaranteed bound.

Every record is re-verified before it is emitted; a synthesis that failed
verification would raise instead of producing a row.  Per-trial seeds are
derived as ``master XOR mix64(n << 32 | trial)`` so any single row can be
reproduced in isolation.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass

from .construct import mcgarvey_baseline, synthesize, voter_count_bound
from .core import Tournament, majority_pattern, mix64, random_tournament
from .transitive import greedy_transitive_chain

__all__ = ["BenchRecord", "CSV_FIELDS", "trial_seed", "run_bench", "write_csv", "summaries"]

CSV_FIELDS = ("n", "k", "seed", "method", "voters", "bound", "chain_len", "verified")

METHODS = ("fiol", "mcgarvey")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    k: int
    seed: int
    method: str
    voters: int
    bound: int
    chain_len: int
    verified: bool


def trial_seed(master_seed: int, n: int, trial: int) -> int:
    return (master_seed ^ mix64(((n & 0xFFFFFFFF) << 32) | (trial & 0xFFFFFFFF))) & (
        (1 << 64) - 1
    )


def _bench_one(t: Tournament, seed: int, method: str, chain_len: int) -> BenchRecord:
    n = t.n
    k = n.bit_length() - 1
    bound = voter_count_bound(n)
    if method == "fiol":
        profile, report = synthesize(t)  # raises if re-verification fails
        voters = report.final_size
    elif method == "mcgarvey":
        profile = mcgarvey_baseline(t)
        voters = profile.size
        if majority_pattern(profile) != t:
            raise RuntimeError("baseline profile failed re-verification")
    else:
        raise ValueError(f"unknown method {method!r}")
    return BenchRecord(n, k, seed, method, voters, bound, chain_len, True)


def run_bench(
    n_min: int,
    n_max: int,
    trials: int,
    master_seed: int,
    methods: tuple[str, ...] = ("fiol",),
) -> list[BenchRecord]:
    """One record per (n, trial, method), in that deterministic order."""
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}")
    records = []
    for n in range(n_min, n_max + 1):
        for trial in range(trials):
            seed = trial_seed(master_seed, n, trial)
            t = random_tournament(n, seed)
            chain_len = len(greedy_transitive_chain(t))
            for method in methods:
                records.append(_bench_one(t, seed, method, chain_len))
    return records


def write_csv(records: list[BenchRecord], path: str | os.PathLike) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_FIELDS)
        for rec in records:
            w.writerow(
                [
                    rec.n,
                    rec.k,
                    rec.seed,
                    rec.method,
                    rec.voters,
                    rec.bound,
                    rec.chain_len,
                    "true" if rec.verified else "false",
                ]
            )


def summaries(records: list[BenchRecord]) -> list[str]:
    """One line per (n, method): worst observed voter count against the bound."""
    worst: dict[tuple[int, str], BenchRecord] = {}
    for rec in records:
        key = (rec.n, rec.method)
        if key not in worst or rec.voters > worst[key].voters:
            worst[key] = rec
    return [
        f"n={n} method={method} max_voters={rec.voters} bound={rec.bound}"
        for (n, method), rec in sorted(worst.items())
    ]
