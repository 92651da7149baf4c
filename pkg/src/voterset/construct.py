"""Building small voter sets that realize a target tournament.

The pipeline rests on one step: given a realized tournament and two fresh
candidates a, b with a beating b, an odd profile of r voters extends to
r + 2 voters realizing the grown tournament.  Old voters are wrapped so
the newcomers land at their extremes (half get b first and a last, half
the opposite), which preserves every old pairwise margin and splits the
new pairs almost evenly; two tailor-made tail voters then tip every new
pair the right way.  Seeding the induction with one voter reading a long
transitive chain yields, for any n-candidate tournament, an odd profile
of at most ``n - k`` voters (k = floor(log2 n); ``n - k + 1`` when n and
k share parity).

The classic every-pair baseline (two voters per arc, all margins exactly
plus or minus 2) is included for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._engine import synth_rows
from .core import (
    GenerationMismatchError,
    MalformedProfileError,
    OrientationError,
    ParityError,
    Profile,
    Tournament,
    margins,
    restrict,
)
from .transitive import TransitiveChain, greedy_transitive_chain

__all__ = [
    "SegmentPartition",
    "ConstructionReport",
    "segment_partition",
    "extend_pair",
    "synthesize",
    "mcgarvey_baseline",
    "voter_count_bound",
]


@dataclass(frozen=True)
class SegmentPartition:
    """How the old candidates relate to a freshly added pair (a, b), a beats b.

    Every old candidate x falls in exactly one class:

    * ``gamma``: x beats b and x beats a
    * ``delta``: x beats b and a beats x
    * ``sigma``: b beats x and a beats x
    * ``mu``:    b beats x and x beats a

    Each segment is listed in ascending label order.  The two tail voters
    of an extension step are read straight off this partition.
    """

    a: int
    b: int
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    sigma: tuple[int, ...]
    mu: tuple[int, ...]


@dataclass(frozen=True)
class ConstructionReport:
    """Trace of one synthesis: seed chain, extension steps, and the size bound."""

    base_chain: TransitiveChain
    base_trimmed: bool
    steps: tuple[tuple[int, int], ...]
    final_size: int
    bound: int
    k: int


def voter_count_bound(n: int) -> int:
    """Guaranteed voter bound: n - k if n - k is odd, else n - k + 1 (k = floor(log2 n))."""
    k = n.bit_length() - 1
    d = n - k
    return d if d % 2 == 1 else d + 1


def _segments(beats: np.ndarray, old_sorted: np.ndarray, a: int, b: int):
    """Split ``old_sorted`` (ascending labels) into the four segment arrays."""
    to_b = beats[old_sorted, b]  # x beats b
    from_a = beats[a, old_sorted]  # a beats x
    return (
        old_sorted[to_b & ~from_a],
        old_sorted[to_b & from_a],
        old_sorted[~to_b & from_a],
        old_sorted[~to_b & ~from_a],
    )


def _tail_voters(gamma, delta, sigma, mu, a: int, b: int):
    """The two tail rankings: gamma a delta b sigma mu, and its pair.

    The second tail is mu-reversed, a, sigma-reversed, delta-reversed,
    gamma-reversed, b.  Restricted to the old candidates the two tails are
    exact reverses, so they cancel on every old pair while together
    granting a one-vote edge exactly where the new pair demands it.
    """
    first = np.concatenate([gamma, [a], delta, [b], sigma, mu]).astype(np.int32)
    second = np.concatenate(
        [mu[::-1], [a], sigma[::-1], delta[::-1], gamma[::-1], [b]]
    ).astype(np.int32)
    return first, second


def segment_partition(t_ext: Tournament, a: int, b: int) -> SegmentPartition:
    """Classify all candidates other than a, b by their arcs to the pair.

    Requires a beats b in ``t_ext``; callers orient the pair first.
    """
    n = t_ext.n
    if not (0 <= a < n and 0 <= b < n) or a == b:
        raise ValueError(f"(a, b) = ({a}, {b}) is not a candidate pair of the tournament")
    if not t_ext.beats[a, b]:
        raise OrientationError(f"pair must be oriented winner first: {b} beats {a} here")
    old = np.array([v for v in range(n) if v != a and v != b], dtype=np.int32)
    parts = _segments(t_ext.beats, old, a, b)
    gamma, delta, sigma, mu = (tuple(int(x) for x in arr) for arr in parts)
    return SegmentPartition(a, b, gamma, delta, sigma, mu)


def extend_pair(t_ext: Tournament, a: int, b: int, p_old: Profile) -> Profile:
    """Grow an odd profile by two voters to also realize the pair (a, b).

    ``p_old`` must generate the restriction of ``t_ext`` to the candidates
    other than a and b (in the dense labeling of that restriction, new
    label i = i-th smallest old candidate), and must have odd size.  The
    result has r + 2 voters over ``t_ext``'s full candidate set and
    generates ``t_ext``.
    """
    n = t_ext.n
    seg = segment_partition(t_ext, a, b)  # validates the pair and orientation
    r = p_old.size
    if r % 2 == 0:
        raise ParityError(f"old profile must have odd size, got {r}")
    old = [v for v in range(n) if v != a and v != b]
    if p_old.n != len(old):
        raise MalformedProfileError(
            f"old profile ranks {p_old.n} candidates, expected {len(old)}"
        )

    want = restrict(t_ext, old).beats
    got = margins(p_old).margin
    m = len(old)
    bad = np.triu(((got > 0) != want) | (got == 0), k=1)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise GenerationMismatchError(
            (old[int(i)], old[int(j)]),
            f"old profile does not generate the restricted pattern on pair "
            f"({old[int(i)]}, {old[int(j)]})",
        )

    lut = np.array(old, dtype=np.int32)
    mid = lut[p_old.rows]  # old voters rewritten in t_ext labels
    h = (r + 1) // 2
    rows = np.empty((r + 2, n), dtype=np.int32)
    rows[:h, 0] = b
    rows[:h, 1 : m + 1] = mid[:h]
    rows[:h, m + 1] = a
    rows[h:r, 0] = a
    rows[h:r, 1 : m + 1] = mid[h:r]
    rows[h:r, m + 1] = b
    gamma = np.array(seg.gamma, np.int32)
    delta = np.array(seg.delta, np.int32)
    sigma = np.array(seg.sigma, np.int32)
    mu = np.array(seg.mu, np.int32)
    rows[r], rows[r + 1] = _tail_voters(gamma, delta, sigma, mu, a, b)
    return Profile._from_rows(rows)


def synthesize(t: Tournament) -> tuple[Profile, ConstructionReport]:
    """Build an odd profile generating ``t``, within the guaranteed voter bound.

    Steps: seed with one voter reading the greedy transitive chain
    (dropping its last member if needed so the leftover candidate count is
    even), then absorb the remaining candidates in ascending order, two
    per extension step, each pair oriented winner first.  The finished
    profile is re-tallied against ``t`` before being returned; a mismatch
    would be an internal error and raises.

    Returns the profile and a report with the seed chain, the (a, b)
    steps, and the achieved size against the bound.
    """
    n = t.n
    beats = t.beats
    full_chain = greedy_transitive_chain(t)
    base = list(full_chain.vertices)
    trimmed = False
    if (n - len(base)) % 2 == 1:
        base.pop()  # a chain prefix is still a chain
        trimmed = True
    k = n.bit_length() - 1
    bound = voter_count_bound(n)

    in_base = np.zeros(n, dtype=bool)
    in_base[base] = True
    rest = np.flatnonzero(~in_base).astype(np.int32)  # ascending

    if synth_rows is not None:
        rows, step_arr = synth_rows(beats, np.array(base, np.int32), rest)
        profile = Profile._from_rows(rows)
        steps = [(int(a), int(b)) for a, b in step_arr]
    else:  # pragma: no cover - numba is a declared dependency
        profile, steps = _synthesize_by_folding(t, base, rest)
    r = profile.size

    got = margins(profile).margin
    if not np.array_equal(got > 0, beats):
        raise RuntimeError("internal error: synthesized profile failed re-verification")

    report = ConstructionReport(
        base_chain=TransitiveChain(tuple(base)),
        base_trimmed=trimmed,
        steps=tuple(steps),
        final_size=r,
        bound=bound,
        k=k,
    )
    assert r % 2 == 1 and r <= bound and r == 1 + 2 * len(steps)
    return profile, report


def _synthesize_by_folding(t: Tournament, base: list[int], rest: np.ndarray):
    """Reference path: literally fold :func:`extend_pair` over the pair order.

    Produces exactly the profile the compiled engine builds, two orders of
    magnitude slower; used when the JIT backend is unavailable and by the
    test suite as an equivalence oracle.
    """
    processed = sorted(base)
    dense = {v: i for i, v in enumerate(processed)}
    profile = Profile([[dense[v] for v in base]])
    steps: list[tuple[int, int]] = []
    for idx in range(0, rest.size, 2):
        u, v = int(rest[idx]), int(rest[idx + 1])
        a, b = (u, v) if t.beats[u, v] else (v, u)
        grown = sorted(processed + [u, v])
        sub = restrict(t, grown)
        dense = {g: i for i, g in enumerate(grown)}
        profile = extend_pair(sub, dense[a], dense[b], profile)
        processed = grown
        steps.append((a, b))
    # processed is now every candidate, so dense labels equal global ones
    return profile, steps


def mcgarvey_baseline(t: Tournament) -> Profile:
    """The classic two-voters-per-arc realization; size n(n-1), margins all +-2.

    For each arc (x, y) the pair of voters [x, y, rest ascending] and
    [rest descending, x, y] agrees only on x before y; their verdicts on
    every other pair cancel.
    """
    n = t.n
    if n < 2:
        raise ValueError("baseline construction needs at least two candidates")
    xs, ys = (idx.astype(np.int32) for idx in np.nonzero(t.beats))  # arcs, (x, y) lex order
    lo = np.minimum(xs, ys)[:, None]
    hi = np.maximum(xs, ys)[:, None]
    j = np.arange(n - 2, dtype=np.int32)[None, :]
    rest = j + (j >= lo)
    rest = rest + (rest >= hi)  # ascending candidates skipping x and y
    m = xs.shape[0]
    rows = np.empty((2 * m, n), dtype=np.int32)
    rows[0::2, 0] = xs
    rows[0::2, 1] = ys
    rows[0::2, 2:] = rest
    rows[1::2, : n - 2] = rest[:, ::-1]
    rows[1::2, n - 2] = xs
    rows[1::2, n - 1] = ys
    return Profile._from_rows(rows)
