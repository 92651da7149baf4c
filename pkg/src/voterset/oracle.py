"""Exact minimum voter counts by exhaustive search, for tiny instances.

Ground truth for everything the constructions only bound from above.
Only odd profile sizes are searched: with an even voter count every
decisive pair leads by at least two votes, so dropping any one voter
leaves the generated pattern unchanged and a smaller generator exists.
That justification is itself property-tested at n = 3 in the test suite
rather than assumed silently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import BudgetExceededError, Profile, SizeCapError, Tournament

__all__ = ["OracleResult", "min_voters_exact", "max_v_exact", "HARD_CAP"]

# above this many candidates the multiset search is out of desk range
HARD_CAP = 5

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class OracleResult:
    """Certified minimum: no odd size below ``min_voters`` admits a generator."""

    min_voters: int
    witness: Profile
    sizes_searched: tuple[int, ...]


def min_voters_exact(
    t: Tournament, n_cap: int = 4, budget: int = DEFAULT_BUDGET
) -> OracleResult:
    """Smallest r such that some r-voter profile generates ``t``.

    Iterative deepening over odd r.  Candidate profiles are multisets of
    rankings enumerated as non-decreasing index sequences (killing the
    voter-permutation symmetry); a partial choice is pruned as soon as
    some pair's margin cannot reach the required sign with the voters
    still to come.  The returned witness is the first hit in enumeration
    order, hence the canonically least one.

    ``budget`` caps the total number of margin updates (one per pair per
    placed voter); exceeding it raises :class:`BudgetExceededError`
    carrying the last fully searched size.
    """
    n = t.n
    cap = min(n_cap, HARD_CAP)
    if n > cap:
        raise SizeCapError(cap, f"exact search refuses n={n} above cap {cap}")

    perms = list(itertools.permutations(range(n)))  # lexicographic
    pairs = list(itertools.combinations(range(n), 2))
    np_pairs = len(pairs)

    # contribution of each ranking toward the target, per pair: +1 helps
    orient: list[tuple[int, ...]] = []
    for perm in perms:
        pos = {v: i for i, v in enumerate(perm)}
        orient.append(
            tuple(
                1 if (pos[i] < pos[j]) == bool(t.beats[i, j]) else -1
                for (i, j) in pairs
            )
        )

    used = 0
    sizes: list[int] = []

    def search(r: int) -> list[int] | None:
        nonlocal used
        margin = [0] * np_pairs
        chosen: list[int] = []

        def rec(start: int, rem: int) -> bool:
            nonlocal used
            if rem == 0:
                return all(m > 0 for m in margin)
            if any(m + rem <= 0 for m in margin):
                return False
            for q in range(start, len(perms)):
                used += np_pairs
                if used > budget:
                    last = sizes[-2] if len(sizes) > 1 else None
                    raise BudgetExceededError(budget, last)
                contrib = orient[q]
                for p in range(np_pairs):
                    margin[p] += contrib[p]
                chosen.append(q)
                if rec(q, rem - 1):
                    return True
                chosen.pop()
                for p in range(np_pairs):
                    margin[p] -= contrib[p]
            return False

        return chosen if rec(0, r) else None

    r = 1
    while True:
        sizes.append(r)
        hit = search(r)
        if hit is not None:
            witness = Profile(perms[q] for q in hit)
            return OracleResult(r, witness, tuple(sizes))
        r += 2


def max_v_exact(n: int, budget: int = DEFAULT_BUDGET) -> tuple[int, Tournament]:
    """Worst-case minimum over all labeled n-candidate tournaments.

    Runs :func:`min_voters_exact` on every one of the ``2**C(n,2)``
    orientations and returns the maximum with its first maximizer (pairs
    enumerated in lexicographic order, one bit each).
    """
    if n > 4:
        raise SizeCapError(4, f"worst-case search refuses n={n} above cap 4")
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = list(itertools.combinations(range(n), 2))
    best_v = 0
    best_t: Tournament | None = None
    for code in range(1 << len(pairs)):
        beats = np.zeros((n, n), dtype=bool)
        for p, (i, j) in enumerate(pairs):
            if code >> p & 1:
                beats[i, j] = True
            else:
                beats[j, i] = True
        t = Tournament(beats)
        v = min_voters_exact(t, n_cap=max(n, 4), budget=budget).min_voters
        if v > best_v:
            best_v, best_t = v, t
    assert best_t is not None
    return best_v, best_t
