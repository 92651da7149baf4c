"""Finding large transitive subtournaments.

The greedy descent guarantees a chain of length at least
``floor(log2 n) + 1`` in any tournament: the top out-degree candidate
beats at least half of the rest, so each pick at most halves the working
set.  An exhaustive maximizer (capped, subset enumeration) provides exact
longest chains at small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import SizeCapError, Tournament

__all__ = [
    "TransitiveChain",
    "greedy_transitive_chain",
    "max_transitive_exhaustive",
    "verify_chain",
    "chain_floor",
]


@dataclass(frozen=True)
class TransitiveChain:
    """Candidate sequence in which every earlier member beats every later one."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def chain_floor(n: int) -> int:
    """Guaranteed chain length floor(log2 n) + 1 for any n-candidate tournament."""
    return n.bit_length()


def verify_chain(t: Tournament, chain: TransitiveChain) -> bool:
    """True iff the chain's members are distinct and each beats all later ones."""
    v = list(chain.vertices)
    if len(set(v)) != len(v) or not v:
        return False
    if min(v) < 0 or max(v) >= t.n:
        return False
    sub = t.beats[np.ix_(v, v)]
    return bool(np.triu(~sub, k=1).sum() == 0)


def greedy_transitive_chain(t: Tournament) -> TransitiveChain:
    """Greedy descent: take the max out-degree candidate, keep only who it beats.

    Ties on out-degree break toward the lowest label, so the result is
    deterministic.  Each picked candidate beats everything still in the
    working set, hence everything picked later; the result is always a
    valid chain of length at least ``chain_floor(t.n)``.
    """
    beats = t.beats
    work = np.arange(t.n)
    chain: list[int] = []
    while work.size:
        sub = beats[np.ix_(work, work)]
        j = int(np.argmax(sub.sum(axis=1)))  # first max = lowest label
        chain.append(int(work[j]))
        prev = work.size
        work = work[sub[j]]
        # the best candidate beats at least ceil((m-1)/2) of the other m-1
        assert work.size >= prev // 2
    return TransitiveChain(tuple(chain))


def max_transitive_exhaustive(t: Tournament, n_cap: int = 16) -> TransitiveChain:
    """Exact longest transitive chain by subset enumeration, capped at ``n_cap``.

    Subsets are scanned in decreasing size with early exit; among all
    maximum-length chains the lexicographically least is returned, so the
    output is schedule independent.  A subset is transitive exactly when
    its internal out-degrees are pairwise distinct, and then descending
    out-degree is the chain order.
    """
    n = t.n
    if n > n_cap:
        raise SizeCapError(n_cap, f"exhaustive chain search refuses n={n} above cap {n_cap}")
    rows = [sum(1 << int(j) for j in np.flatnonzero(t.beats[i])) for i in range(n)]
    for size in range(n, 0, -1):
        best: tuple[int, ...] | None = None
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            degs = [(rows[v] & mask).bit_count() for v in combo]
            if len(set(degs)) != size:
                continue
            chain = tuple(v for _, v in sorted(zip(degs, combo), reverse=True))
            if best is None or chain < best:
                best = chain
        if best is not None:
            return TransitiveChain(best)
    raise AssertionError("unreachable: single candidates are transitive")
