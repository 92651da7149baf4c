"""Tournaments, rankings, voter profiles, and the pairwise majority tally.

A tournament orients every pair of n candidates (a strong preference
pattern: no ties, no missing pairs).  A ranking is one voter's transitive
preference order, a profile is an ordered list of voters, and
:func:`majority_pattern` tallies a profile into the tournament it
generates.  Everything else in the package is built on, and checked
against, these four values and that one tally.

Candidates are dense integers ``0..n-1`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._tally import pair_counts

__all__ = [
    "Tournament",
    "Ranking",
    "Profile",
    "MarginMatrix",
    "Transitivity",
    "MalformedProfileError",
    "TieError",
    "OrientationError",
    "ParityError",
    "GenerationMismatchError",
    "SizeCapError",
    "BudgetExceededError",
    "margins",
    "majority_pattern",
    "restrict",
    "restriction_labels",
    "is_transitive",
    "random_tournament",
    "transitive_tournament",
    "mix64",
]


class MalformedProfileError(ValueError):
    """Voters disagree on length or label set, or a row is not a permutation."""


class TieError(ValueError):
    """Some candidate pair has margin zero, so no strong pattern exists."""

    def __init__(self, pair: tuple[int, int] | None, message: str | None = None):
        self.pair = pair
        if message is None:
            if pair is None:
                message = "empty profile generates nothing"
            else:
                message = f"majority tie on candidate pair {pair}"
        super().__init__(message)


class OrientationError(ValueError):
    """A candidate pair was passed against the tournament's arc direction."""


class ParityError(ValueError):
    """An operation that requires an odd voter count was given an even one."""


class GenerationMismatchError(ValueError):
    """A profile fails to generate the pattern it was claimed to generate."""

    def __init__(self, pair: tuple[int, int], message: str | None = None):
        self.pair = pair
        super().__init__(message or f"profile does not reproduce pair {pair}")


class SizeCapError(ValueError):
    """Instance size exceeds the configured exhaustive-search cap."""

    def __init__(self, cap: int, message: str):
        self.cap = cap
        super().__init__(message)


class BudgetExceededError(RuntimeError):
    """Exhaustive search ran out of its node budget."""

    def __init__(self, budget: int, last_completed: int | None):
        self.budget = budget
        self.last_completed = last_completed
        done = last_completed if last_completed is not None else "none"
        super().__init__(
            f"search budget of {budget} margin updates exhausted; "
            f"last fully searched size: {done}"
        )


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


class Tournament:
    """Complete asymmetric relation on ``n`` labeled candidates.

    ``beats[i, j]`` is True exactly when candidate i is preferred over
    candidate j; exactly one of ``beats[i, j]`` and ``beats[j, i]`` holds
    for every pair, and the diagonal is all False.
    """

    __slots__ = ("beats",)

    def __init__(self, beats):
        b = np.array(beats, dtype=bool)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ValueError("beats must be a square matrix")
        n = b.shape[0]
        if n < 1:
            raise ValueError("a tournament needs at least one candidate")
        if b.diagonal().any():
            raise ValueError("no candidate may beat itself")
        if not np.array_equal(b ^ b.T, ~np.eye(n, dtype=bool)):
            raise ValueError("every pair must be oriented in exactly one direction")
        self.beats = _frozen(b)

    @property
    def n(self) -> int:
        return self.beats.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tournament):
            return NotImplemented
        return np.array_equal(self.beats, other.beats)

    __hash__ = None  # mutable-array payload

    def __repr__(self) -> str:
        return f"Tournament(n={self.n})"


class Ranking:
    """One voter's preference: a permutation of ``0..n-1``, best first."""

    __slots__ = ("order",)

    def __init__(self, order: Iterable[int]):
        seq = tuple(int(x) for x in order)
        if sorted(seq) != list(range(len(seq))):
            raise ValueError(f"ranking must be a permutation of 0..n-1, got {seq}")
        if not seq:
            raise ValueError("ranking must contain at least one candidate")
        self.order = seq

    @property
    def n(self) -> int:
        return len(self.order)

    def reversed(self) -> "Ranking":
        return Ranking(self.order[::-1])

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Ranking):
            return self.order == other.order
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"Ranking({self.order})"


class Profile:
    """An ordered list of voters over a common candidate set.

    Duplicates are allowed and preserved; voter order is significant only
    as bookkeeping (majority tallies are order independent).  Storage is a
    read-only ``(r, n)`` int32 matrix, one voter per row, exposed as
    ``rows``; ``Ranking`` views are materialized on access.
    """

    __slots__ = ("rows",)

    def __init__(self, voters: Iterable, n: int | None = None):
        items = list(voters)
        if not items:
            if n is None or n < 1:
                raise MalformedProfileError(
                    "an empty profile needs an explicit candidate count n >= 1"
                )
            self.rows = _frozen(np.empty((0, n), np.int32))
            return
        seqs = [list(v.order) if isinstance(v, Ranking) else [int(x) for x in v] for v in items]
        width = len(seqs[0])
        if any(len(s) != width for s in seqs):
            raise MalformedProfileError("voters must all rank the same number of candidates")
        if n is not None and n != width:
            raise MalformedProfileError(f"voters rank {width} candidates, expected {n}")
        rows = np.array(seqs, dtype=np.int32)
        expect = np.arange(width, dtype=np.int32)
        if not np.array_equal(np.sort(rows, axis=1), np.broadcast_to(expect, rows.shape)):
            raise MalformedProfileError("every voter must be a permutation of 0..n-1")
        self.rows = _frozen(rows)

    @classmethod
    def _from_rows(cls, rows: np.ndarray) -> "Profile":
        # trusted constructor: rows are already valid permutations
        p = object.__new__(cls)
        p.rows = _frozen(rows.astype(np.int32, copy=False))
        return p

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def size(self) -> int:
        return self.rows.shape[0]

    @property
    def voters(self) -> tuple[Ranking, ...]:
        return tuple(self[i] for i in range(self.size))

    def positions(self) -> np.ndarray:
        """``(r, n)`` matrix with ``pos[v, x]`` = rank of candidate x by voter v."""
        r, n = self.rows.shape
        pos = np.empty((r, n), np.int32)
        pos[np.arange(r)[:, None], self.rows] = np.arange(n, dtype=np.int32)[None, :]
        return pos

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, i: int) -> Ranking:
        return Ranking(int(x) for x in self.rows[i])

    def __iter__(self) -> Iterator[Ranking]:
        return (self[i] for i in range(self.size))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return self.rows.shape == other.rows.shape and np.array_equal(self.rows, other.rows)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Profile(r={self.size}, n={self.n})"


class MarginMatrix:
    """Antisymmetric tally: ``margin[i, j]`` = (voters with i before j) - (j before i)."""

    __slots__ = ("margin",)

    def __init__(self, margin):
        m = np.array(margin, dtype=np.int32)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("margin must be a square matrix")
        if not np.array_equal(m, -m.T):
            raise ValueError("margin matrix must be antisymmetric with zero diagonal")
        self.margin = _frozen(m)

    @property
    def n(self) -> int:
        return self.margin.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarginMatrix):
            return NotImplemented
        return np.array_equal(self.margin, other.margin)

    __hash__ = None

    def __repr__(self) -> str:
        return f"MarginMatrix(n={self.n})"


def margins(p: Profile) -> MarginMatrix:
    """Tally a profile into its pairwise margin matrix."""
    counts = pair_counts(p.positions())
    return MarginMatrix(counts - counts.T)


def majority_pattern(p: Profile) -> Tournament:
    """The strong pattern a profile generates, or :class:`TieError` if any pair ties.

    Each voter contributes +1 or -1 to every pair, so an odd number of
    voters can never tie and this always succeeds.  An empty profile ties
    every pair; by convention it generates nothing even at n = 1, where no
    pair exists to blame.
    """
    if p.size == 0 and p.n == 1:
        raise TieError(None)
    m = margins(p).margin
    n = p.n
    tied = (m == 0) & ~np.eye(n, dtype=bool)
    if tied.any():
        i, j = np.argwhere(tied)[0]
        raise TieError((int(i), int(j)))
    return Tournament(m > 0)


def restriction_labels(keep: Iterable[int]) -> tuple[int, ...]:
    """The label table of a restriction: new label i names old candidate result[i]."""
    return tuple(sorted({int(x) for x in keep}))


def _checked_keep(keep: Iterable[int], n: int) -> list[int]:
    ks = sorted({int(x) for x in keep})
    if not ks:
        raise ValueError("keep set must be nonempty")
    if ks[0] < 0 or ks[-1] >= n:
        raise ValueError(f"keep set {ks} has labels outside 0..{n - 1}")
    return ks


@singledispatch
def restrict(x, keep: Iterable[int]):
    """Restrict a ranking, tournament, or profile to a candidate subset.

    Survivors are relabeled densely: new label i is old candidate
    ``sorted(keep)[i]`` (see :func:`restriction_labels`), which makes the
    relabeling recorded and invertible.  Rankings keep their relative
    order, tournaments become the induced subtournament, and profiles are
    restricted voter by voter.
    """
    raise TypeError(f"cannot restrict {type(x).__name__}")


@restrict.register
def _(x: Ranking, keep: Iterable[int]) -> Ranking:
    ks = _checked_keep(keep, x.n)
    new = {old: i for i, old in enumerate(ks)}
    return Ranking(new[v] for v in x.order if v in new)


@restrict.register
def _(x: Tournament, keep: Iterable[int]) -> Tournament:
    ks = _checked_keep(keep, x.n)
    return Tournament(x.beats[np.ix_(ks, ks)])


@restrict.register
def _(x: Profile, keep: Iterable[int]) -> Profile:
    ks = _checked_keep(keep, x.n)
    lut = np.full(x.n, -1, np.int32)
    lut[ks] = np.arange(len(ks), dtype=np.int32)
    mask = np.isin(x.rows, ks)
    sub = x.rows[mask].reshape(x.size, len(ks))
    return Profile._from_rows(lut[sub])


@dataclass(frozen=True)
class Transitivity:
    """Result of a transitivity check; truthy exactly when transitive.

    ``order`` is the unique linear order (descending out-degree) when
    transitive; ``violation`` is a 3-cycle ``(x, y, z)`` with x beats y,
    y beats z, z beats x when not.
    """

    transitive: bool
    order: tuple[int, ...] | None
    violation: tuple[int, int, int] | None

    def __bool__(self) -> bool:
        return self.transitive


def is_transitive(t: Tournament) -> Transitivity:
    """Decide transitivity; a tournament is transitive iff it has no 3-cycle."""
    deg = t.beats.sum(axis=1)
    if np.unique(deg).size == t.n:
        # out-degrees n-1, n-2, ..., 0 force the linear order
        order = tuple(int(v) for v in np.argsort(-deg, kind="stable"))
        return Transitivity(True, order, None)
    b = t.beats
    two_step = b.astype(np.float32) @ b.astype(np.float32)
    cyc = b & (two_step.T > 0)
    i, j = (int(v) for v in np.argwhere(cyc)[0])
    k = int(np.flatnonzero(b[j] & b[:, i])[0])
    return Transitivity(False, None, (i, j, k))


_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a fixed, well-known 64-bit mixing function."""
    z = x & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _mix64_vec(z: np.ndarray) -> np.ndarray:
    # same finalizer, vectorized over uint64 (wrapping arithmetic)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def random_tournament(n: int, seed: int) -> Tournament:
    """Orient each pair by one bit of a seeded SplitMix64 stream.

    Word t of the stream is ``mix64(seed + (t+1) * golden)``; pairs are
    consumed in row-major upper-triangle order, one word per pair, top bit
    deciding the arc.  Identical (n, seed) gives an identical tournament
    on every platform.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    beats = np.zeros((n, n), dtype=bool)
    m = n * (n - 1) // 2
    if m:
        idx = np.arange(1, m + 1, dtype=np.uint64)
        state = np.uint64(seed & _MASK64) + idx * np.uint64(_GOLDEN)
        bits = (_mix64_vec(state) >> np.uint64(63)).astype(bool)
        iu, ju = np.triu_indices(n, k=1)
        beats[iu, ju] = bits
        beats[ju, iu] = ~bits
    return Tournament(beats)


def transitive_tournament(order: Sequence[int] | Ranking) -> Tournament:
    """The transitive tournament whose linear order is ``order``."""
    r = order if isinstance(order, Ranking) else Ranking(order)
    pos = np.empty(r.n, np.int32)
    pos[list(r.order)] = np.arange(r.n, dtype=np.int32)
    return Tournament(pos[:, None] < pos[None, :])
