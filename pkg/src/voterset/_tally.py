"""Pairwise before-counts, the inner loop of every majority tally.

Kept separate so the hot path can be JIT compiled once and reused by the
whole package.  Falls back to blocked numpy if numba is unavailable.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

# below this many voter*pair operations the numpy path wins (no JIT dispatch)
_JIT_MIN_WORK = 1 << 16


if njit is not None:

    @njit(cache=True)
    def _counts_compiled(pos):  # pragma: no cover - exercised via pair_counts
        r, n = pos.shape
        out = np.zeros((n, n), np.int32)
        for v in range(r):
            pv = pos[v]
            for i in range(n):
                x = pv[i]
                row = out[i]
                for j in range(n):
                    row[j] += x < pv[j]
        return out

else:  # pragma: no cover
    _counts_compiled = None


def _counts_blocked(pos: np.ndarray) -> np.ndarray:
    r, n = pos.shape
    out = np.zeros((n, n), np.int32)
    step = max(1, (1 << 22) // (n * n))
    for s in range(0, r, step):
        blk = pos[s : s + step]
        out += (blk[:, :, None] < blk[:, None, :]).sum(axis=0, dtype=np.int32)
    return out


def pair_counts(pos: np.ndarray) -> np.ndarray:
    """Count, for every ordered pair (i, j), the voters placing i before j.

    ``pos`` holds one row per voter with ``pos[v, x]`` the rank candidate x
    gets from voter v (0 = most preferred).  Returns an (n, n) int32 matrix
    with zero diagonal; entry (i, j) plus entry (j, i) equals the voter count.
    """
    r, n = pos.shape
    if r == 0:
        return np.zeros((n, n), np.int32)
    if _counts_compiled is not None and r * n * n >= _JIT_MIN_WORK and n < 2**15:
        return _counts_compiled(np.ascontiguousarray(pos, dtype=np.int16))
    return _counts_blocked(pos)
