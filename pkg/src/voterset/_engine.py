"""Compiled inner loop of the pair-extension synthesis.

One call builds the whole voter matrix: the seed voter reading the base
chain, then one two-voter extension per candidate pair.  Voters grow
outward in lockstep, so all of them live in a shared column window of a
preallocated matrix and each step costs O(r + m) writes.

Each step re-reads what it wrote and checks the two structural facts the
construction's correctness rests on: the two tail voters, restricted to
the old candidates, are exact reverses, and exactly (r + 1) / 2 of the
first r voters open with the pair's loser.  Callers still re-tally the
finished profile independently.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None


def _synth_rows_impl(beats, base, rest):
    n = beats.shape[0]
    n_steps = rest.shape[0] // 2
    rows = np.empty((1 + 2 * n_steps, n), np.int32)
    steps = np.empty((n_steps, 2), np.int32)
    lo = n_steps
    hi = n_steps + base.shape[0]
    for i in range(base.shape[0]):
        rows[0, lo + i] = base[i]
    processed = np.zeros(n, np.bool_)
    for i in range(base.shape[0]):
        processed[base[i]] = True
    r = 1
    for s in range(n_steps):
        u = rest[2 * s]
        v = rest[2 * s + 1]
        if beats[u, v]:
            a, b = u, v
        else:
            a, b = v, u
        m = hi - lo
        ng = nd = ns = nm = 0
        for x in range(n):
            if processed[x]:
                if beats[x, b]:
                    if beats[a, x]:
                        nd += 1
                    else:
                        ng += 1
                elif beats[a, x]:
                    ns += 1
                else:
                    nm += 1
        w1 = lo - 1
        # tail one: gamma a delta b sigma mu; tail two: the mirrored form
        a1 = ng
        d1 = ng + 1
        b1 = ng + 1 + nd
        s1 = ng + nd + 2
        m1 = ng + nd + ns + 2
        a2 = nm
        s2 = nm + 1
        d2 = nm + 1 + ns
        g2 = nm + 1 + ns + nd
        rows[r, w1 + a1] = a
        rows[r, w1 + b1] = b
        rows[r + 1, w1 + a2] = a
        rows[r + 1, w1 + m + 1] = b
        cg = cd = cs = cm = 0
        for x in range(n):
            if not processed[x]:
                continue
            if beats[x, b]:
                if beats[a, x]:
                    rows[r, w1 + d1 + cd] = x
                    rows[r + 1, w1 + d2 + (nd - 1 - cd)] = x
                    cd += 1
                else:
                    rows[r, w1 + cg] = x
                    rows[r + 1, w1 + g2 + (ng - 1 - cg)] = x
                    cg += 1
            elif beats[a, x]:
                rows[r, w1 + s1 + cs] = x
                rows[r + 1, w1 + s2 + (ns - 1 - cs)] = x
                cs += 1
            else:
                rows[r, w1 + m1 + cm] = x
                rows[r + 1, w1 + (nm - 1 - cm)] = x
                cm += 1
        h = (r + 1) // 2
        for i in range(h):
            rows[i, lo - 1] = b
            rows[i, hi] = a
        for i in range(h, r):
            rows[i, lo - 1] = a
            rows[i, hi] = b

        # readback: stripped tails must be exact reverses of each other
        p1 = 0
        p2 = m + 1
        for _ in range(m):
            v1 = rows[r, w1 + p1]
            while v1 == a or v1 == b:
                p1 += 1
                v1 = rows[r, w1 + p1]
            v2 = rows[r + 1, w1 + p2]
            while v2 == a or v2 == b:
                p2 -= 1
                v2 = rows[r + 1, w1 + p2]
            if v1 != v2:
                raise RuntimeError("internal error: extension tails do not cancel")
            p1 += 1
            p2 -= 1
        # readback: the loser opens exactly (r + 1) / 2 of the wrapped voters
        cb = 0
        for i in range(r):
            if rows[i, lo - 1] == b:
                cb += 1
        if cb != h:
            raise RuntimeError("internal error: wrap split is not (r + 1) / 2")

        steps[s, 0] = a
        steps[s, 1] = b
        processed[a] = True
        processed[b] = True
        lo -= 1
        hi += 1
        r += 2
    return rows, steps


if njit is not None:
    synth_rows = njit(cache=True)(_synth_rows_impl)
else:  # pragma: no cover
    synth_rows = None
