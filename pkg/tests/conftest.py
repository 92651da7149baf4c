import itertools

import numpy as np
import pytest

from voterset import Tournament, random_tournament


def all_tournaments(n):
    """Every labeled tournament on n candidates, one bit per pair."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        beats = np.zeros((n, n), dtype=bool)
        for p, (i, j) in enumerate(pairs):
            if code >> p & 1:
                beats[i, j] = True
            else:
                beats[j, i] = True
        yield Tournament(beats)


def seeded_ensemble(n, count, master=0):
    return [random_tournament(n, master + i) for i in range(count)]


@pytest.fixture
def cyclic3():
    # 0 beats 1, 1 beats 2, 2 beats 0
    return Tournament([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
