import pytest

from conftest import all_tournaments
from voterset import (
    SizeCapError,
    TransitiveChain,
    chain_floor,
    greedy_transitive_chain,
    max_transitive_exhaustive,
    random_tournament,
    transitive_tournament,
    verify_chain,
)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 2), (4, 3), (7, 3), (8, 4), (64, 7)])
def test_chain_floor(n, expected):
    assert chain_floor(n) == expected


def test_greedy_full_chain_on_transitive():
    t = transitive_tournament([3, 0, 2, 1])
    assert greedy_transitive_chain(t).vertices == (3, 0, 2, 1)


def test_greedy_cycle_picks_lowest_label(cyclic3):
    # all out-degrees tie at 1, so the walk starts at 0 and follows its arc
    assert greedy_transitive_chain(cyclic3).vertices == (0, 1)


def test_greedy_reaches_guaranteed_floor_at_64():
    t = random_tournament(64, 7)
    chain = greedy_transitive_chain(t)
    assert verify_chain(t, chain)
    assert len(chain) >= 7


def test_exhaustive_on_transitive_five():
    t = transitive_tournament([4, 2, 0, 1, 3])
    assert max_transitive_exhaustive(t).vertices == (4, 2, 0, 1, 3)


def test_exhaustive_cycle_is_lex_least_arc(cyclic3):
    # three max chains exist, one per arc; (0, 1) is the least
    assert max_transitive_exhaustive(cyclic3).vertices == (0, 1)


def test_exhaustive_refuses_above_cap():
    with pytest.raises(SizeCapError) as exc:
        max_transitive_exhaustive(random_tournament(6, 0), n_cap=5)
    assert exc.value.cap == 5


def test_verify_chain_rejects_bad_chains(cyclic3):
    assert not verify_chain(cyclic3, TransitiveChain((0, 2)))  # 2 beats 0
    assert not verify_chain(cyclic3, TransitiveChain((0, 0)))
    assert not verify_chain(cyclic3, TransitiveChain(()))
    assert not verify_chain(cyclic3, TransitiveChain((0, 5)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_dominates_greedy_everywhere(n):
    for t in all_tournaments(n):
        greedy = greedy_transitive_chain(t)
        exact = max_transitive_exhaustive(t)
        assert verify_chain(t, greedy) and verify_chain(t, exact)
        assert chain_floor(n) <= len(exact)
        assert len(greedy) <= len(exact)


def test_exhaustive_dominates_greedy_on_random_n6():
    for seed in range(200):
        t = random_tournament(6, seed)
        assert len(greedy_transitive_chain(t)) <= len(max_transitive_exhaustive(t))
