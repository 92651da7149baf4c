import numpy as np
import pytest

from conftest import all_tournaments, seeded_ensemble
from voterset import (
    GenerationMismatchError,
    MalformedProfileError,
    OrientationError,
    ParityError,
    Profile,
    Tournament,
    extend_pair,
    is_transitive,
    majority_pattern,
    margins,
    mcgarvey_baseline,
    random_tournament,
    restrict,
    segment_partition,
    synthesize,
    transitive_tournament,
    voter_count_bound,
)
from voterset.construct import _synthesize_by_folding
from voterset.transitive import greedy_transitive_chain


@pytest.mark.parametrize(
    "n,expected",
    [(1, 1), (2, 1), (3, 3), (4, 3), (5, 3), (6, 5), (7, 5), (8, 5), (512, 503)],
)
def test_voter_count_bound(n, expected):
    assert voter_count_bound(n) == expected


class TestSegmentPartition:
    def test_cycle_puts_third_candidate_in_mu(self, cyclic3):
        seg = segment_partition(cyclic3, 0, 1)
        assert (seg.gamma, seg.delta, seg.sigma, seg.mu) == ((), (), (), (2,))

    def test_middle_candidate_lands_in_delta(self):
        t = Tournament([[0, 1, 1], [0, 0, 0], [0, 1, 0]])  # 0>1, 0>2, 2>1
        seg = segment_partition(t, 0, 1)
        assert (seg.gamma, seg.delta, seg.sigma, seg.mu) == ((), (2,), (), ())

    def test_dominant_a_and_dominated_b_fill_delta(self):
        # 0 beats everyone, everyone beats 1, 2 beats 3
        t = Tournament(
            [[0, 1, 1, 1], [0, 0, 0, 0], [0, 1, 0, 1], [0, 1, 0, 0]]
        )
        seg = segment_partition(t, 0, 1)
        assert (seg.gamma, seg.delta, seg.sigma, seg.mu) == ((), (2, 3), (), ())

    def test_membership_conditions_hold(self):
        for seed in range(20):
            t = random_tournament(7, seed)
            a, b = (0, 1) if t.beats[0, 1] else (1, 0)
            seg = segment_partition(t, a, b)
            for x in seg.gamma:
                assert t.beats[x, b] and t.beats[x, a]
            for x in seg.delta:
                assert t.beats[x, b] and t.beats[a, x]
            for x in seg.sigma:
                assert t.beats[b, x] and t.beats[a, x]
            for x in seg.mu:
                assert t.beats[b, x] and t.beats[x, a]
            assert sorted(seg.gamma + seg.delta + seg.sigma + seg.mu) == [
                x for x in range(7) if x not in (a, b)
            ]

    def test_wrong_orientation_rejected(self, cyclic3):
        with pytest.raises(OrientationError):
            segment_partition(cyclic3, 1, 0)  # 0 beats 1, not the reverse

    def test_bad_pair_rejected(self, cyclic3):
        with pytest.raises(ValueError):
            segment_partition(cyclic3, 0, 0)
        with pytest.raises(ValueError):
            segment_partition(cyclic3, 0, 5)


class TestExtendPair:
    def test_cycle_by_hand(self, cyclic3):
        out = extend_pair(cyclic3, 0, 1, Profile([[0]]))
        assert out.rows.tolist() == [[1, 2, 0], [0, 1, 2], [2, 0, 1]]
        assert majority_pattern(out) == cyclic3

    def test_delta_case_by_hand(self):
        t = Tournament([[0, 1, 1], [0, 0, 0], [0, 1, 0]])
        out = extend_pair(t, 0, 1, Profile([[0]]))
        assert out.rows.tolist() == [[1, 2, 0], [0, 2, 1], [0, 2, 1]]
        assert majority_pattern(out) == t

    def test_grows_by_exactly_two(self):
        for seed in range(10):
            t = random_tournament(5, seed)
            old = [v for v in range(5) if v not in (0, 1)]
            sub = restrict(t, old)
            base, _ = synthesize(sub)
            a, b = (0, 1) if t.beats[0, 1] else (1, 0)
            out = extend_pair(t, a, b, base)
            assert out.size == base.size + 2
            assert majority_pattern(out) == t

    def test_even_profile_rejected(self, cyclic3):
        with pytest.raises(ParityError):
            extend_pair(cyclic3, 0, 1, Profile([[0], [0]]))

    def test_wrong_generator_rejected(self):
        # old profile says 2 beats 3 but the tournament says otherwise
        t = transitive_tournament([0, 1, 2, 3])
        with pytest.raises(GenerationMismatchError) as exc:
            extend_pair(t, 0, 1, Profile([[1, 0]]))
        assert exc.value.pair == (2, 3)

    def test_wrong_width_rejected(self, cyclic3):
        with pytest.raises(MalformedProfileError):
            extend_pair(cyclic3, 0, 1, Profile([[0, 1]]))

    def test_tails_cancel_and_wrap_count_splits(self):
        for seed in range(15):
            n = 6 + (seed % 3)
            t = random_tournament(n, seed)
            old = list(range(2, n))
            base, _ = synthesize(restrict(t, old))
            a, b = (0, 1) if t.beats[0, 1] else (1, 0)
            out = extend_pair(t, a, b, base)
            r = base.size
            tail1, tail2 = out[r], out[r + 1]
            assert restrict(tail1, old) == restrict(tail2, old).reversed()
            pos = out.positions()
            b_first = int((pos[:r, b] < pos[:r, a]).sum())
            assert b_first == (r + 1) // 2


class TestSynthesize:
    def test_transitive_needs_one_voter(self):
        for n in (1, 2, 5, 9):
            t = transitive_tournament(list(range(n))[::-1])
            profile, report = synthesize(t)
            assert report.final_size == 1 and profile.size == 1
            assert report.steps == () and not report.base_trimmed

    def test_cycle_needs_three(self, cyclic3):
        profile, report = synthesize(cyclic3)
        assert profile.rows.tolist() == [[2, 0, 1], [1, 2, 0], [0, 1, 2]]
        assert report.final_size == 3 == report.bound
        assert report.base_trimmed and report.base_chain.vertices == (0,)
        assert report.steps == ((1, 2),)

    def test_seeded_eight_within_bound(self):
        profile, report = synthesize(random_tournament(8, 7))
        assert report.final_size % 2 == 1
        assert report.final_size <= 5  # bound for n=8: k=3, different parity

    def test_all_three_candidate_patterns(self):
        for t in all_tournaments(3):
            profile, report = synthesize(t)
            assert majority_pattern(profile) == t
            assert report.final_size == (1 if is_transitive(t) else 3)

    def test_reconstructs_exactly(self):
        for t in all_tournaments(4):
            profile, report = synthesize(t)
            assert majority_pattern(profile) == t
        for n in (5, 9, 16):
            for t in seeded_ensemble(n, 25, master=3 * n):
                profile, report = synthesize(t)
                assert majority_pattern(profile) == t
                assert report.final_size == 1 + 2 * len(report.steps) <= report.bound

    def test_margins_all_odd(self):
        t = random_tournament(9, 11)
        profile, _ = synthesize(t)
        m = margins(profile).margin
        off = ~np.eye(9, dtype=bool)
        assert np.all(m[off] % 2 == 1)

    def test_report_chain_is_prefix_of_greedy(self):
        for seed in range(10):
            t = random_tournament(11, seed)
            _, report = synthesize(t)
            full = greedy_transitive_chain(t).vertices
            used = report.base_chain.vertices
            assert used == full[: len(used)]
            assert len(used) + int(report.base_trimmed) == len(full)

    def test_engine_matches_extend_pair_fold(self):
        for n in (3, 5, 8, 13):
            for seed in (0, 5):
                t = random_tournament(n, seed)
                profile, report = synthesize(t)
                base = list(report.base_chain.vertices)
                rest = np.array(
                    sorted(set(range(n)) - set(base)), dtype=np.int32
                )
                folded, steps = _synthesize_by_folding(t, base, rest)
                assert folded == profile
                assert steps == list(report.steps)


class TestMcGarvey:
    def test_two_candidates(self):
        t = Tournament([[0, 1], [0, 0]])
        p = mcgarvey_baseline(t)
        assert p.rows.tolist() == [[0, 1], [0, 1]]
        assert margins(p).margin[0, 1] == 2

    def test_cycle_six_voters(self, cyclic3):
        p = mcgarvey_baseline(cyclic3)
        assert p.size == 6
        assert majority_pattern(p) == cyclic3

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_size_and_margins(self, n):
        t = random_tournament(n, n)
        p = mcgarvey_baseline(t)
        assert p.size == n * (n - 1)
        m = margins(p).margin
        off = ~np.eye(n, dtype=bool)
        assert set(np.abs(m[off]).tolist()) == {2}
        assert majority_pattern(p) == t

    def test_single_candidate_rejected(self):
        with pytest.raises(ValueError):
            mcgarvey_baseline(Tournament([[0]]))
