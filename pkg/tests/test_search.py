from math import gcd

import pytest

from stcores import (
    InfiniteFamilyError,
    Partition,
    count_twin_free_tuples,
    enumerate_core,
    enumerate_core_bounded,
    enumerate_distinct_by_perimeter,
    enumerate_odd_by_perimeter,
    fibonacci,
    gap_poset,
    has_distinct_parts,
    has_odd_parts,
    is_t_core,
    is_twin_free,
    to_beta,
)
from stcores.search import FILTERS, canonical_key

from oracles import brute_partitions_upto, perimeter_family


class TestGapPoset:
    def test_small_examples(self):
        assert gap_poset(3, 5).gaps == (1, 2, 4, 7)
        assert gap_poset(2, 3).gaps == (1,)
        assert gap_poset(3, 4).gaps == (1, 2, 5)

    def test_trivial_generator(self):
        assert gap_poset(1, 9).gaps == ()
        assert gap_poset(9, 1).gaps == ()
        assert gap_poset(1, 1).gaps == ()
        assert gap_poset(1, 9).frobenius == -1

    def test_genus_and_frobenius_formulas(self):
        for s in range(2, 13):
            for t in range(s + 1, 13):
                if gcd(s, t) != 1:
                    continue
                poset = gap_poset(s, t)
                assert len(poset.gaps) == (s - 1) * (t - 1) // 2
                assert poset.frobenius == s * t - s - t

    def test_lower_covers(self):
        poset = gap_poset(3, 5)
        assert poset.lower_covers(7) == (4, 2)
        assert poset.lower_covers(4) == (1,)
        assert poset.lower_covers(1) == ()

    @pytest.mark.parametrize("s,t,common", [(2, 4, 2), (6, 9, 3), (4, 4, 4), (12, 12, 12)])
    def test_non_coprime(self, s, t, common):
        with pytest.raises(InfiniteFamilyError) as err:
            gap_poset(s, t)
        assert err.value.common == common
        assert "infinite family" in str(err.value)
        assert str(common) in str(err.value)

    @pytest.mark.parametrize("s,t", [(0, 3), (3, 0), (-1, 2)])
    def test_rejects_nonpositive(self, s, t):
        with pytest.raises(ValueError):
            gap_poset(s, t)


class TestEnumerateCore:
    def test_3_5_distinct(self):
        result = enumerate_core(3, 5, "distinct")
        assert result.count == 4
        assert [lam.parts for lam in result.partitions] == [(), (1,), (2,), (3, 1)]

    def test_5_7_distinct(self):
        result = enumerate_core(5, 7, "distinct")
        assert result.count == 16
        assert result.max_size == 21
        assert result.max_size_witnesses == (Partition((9, 5, 4, 2, 1)),)
        listed = {
            (), (1,), (2,), (3,), (4,), (2, 1), (3, 1), (5, 1), (3, 2),
            (4, 2, 1), (6, 2, 1), (4, 3, 1), (7, 3, 2), (5, 4, 2, 1),
            (8, 4, 3, 1), (9, 5, 4, 2, 1),
        }
        assert {lam.parts for lam in result.partitions} == listed

    def test_3_4_all(self):
        result = enumerate_core(3, 4, "all")
        assert result.count == 5

    def test_2_3_all_against_micro_oracle(self):
        # independent generation of everything small, filtered by hooks
        naive = {
            lam.parts
            for lam in brute_partitions_upto(4)
            if is_t_core(lam, 2) and is_t_core(lam, 3)
        }
        result = enumerate_core(2, 3, "all")
        assert {lam.parts for lam in result.partitions} == naive == {(), (1,)}

    def test_one_core_is_empty_only(self):
        result = enumerate_core(1, 9)
        assert [lam.parts for lam in result.partitions] == [()]
        assert enumerate_core(1, 1).count == 1

    def test_infinite_family_raises(self):
        with pytest.raises(InfiniteFamilyError):
            enumerate_core(2, 4, "distinct")
        with pytest.raises(InfiniteFamilyError):
            enumerate_core(7, 7)

    def test_unknown_filter(self):
        with pytest.raises(ValueError) as err:
            enumerate_core(3, 4, "weird")
        assert "distinct" in str(err.value)

    @pytest.mark.parametrize("s,t", [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (4, 5)])
    def test_matches_bounded_oracle_all_filters(self, s, t):
        # the bound sum(gaps) provably covers every core of the pair
        bound = sum(gap_poset(s, t).gaps)
        naive_all = enumerate_core_bounded(s, t, "all", bound).partitions
        for name, predicate in FILTERS.items():
            fast = enumerate_core(s, t, name)
            slow = tuple(lam for lam in naive_all if predicate(lam))
            assert fast.partitions == slow

    def test_canonical_order_and_determinism(self):
        result = enumerate_core(5, 7, "distinct")
        assert list(result.partitions) == sorted(result.partitions, key=canonical_key)
        again = enumerate_core(5, 7, "distinct")
        assert result == again

    def test_distinct_results_have_twin_free_downclosed_betas(self):
        poset = gap_poset(7, 9)
        gaps = set(poset.gaps)
        for lam in enumerate_core(7, 9, "distinct").partitions:
            beta = to_beta(lam)
            assert is_twin_free(beta)
            assert beta <= gaps
            for x in beta:
                for below in poset.lower_covers(x):
                    assert below in beta

    def test_fibonacci_counts(self):
        for s in range(1, 13):
            assert enumerate_core(s, s + 1, "distinct").count == fibonacci(s + 1)

    def test_self_conjugate_filter(self):
        result = enumerate_core(4, 5, "self_conjugate")
        for lam in result.partitions:
            assert FILTERS["self_conjugate"](lam)
        assert result.count == 6  # C(2 + 2, 2)


class TestEnumerateCoreBounded:
    def test_non_coprime_staircases(self):
        result = enumerate_core_bounded(2, 4, "all", 6)
        assert {lam.parts for lam in result.partitions} == {(), (1,), (2, 1), (3, 2, 1)}

    def test_bound_truncates(self):
        assert enumerate_core_bounded(2, 4, "all", 2).count == 2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            enumerate_core_bounded(0, 3, "all", 5)
        with pytest.raises(ValueError):
            enumerate_core_bounded(2, 3, "all", -1)


class TestPerimeterEnumerators:
    def test_distinct_examples(self):
        assert [lam.parts for lam in enumerate_distinct_by_perimeter(0)] == [()]
        assert {lam.parts for lam in enumerate_distinct_by_perimeter(5)} == {
            (5,), (4, 1), (4, 2), (4, 3), (3, 2, 1),
        }
        assert len(enumerate_distinct_by_perimeter(6)) == 8

    def test_odd_examples(self):
        assert [lam.parts for lam in enumerate_odd_by_perimeter(1)] == [(1,)]
        assert {lam.parts for lam in enumerate_odd_by_perimeter(5)} == {
            (5,), (3, 3, 3), (3, 3, 1), (3, 1, 1), (1, 1, 1, 1, 1),
        }
        assert {lam.parts for lam in enumerate_odd_by_perimeter(4)} == {
            (1, 1, 1, 1), (3, 3), (3, 1),
        }

    def test_counts_are_fibonacci(self):
        for m in range(1, 21):
            want = fibonacci(m)
            assert len(enumerate_distinct_by_perimeter(m)) == want
            assert len(enumerate_odd_by_perimeter(m)) == want

    def test_shapes_and_perimeters(self):
        for m in range(0, 13):
            for lam in enumerate_distinct_by_perimeter(m):
                assert has_distinct_parts(lam)
                assert (lam.parts[0] + lam.ell - 1 if lam else 0) == m
            for lam in enumerate_odd_by_perimeter(m):
                assert has_odd_parts(lam)
                assert (lam.parts[0] + lam.ell - 1 if lam else 0) == m

    def test_against_box_oracle(self):
        for m in range(0, 13):
            want_d = {lam.parts for lam in perimeter_family(m, has_distinct_parts)}
            want_o = {lam.parts for lam in perimeter_family(m, has_odd_parts)}
            assert {lam.parts for lam in enumerate_distinct_by_perimeter(m)} == want_d
            assert {lam.parts for lam in enumerate_odd_by_perimeter(m)} == want_o

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            enumerate_distinct_by_perimeter(-1)
        with pytest.raises(ValueError):
            enumerate_odd_by_perimeter(-2)


class TestTwinFreeTuples:
    def test_degenerate_universe(self):
        for d in range(1, 5):
            assert count_twin_free_tuples(1, d, exclude_last=False) == 1
            assert count_twin_free_tuples(1, d, exclude_last=True) == 1

    def test_two_element_universe(self):
        for d in range(1, 6):
            assert count_twin_free_tuples(2, d, exclude_last=False) == d + 1
            assert count_twin_free_tuples(2, d, exclude_last=True) == d

    def test_pinned_value_s5_d2(self):
        # d(3d + 2) at d = 2
        assert count_twin_free_tuples(5, 2, exclude_last=True) == 16

    def test_tuples_match_distinct_core_enumeration(self):
        for d in range(1, 4):
            for s in range(1, 9):
                t = d * s - 1
                if t < 1:
                    continue
                assert (
                    count_twin_free_tuples(s, d, exclude_last=True)
                    == enumerate_core(s, t, "distinct").count
                )

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            count_twin_free_tuples(0, 1, exclude_last=False)
        with pytest.raises(ValueError):
            count_twin_free_tuples(3, 0, exclude_last=False)
