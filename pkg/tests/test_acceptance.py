"""End-to-end acceptance suite.

One test per criterion; each prints a single `criterion N (...): PASS/FAIL`
line (run with `pytest tests/test_acceptance.py -v -s` to see them) and
enforces its stated wall-clock budget.  All checks are exact integer
comparisons.
"""

import time
from contextlib import contextmanager
from math import gcd
from pathlib import Path

from stcores import (
    Partition,
    anderson_count,
    compositions_of,
    conjugate,
    count_twin_free_tuples,
    distinct_to_odd,
    enumerate_core,
    enumerate_distinct_by_perimeter,
    enumerate_odd_by_perimeter,
    fibonacci,
    fms_selfconjugate_count,
    from_beta,
    has_distinct_parts,
    is_t_core_beta,
    is_twin_free,
    lambda_d,
    lambda_o,
    n_poly,
    odd_to_distinct,
    partitions_of,
    perimeter,
    to_beta,
)

from oracles import hook_multiset

GOLDEN = Path(__file__).parent / "data" / "distinct_core_counts_12x12.csv"


@contextmanager
def criterion(number: int, label: str, budget: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {number} ({label}): FAIL ({time.perf_counter() - start:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"
    tail = f", budget {budget:.0f}s" if budget is not None else ""
    print(f"criterion {number} ({label}): PASS ({elapsed:.2f}s{tail})")


def test_criterion_1_fibonacci_count():
    with criterion(1, "(s, s+1)-core distinct counts are Fibonacci", budget=10.0):
        for s in range(1, 21):
            assert enumerate_core(s, s + 1, "distinct").count == fibonacci(s + 1)


def test_criterion_2_table_reproduction():
    with criterion(2, "12x12 distinct-core table matches the published grid", budget=30.0):
        rows = GOLDEN.read_text().splitlines()
        assert len(rows) == 13
        expected = {}
        for s, row in enumerate(rows[1:], start=1):
            cells = row.split(",")
            assert int(cells[0]) == s
            for t, cell in enumerate(cells[1:], start=1):
                expected[(s, t)] = None if cell == "inf" else int(cell)
        assert len(expected) == 144
        # published spot values
        assert expected[(5, 7)] == 16
        assert expected[(7, 9)] == 64
        assert expected[(8, 11)] == 101
        assert expected[(9, 11)] == 256
        assert expected[(11, 12)] == 144
        assert expected[(5, 12)] == 38
        assert expected[(7, 12)] == 114
        assert expected[(1, 1)] == 1
        for (s, t), want in expected.items():
            if gcd(s, t) != 1:
                assert want is None
            else:
                assert enumerate_core(s, t, "distinct").count == want, (s, t)


def test_criterion_3_generalized_fibonacci():
    with criterion(3, "(s, ds-1) counts = twin-free tuples = polynomial"):
        for d in range(1, 4):
            for s in range(1, 9):
                want = n_poly(s)(d)
                assert count_twin_free_tuples(s, d, exclude_last=True) == want
                t = d * s - 1
                if t >= 1:
                    assert enumerate_core(s, t, "distinct").count == want
        published = [(1,), (0, 1), (0, 2), (0, 2, 1), (0, 2, 3), (0, 2, 5, 1), (0, 2, 7, 4)]
        assert [n_poly(s).coeffs for s in range(1, 8)] == published


# (mu, distinct image, odd image) for every composition of weight <= 5
TRIPLES_UP_TO_5 = [
    ((), (), ()),
    ((1,), (1,), (1,)),
    ((1, 1), (2,), (1, 1)),
    ((1, 1, 1), (3,), (1, 1, 1)),
    ((2, 1), (2, 1), (3,)),
    ((1, 1, 1, 1), (4,), (1, 1, 1, 1)),
    ((1, 2, 1), (3, 1), (3, 3)),
    ((2, 1, 1), (3, 2), (3, 1)),
    ((1, 1, 1, 1, 1), (5,), (1, 1, 1, 1, 1)),
    ((1, 1, 2, 1), (4, 1), (3, 3, 3)),
    ((1, 2, 1, 1), (4, 2), (3, 3, 1)),
    ((2, 1, 1, 1), (4, 3), (3, 1, 1)),
    ((2, 2, 1), (3, 2, 1), (5,)),
]


def test_criterion_4_perimeter_euler_analog():
    with criterion(4, "perimeter-M families both Fibonacci, explicit bijection"):
        for m in range(1, 21):
            want = fibonacci(m)
            assert len(enumerate_distinct_by_perimeter(m)) == want
            assert len(enumerate_odd_by_perimeter(m)) == want
        for m in range(0, 15):
            family_d = enumerate_distinct_by_perimeter(m)
            family_o = enumerate_odd_by_perimeter(m)
            mapped = [distinct_to_odd(lam) for lam in family_d]
            assert len(set(mapped)) == len(mapped)
            assert set(mapped) == set(family_o)
            for before, after in zip(family_d, mapped):
                assert perimeter(after) == perimeter(before) == m
                assert odd_to_distinct(after) == before
        triples = [
            (mu, lambda_d(mu).parts, lambda_o(mu).parts)
            for m in range(0, 6)
            for mu in compositions_of(m)
        ]
        assert len(triples) == 13
        assert triples == TRIPLES_UP_TO_5


def test_criterion_5_anderson_and_selfconjugate_counts():
    with criterion(5, "binomial formulas for all and self-conjugate cores", budget=60.0):
        pairs = [
            (s, t)
            for s in range(1, 15)
            for t in range(s + 1, 16 - s)
            if gcd(s, t) == 1
        ]
        assert (2, 3) in pairs and (7, 8) in pairs
        for s, t in pairs:
            assert enumerate_core(s, t, "all").count == anderson_count(s, t), (s, t)
            assert (
                enumerate_core(s, t, "self_conjugate").count
                == fms_selfconjugate_count(s, t)
            ), (s, t)


MAX_SIZES_S_PLUS_2 = {3: 4, 5: 21, 7: 65, 9: 155, 11: 315, 13: 574, 15: 966}


def test_criterion_6_conjecture2_and_extremes():
    with criterion(6, "(s, s+2) powers of two and extremal partition shape", budget=120.0):
        for s in range(3, 16, 2):
            result = enumerate_core(s, s + 2, "distinct")
            assert result.count == 2 ** (s - 1)
            assert result.max_size == MAX_SIZES_S_PLUS_2[s]
            witnesses = result.max_size_witnesses
            assert len(witnesses) == 1
            top = witnesses[0]
            assert top.ell == (s - 1) * (s + 5) // 8
            assert top.parts[0] == 3 * (s * s - 1) // 8
            if s == 7:
                assert top == Partition((18, 12, 11, 7, 6, 5, 3, 2, 1))


def test_criterion_7_max_size_next_to_diagonal():
    with criterion(7, "(s, s+1) max size floor(s(s+1)/6) and witness counts"):
        for s in range(1, 19):
            result = enumerate_core(s, s + 1, "distinct")
            assert result.max_size == s * (s + 1) // 6, s
            want_witnesses = 2 if s >= 4 and s % 3 == 1 else 1
            assert len(result.max_size_witnesses) == want_witnesses, s


def test_criterion_8_property_suites():
    with criterion(8, "encoding round trips and characterizations, size <= 14", budget=5.0):
        everything = [lam for n in range(15) for lam in partitions_of(n)]
        assert len(everything) == 508
        for lam in everything:
            beta = to_beta(lam)
            assert from_beta(beta) == lam
            assert is_twin_free(beta) == has_distinct_parts(lam)
            assert conjugate(conjugate(lam)) == lam
            hooks = set(hook_multiset(lam))
            for t in range(1, 11):
                assert (t not in hooks) == is_t_core_beta(beta, t)
        for mask in range(1 << 14):
            beta = frozenset(i + 1 for i in range(14) if mask >> i & 1)
            assert to_beta(from_beta(beta)) == beta
