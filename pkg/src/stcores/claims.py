"""Verification claims: each pits an enumerator against a closed form.

A claim produces one case per checked identity; a report collects the
cases, an overall verdict, and the wall-clock time.  The enumeration side
is always an exhaustive search from `search`; the expected side is a
formula, so corrupting either one makes the claim fail loudly.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import chain
from math import gcd
from typing import Callable

from . import search, sequences


@dataclass(frozen=True)
class ClaimCase:
    params: dict
    expected: str
    got: str
    ok: bool


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    range: str
    cases: tuple[ClaimCase, ...]
    passed: bool
    seconds: float

    @property
    def mismatches(self) -> tuple[ClaimCase, ...]:
        return tuple(c for c in self.cases if not c.ok)


@dataclass(frozen=True)
class Claim:
    name: str
    summary: str
    defaults: dict
    params: Callable[..., list[dict]]
    cases: Callable[[dict], "list[ClaimCase]"]
    describe_range: Callable[..., str]


def _case(params: dict, expected, got) -> ClaimCase:
    return ClaimCase(params, str(expected), str(got), expected == got)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


# Closed forms behind the max-size and power-of-two claims.

def conjecture2_count(s: int) -> int:
    """Conjectured count of (s, s+2)-core partitions into distinct parts, s odd."""
    return 2 ** (s - 1)


def max_size_s_plus_2(s: int) -> int:
    """Observed largest size of an (s, s+2)-core with distinct parts, s odd."""
    return _exact_div((s * s - 1) * (s + 3) * (5 * s + 17), 384)


def witness_length_s_plus_2(s: int) -> int:
    """Observed number of parts of the unique maximal (s, s+2)-core."""
    return _exact_div((s - 1) * (s + 5), 8)


def witness_largest_part_s_plus_2(s: int) -> int:
    """Observed largest part of the unique maximal (s, s+2)-core."""
    return _exact_div(3 * (s * s - 1), 8)


def max_size_s_plus_1(s: int) -> int:
    """Largest size of an (s, s+1)-core with distinct parts: floor(s(s+1)/6)."""
    return s * (s + 1) // 6


def witness_count_s_plus_1(s: int) -> int:
    """Two maximal witnesses exactly when s = 1 mod 3 and s >= 4, else one."""
    return 2 if s >= 4 and s % 3 == 1 else 1


# Case builders.  Formulas are reached through their defining module so a
# deliberately corrupted formula (monkeypatched in the harness meta-test)
# is picked up at call time.

def _fib_distinct_cases(p: dict) -> list[ClaimCase]:
    s = p["s"]
    got = search.enumerate_core(s, s + 1, "distinct").count
    return [_case({"s": s}, sequences.fibonacci(s + 1), got)]


def _distinct_odd_cases(p: dict) -> list[ClaimCase]:
    m = p["m"]
    want = sequences.fibonacci(m)
    return [
        _case(
            {"m": m, "family": "distinct"},
            want,
            len(search.enumerate_distinct_by_perimeter(m)),
        ),
        _case(
            {"m": m, "family": "odd"},
            want,
            len(search.enumerate_odd_by_perimeter(m)),
        ),
    ]


def _fib_general_cases(p: dict) -> list[ClaimCase]:
    d, s = p["d"], p["s"]
    want = sequences.n_poly(s)(d)
    cases = [
        _case(
            {"d": d, "s": s, "check": "tuples"},
            want,
            search.count_twin_free_tuples(s, d, exclude_last=True),
        )
    ]
    t = d * s - 1
    if t >= 1:  # (d, s) = (1, 1) has no companion period
        cases.append(
            _case(
                {"d": d, "s": s, "check": "enumeration"},
                want,
                search.enumerate_core(s, t, "distinct").count,
            )
        )
    return cases


def _conjecture2_cases(p: dict) -> list[ClaimCase]:
    s = p["s"]
    got = search.enumerate_core(s, s + 2, "distinct").count
    return [_case({"s": s}, conjecture2_count(s), got)]


def _maxsize_s_s2_cases(p: dict) -> list[ClaimCase]:
    s = p["s"]
    result = search.enumerate_core(s, s + 2, "distinct")
    witnesses = result.max_size_witnesses
    top = witnesses[0]
    return [
        _case({"s": s, "check": "max_size"}, max_size_s_plus_2(s), result.max_size),
        _case({"s": s, "check": "witnesses"}, 1, len(witnesses)),
        _case({"s": s, "check": "witness_parts"}, witness_length_s_plus_2(s), top.ell),
        _case(
            {"s": s, "check": "witness_largest"},
            witness_largest_part_s_plus_2(s),
            top.parts[0] if top else 0,
        ),
    ]


def _maxsize_s_s1_cases(p: dict) -> list[ClaimCase]:
    s = p["s"]
    result = search.enumerate_core(s, s + 1, "distinct")
    return [
        _case({"s": s, "check": "max_size"}, max_size_s_plus_1(s), result.max_size),
        _case(
            {"s": s, "check": "witnesses"},
            witness_count_s_plus_1(s),
            len(result.max_size_witnesses),
        ),
    ]


def _anderson_cases(p: dict) -> list[ClaimCase]:
    s, t = p["s"], p["t"]
    got = search.enumerate_core(s, t, "all").count
    return [_case({"s": s, "t": t}, sequences.anderson_count(s, t), got)]


def _selfconjugate_cases(p: dict) -> list[ClaimCase]:
    s, t = p["s"], p["t"]
    got = search.enumerate_core(s, t, "self_conjugate").count
    return [_case({"s": s, "t": t}, sequences.fms_selfconjugate_count(s, t), got)]


def _s_params(max_s: int) -> list[dict]:
    return [{"s": s} for s in range(1, max_s + 1)]

def _odd_s_params(max_s: int) -> list[dict]:
    return [{"s": s} for s in range(3, max_s + 1, 2)]

def _m_params(max_m: int) -> list[dict]:
    return [{"m": m} for m in range(1, max_m + 1)]

def _ds_params(max_d: int, max_s: int) -> list[dict]:
    return [{"d": d, "s": s} for d in range(1, max_d + 1) for s in range(1, max_s + 1)]

def _coprime_pair_params(max_sum: int) -> list[dict]:
    return [
        {"s": s, "t": t}
        for s in range(1, max_sum)
        for t in range(s + 1, max_sum - s + 1)
        if gcd(s, t) == 1
    ]


CLAIMS: dict[str, Claim] = {
    claim.name: claim
    for claim in [
        Claim(
            "fib-distinct",
            "the number of (s, s+1)-core partitions into distinct parts is the "
            "Fibonacci number F(s+1)",
            {"max_s": 20},
            _s_params,
            _fib_distinct_cases,
            lambda max_s: f"s = 1..{max_s}",
        ),
        Claim(
            "distinct-odd",
            "partitions with perimeter M into distinct parts and into odd parts "
            "are both counted by F(M)",
            {"max_m": 20},
            _m_params,
            _distinct_odd_cases,
            lambda max_m: f"M = 1..{max_m}",
        ),
        Claim(
            "fib-general",
            "the number of (s, ds-1)-core partitions into distinct parts matches "
            "the generalized Fibonacci polynomial and the twin-free tuple brute force",
            {"max_d": 3, "max_s": 8},
            _ds_params,
            _fib_general_cases,
            lambda max_d, max_s: f"d = 1..{max_d}, s = 1..{max_s}",
        ),
        Claim(
            "conjecture2",
            "for odd s, the number of (s, s+2)-core partitions into distinct parts "
            "is 2^(s-1)",
            {"max_s": 15},
            _odd_s_params,
            _conjecture2_cases,
            lambda max_s: f"odd s = 3..{max_s}",
        ),
        Claim(
            "maxsize-s-s2",
            "the largest (s, s+2)-core with distinct parts is unique with size "
            "(s^2-1)(s+3)(5s+17)/384, (s-1)(s+5)/8 parts, largest part 3(s^2-1)/8",
            {"max_s": 15},
            _odd_s_params,
            _maxsize_s_s2_cases,
            lambda max_s: f"odd s = 3..{max_s}",
        ),
        Claim(
            "maxsize-s-s1",
            "the largest (s, s+1)-core with distinct parts has size floor(s(s+1)/6), "
            "with two maximal witnesses iff s = 1 mod 3 (s >= 4), else one",
            {"max_s": 18},
            _s_params,
            _maxsize_s_s1_cases,
            lambda max_s: f"s = 1..{max_s}",
        ),
        Claim(
            "anderson",
            "the number of (s, t)-core partitions is C(s+t, s)/(s+t) for coprime s, t",
            {"max_sum": 15},
            _coprime_pair_params,
            _anderson_cases,
            lambda max_sum: f"coprime s < t with s + t <= {max_sum}",
        ),
        Claim(
            "selfconjugate",
            "the number of self-conjugate (s, t)-core partitions is "
            "C(s//2 + t//2, s//2) for coprime s, t",
            {"max_sum": 15},
            _coprime_pair_params,
            _selfconjugate_cases,
            lambda max_sum: f"coprime s < t with s + t <= {max_sum}",
        ),
    ]
}


def run_claim(name: str, threads: int = 1, **ranges: int) -> VerificationReport:
    """Run one claim; unknown names raise KeyError, bad range keys ValueError."""
    claim = CLAIMS[name]
    merged = dict(claim.defaults)
    for key, value in ranges.items():
        if value is None:
            continue
        if key not in claim.defaults:
            raise ValueError(
                f"claim {name!r} does not accept --{key.replace('_', '-')}; "
                f"it accepts: {', '.join('--' + k.replace('_', '-') for k in claim.defaults)}"
            )
        merged[key] = value
    start = time.perf_counter()
    param_list = claim.params(**merged)
    if threads > 1 and len(param_list) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            case_lists = list(pool.map(claim.cases, param_list))
    else:
        case_lists = [claim.cases(p) for p in param_list]
    cases = tuple(chain.from_iterable(case_lists))
    return VerificationReport(
        claim=name,
        range=claim.describe_range(**merged),
        cases=cases,
        passed=all(c.ok for c in cases),
        seconds=time.perf_counter() - start,
    )
