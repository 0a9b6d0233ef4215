"""Exact closed forms and recurrences cross-checked against the enumerators.

Everything is arbitrary-precision integer arithmetic; no floats anywhere.
The generalized Fibonacci families are kept as polynomials in the parameter
d, so a single computation certifies the counts for every d at once;
integer values are obtained by evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb, gcd


@cache
def fibonacci(n: int) -> int:
    """F_n with F_0 = 0 and F_1 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _require_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"s and t must be positive integers, got s={s!r}, t={t!r}")
    common = gcd(s, t)
    if common != 1:
        raise ValueError(f"s and t must be coprime, gcd({s}, {t}) = {common}")


def anderson_count(s: int, t: int) -> int:
    """Number of partitions avoiding hooks of both lengths s and t: C(s+t, s)/(s+t).

    The division is checked to be exact; a remainder would mean a bug or
    non-coprime input.
    """
    _require_coprime(s, t)
    return _exact_div(comb(s + t, s), s + t)


@cache
def catalan(s: int) -> int:
    """C(2s, s)/(s+1); equals anderson_count(s, s+1)."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    return _exact_div(comb(2 * s, s), s + 1)


def fms_selfconjugate_count(s: int, t: int) -> int:
    """Number of self-conjugate (s, t)-core partitions: C(s//2 + t//2, s//2)."""
    _require_coprime(s, t)
    return comb(s // 2 + t // 2, s // 2)


@dataclass(frozen=True)
class CountPolynomial:
    """Polynomial with nonnegative integer coefficients; coeffs[k] multiplies d**k.

    Trailing zero coefficients are stripped, so the leading coefficient is
    nonzero (the zero polynomial is the empty tuple).
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"coefficients must be nonnegative integers, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __call__(self, d: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * d + c
        return value

    def __add__(self, other: "CountPolynomial") -> "CountPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        padded = b + (0,) * (len(a) - len(b))
        return CountPolynomial(tuple(x + y for x, y in zip(a, padded)))

    def times_d(self) -> "CountPolynomial":
        """Multiply by the variable d."""
        return CountPolynomial((0,) + self.coeffs) if self.coeffs else self

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "d" if k == 1 else f"d^{k}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms)


@cache
def m_poly(s: int) -> CountPolynomial:
    """Number of nested twin-free tuples of length d inside {1, ..., s-1}.

    As a polynomial in d: X(1) = 1, X(2) = d + 1, and
    X(s) = X(s-1) + d * X(s-2).
    """
    if s < 1:
        raise ValueError("s must be a positive integer")
    if s == 1:
        return CountPolynomial((1,))
    if s == 2:
        return CountPolynomial((1, 1))
    return m_poly(s - 1) + m_poly(s - 2).times_d()


@cache
def n_poly(s: int) -> CountPolynomial:
    """Number of (s, ds-1)-core partitions into distinct parts, as a polynomial in d.

    Same recurrence as m_poly with starts X(1) = 1 and X(2) = d.  At d = 1
    this collapses to the Fibonacci numbers: n_poly(s)(1) = F_(s+1).
    """
    if s < 1:
        raise ValueError("s must be a positive integer")
    if s == 1:
        return CountPolynomial((1,))
    if s == 2:
        return CountPolynomial((0, 1))
    return n_poly(s - 1) + n_poly(s - 2).times_d()


def check_core_twinfree_identity(s: int, d: int) -> bool:
    """Whether n_poly(s) = m_poly(s-1) + (d-1) * m_poly(s-2) holds at the integer d."""
    if s < 3 or d < 1:
        raise ValueError("requires s >= 3 and d >= 1")
    return n_poly(s)(d) == m_poly(s - 1)(d) + (d - 1) * m_poly(s - 2)(d)
