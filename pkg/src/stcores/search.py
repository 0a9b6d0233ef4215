"""Exhaustive enumerators for simultaneous core partitions.

Everything here is exact and deliberately brute-force: these are the
independent engines that the closed forms in `sequences` get checked
against.

The workhorse walks order ideals.  For coprime s and t, the first-column
hook-length set of any partition avoiding hooks s and t is closed under
subtracting s or t while the result stays positive, and it cannot contain
any number representable as a*s + b*t with a, b >= 0 (such a member would
chain down to 0, which is impossible).  So these sets live inside the gaps
of the numerical semigroup generated by s and t -- there are
(s-1)(t-1)/2 gaps, the largest being s*t - s - t -- and they are exactly
the down-closed subsets of the poset on the gaps in which x sits above
x - s and x - t.  Walking that poset element by element in ascending order
visits each down-closed subset exactly once, so the cost is proportional
to the number of core partitions produced rather than to 2**(number of
gaps).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Callable

from .betaset import from_beta, is_twin_free
from .partition import (
    Partition,
    conjugate,
    has_distinct_parts,
    has_odd_parts,
    is_t_core,
    partitions_of,
)


class InfiniteFamilyError(ValueError):
    """The requested (s, t)-core family is infinite because gcd(s, t) > 1."""

    def __init__(self, s: int, t: int, common: int):
        self.s = s
        self.t = t
        self.common = common
        super().__init__(
            f"({s}, {t})-core partitions form an infinite family: "
            f"gcd({s}, {t}) = {common} > 1, so there is no finite count"
        )


@dataclass(frozen=True)
class GapPoset:
    """Gaps of the numerical semigroup <s, t>, ordered by x above x-s and x-t."""

    s: int
    t: int
    gaps: tuple[int, ...]  # ascending

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 when there are none (s = 1 or t = 1)."""
        return self.gaps[-1] if self.gaps else -1

    def lower_covers(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in (x - self.s, x - self.t) if y > 0)


def gap_poset(s: int, t: int) -> GapPoset:
    """Gap poset for the pair (s, t); requires gcd(s, t) = 1."""
    if not isinstance(s, int) or not isinstance(t, int) or s < 1 or t < 1:
        raise ValueError(f"s and t must be positive integers, got s={s!r}, t={t!r}")
    common = gcd(s, t)
    if common != 1:
        raise InfiniteFamilyError(s, t, common)
    if s == 1 or t == 1:
        return GapPoset(s, t, ())
    frob = s * t - s - t
    representable = bytearray(frob + 1)
    representable[0] = 1
    for x in range(1, frob + 1):
        if (x >= s and representable[x - s]) or (x >= t and representable[x - t]):
            representable[x] = 1
    gaps = tuple(x for x in range(1, frob + 1) if not representable[x])
    return GapPoset(s, t, gaps)


def _down_closed_subsets(poset: GapPoset, twin_free_only: bool) -> list[frozenset[int]]:
    """All order ideals of the gap poset, optionally restricted to twin-free ones.

    The twin-free restriction is a sound monotone prune: adding an element
    can never repair a consecutive pair, so rejecting x while x-1 or x+1 is
    already chosen loses nothing.
    """
    order = poset.gaps
    n = len(order)
    needed = n + 1000
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    s, t = poset.s, poset.t
    chosen: set[int] = set()
    found: list[frozenset[int]] = []

    def walk(i: int) -> None:
        if i == n:
            found.append(frozenset(chosen))
            return
        x = order[i]
        walk(i + 1)  # leave x out
        below_s = x - s
        if below_s > 0 and below_s not in chosen:
            return
        below_t = x - t
        if below_t > 0 and below_t not in chosen:
            return
        if twin_free_only and (x - 1 in chosen or x + 1 in chosen):
            return
        chosen.add(x)
        walk(i + 1)  # take x
        chosen.remove(x)

    walk(0)
    return found


FILTERS: dict[str, Callable[[Partition], bool]] = {
    "all": lambda lam: True,
    "distinct": has_distinct_parts,
    "odd": has_odd_parts,
    "self_conjugate": lambda lam: conjugate(lam) == lam,
}


def _predicate(part_filter: str) -> Callable[[Partition], bool]:
    try:
        return FILTERS[part_filter]
    except KeyError:
        raise ValueError(
            f"unknown filter {part_filter!r}; valid filters: {', '.join(sorted(FILTERS))}"
        ) from None


def canonical_key(lam: Partition) -> tuple[int, tuple[int, ...]]:
    """Sort key: size ascending, then parts lexicographically descending."""
    return (lam.size, tuple(-p for p in lam.parts))


@dataclass(frozen=True)
class EnumerationResult:
    """Complete, canonically ordered listing of one (s, t, filter) family."""

    s: int
    t: int
    filter: str
    partitions: tuple[Partition, ...]
    count: int
    max_size: int
    max_size_witnesses: tuple[Partition, ...]


def _result(s: int, t: int, part_filter: str, found: list[Partition]) -> EnumerationResult:
    ordered = tuple(sorted(found, key=canonical_key))
    max_size = max((lam.size for lam in ordered), default=0)
    witnesses = tuple(lam for lam in ordered if lam.size == max_size)
    return EnumerationResult(s, t, part_filter, ordered, len(ordered), max_size, witnesses)


def enumerate_core(s: int, t: int, part_filter: str = "all") -> EnumerationResult:
    """All (s, t)-core partitions passing the filter, canonically ordered.

    Requires gcd(s, t) = 1, otherwise the family is infinite and
    InfiniteFamilyError is raised.  Filters: all, distinct, odd,
    self_conjugate.  The distinct filter prunes the walk (twin-freeness is
    monotone); the others are applied to each completed partition.
    """
    predicate = _predicate(part_filter)
    poset = gap_poset(s, t)
    found = []
    for beta in _down_closed_subsets(poset, part_filter == "distinct"):
        lam = from_beta(beta)
        if predicate(lam):
            found.append(lam)
    return _result(s, t, part_filter, found)


def enumerate_core_bounded(
    s: int, t: int, part_filter: str, max_size: int
) -> EnumerationResult:
    """(s, t)-core partitions of size <= max_size, by direct generation.

    Works for any s, t >= 1, coprime or not, but the listing is complete
    only up to the size bound.  Independent of the order-ideal walk (plain
    hook predicates on every partition), so it doubles as a slow
    cross-check for enumerate_core.
    """
    predicate = _predicate(part_filter)
    if s < 1 or t < 1:
        raise ValueError(f"s and t must be positive integers, got s={s!r}, t={t!r}")
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    found = [
        lam
        for n in range(max_size + 1)
        for lam in partitions_of(n)
        if is_t_core(lam, s) and is_t_core(lam, t) and predicate(lam)
    ]
    return _result(s, t, part_filter, found)


def enumerate_distinct_by_perimeter(m: int) -> list[Partition]:
    """All partitions into distinct parts with perimeter exactly m.

    Built one perimeter level at a time: a level-m partition arises either
    by adding 1 to the largest part of a level-(m-1) partition, or by
    stacking a new largest part (old largest + 1) on a nonempty
    level-(m-2) partition.  Both moves preserve distinctness and raise the
    perimeter by exactly 1 and 2.
    """
    if m < 0:
        raise ValueError("perimeter must be nonnegative")
    older = [Partition(())]  # perimeter 0
    if m == 0:
        return older
    newer = [Partition((1,))]  # perimeter 1
    for _ in range(2, m + 1):
        bumped = [Partition((lam.parts[0] + 1,) + lam.parts[1:]) for lam in newer]
        stacked = [Partition((lam.parts[0] + 1,) + lam.parts) for lam in older if lam]
        older, newer = newer, bumped + stacked
    return sorted(newer, key=canonical_key)


def enumerate_odd_by_perimeter(m: int) -> list[Partition]:
    """All partitions into odd parts with perimeter exactly m.

    Level step: add 2 to the largest part of a nonempty level-(m-2)
    partition, or repeat the largest part of a level-(m-1) partition.
    """
    if m < 0:
        raise ValueError("perimeter must be nonnegative")
    older = [Partition(())]
    if m == 0:
        return older
    newer = [Partition((1,))]
    for _ in range(2, m + 1):
        widened = [Partition((lam.parts[0] + 2,) + lam.parts[1:]) for lam in older if lam]
        repeated = [Partition((lam.parts[0],) + lam.parts) for lam in newer]
        older, newer = newer, widened + repeated
    return sorted(newer, key=canonical_key)


def count_twin_free_tuples(s: int, d: int, exclude_last: bool) -> int:
    """Count nested tuples (X_1, ..., X_d) of twin-free subsets of {1, ..., s-1}.

    The nesting is X_d inside X_(d-1) inside ... inside X_1.  Literal brute
    force over every tuple -- this is the oracle side of the recurrences in
    `sequences`, so it stays dumb on purpose.  With exclude_last, tuples
    whose innermost set contains s - 1 are not counted.
    """
    if s < 1 or d < 1:
        raise ValueError("s and d must be positive integers")
    top = s - 1

    def count_from(level: int, superset: tuple[int, ...]) -> int:
        total = 0
        for r in range(len(superset) + 1):
            for xs in combinations(superset, r):
                if not is_twin_free(xs):
                    continue
                if level == d:
                    if not (exclude_last and top in xs):
                        total += 1
                else:
                    total += count_from(level + 1, xs)
        return total

    return count_from(1, tuple(range(1, s)))
