"""Perimeter-preserving correspondence between three families.

The pivot is the set of compositions with parts 1 and 2 whose last part is
1 (the empty composition is allowed).  Reading such a composition right to
left drives two constructions in lockstep:

  * distinct side: a 1 grows the current largest part by one, a 2 stacks a
    new largest part (old largest + 1) on top;
  * odd side: a 1 repeats the current largest part, a 2 grows the largest
    part by two.

Each entry adds exactly its own value to the perimeter of both partitions,
so composing one map with the inverse of the other yields a bijection
between partitions into distinct parts and partitions into odd parts that
preserves the perimeter -- though not, in general, the size.
"""

from __future__ import annotations

from .partition import Partition, has_distinct_parts, has_odd_parts

CompositionC = tuple[int, ...]


def is_composition(mu: CompositionC) -> bool:
    """Parts all 1 or 2, and a nonempty word ends in 1."""
    return all(x in (1, 2) for x in mu) and (not mu or mu[-1] == 1)


def _checked(mu: CompositionC) -> CompositionC:
    mu = tuple(mu)
    if not is_composition(mu):
        raise ValueError(
            f"invalid composition {mu}: parts must be 1 or 2 and the last part must be 1"
        )
    return mu


def compositions_of(m: int) -> list[CompositionC]:
    """All valid compositions of weight m, in lexicographic order."""
    if m < 0:
        raise ValueError("weight must be nonnegative")

    def words(k: int):
        if k == 0:
            yield ()
            return
        for rest in words(k - 1):
            yield (1,) + rest
        if k >= 2:
            for rest in words(k - 2):
                yield (2,) + rest

    return [w for w in words(m) if not w or w[-1] == 1]


def lambda_d(mu: CompositionC) -> Partition:
    """Distinct-parts partition assigned to mu; its perimeter is sum(mu)."""
    mu = _checked(mu)
    if not mu:
        return Partition(())
    parts = [1]  # the rightmost entry is a 1
    for x in reversed(mu[:-1]):
        if x == 1:
            parts[0] += 1
        else:
            parts.insert(0, parts[0] + 1)
    return Partition(tuple(parts))


def lambda_o(mu: CompositionC) -> Partition:
    """Odd-parts partition assigned to mu; its perimeter is sum(mu)."""
    mu = _checked(mu)
    if not mu:
        return Partition(())
    parts = [1]
    for x in reversed(mu[:-1]):
        if x == 1:
            parts.insert(0, parts[0])
        else:
            parts[0] += 2
    return Partition(tuple(parts))


def inverse_lambda_d(lam: Partition) -> CompositionC:
    """The unique composition with lambda_d(mu) = lam.

    Peeling from the outside in: when the largest part exceeds the second
    by exactly 1 the last step must have been a stack (emit 2 and drop the
    largest part); otherwise it was a grow (emit 1 and decrement).
    """
    if not has_distinct_parts(lam):
        raise ValueError(f"expected a partition into distinct parts, got {lam}")
    parts = list(lam.parts)
    mu: list[int] = []
    while parts:
        if len(parts) > 1 and parts[0] == parts[1] + 1:
            mu.append(2)
            parts.pop(0)
        elif parts[0] > 1:
            mu.append(1)
            parts[0] -= 1
        else:  # parts == [1]
            mu.append(1)
            parts.pop(0)
    return tuple(mu)


def inverse_lambda_o(lam: Partition) -> CompositionC:
    """The unique composition with lambda_o(mu) = lam.

    A repeated largest part must come from a repeat step (emit 1 and drop
    one copy); otherwise the gap is at least 2 by oddness, so the last step
    grew the largest part by two (emit 2 and subtract 2).
    """
    if not has_odd_parts(lam):
        raise ValueError(f"expected a partition into odd parts, got {lam}")
    parts = list(lam.parts)
    mu: list[int] = []
    while parts:
        if len(parts) > 1 and parts[0] == parts[1]:
            mu.append(1)
            parts.pop(0)
        elif parts[0] > 1:
            mu.append(2)
            parts[0] -= 2
        else:  # parts == [1]
            mu.append(1)
            parts.pop(0)
    return tuple(mu)


def distinct_to_odd(lam: Partition) -> Partition:
    """Perimeter-preserving image of a distinct-parts partition among odd-parts ones."""
    return lambda_o(inverse_lambda_d(lam))


def odd_to_distinct(lam: Partition) -> Partition:
    """Inverse of distinct_to_odd."""
    return lambda_d(inverse_lambda_o(lam))
