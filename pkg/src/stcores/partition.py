"""Integer partitions and their Young-diagram geometry.

A partition is stored as a weakly decreasing tuple of positive integers;
constructors validate and never sort.  Rows and columns of the Young
diagram are 1-indexed.  All values are immutable and every function here
is pure, so everything can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {p!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")

    @property
    def ell(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Hook length of cell (i, j): arm + leg + 1.

    The arm counts cells to the right in row i, the leg counts cells below
    in column j.  Raises if (i, j) lies outside the diagram.
    """
    if i < 1 or i > lam.ell or j < 1 or j > lam.parts[i - 1]:
        raise ValueError(f"cell ({i}, {j}) is outside the Young diagram of {lam}")
    arm = lam.parts[i - 1] - j
    leg = sum(1 for r in range(i, lam.ell) if lam.parts[r] >= j)
    return arm + leg + 1


def perimeter(lam: Partition) -> int:
    """Largest part plus number of parts minus 1; 0 for the empty partition.

    Equals the maximum hook length, which sits in the corner cell (1, 1).
    """
    if not lam.parts:
        return 0
    return lam.parts[0] + lam.ell - 1


def is_t_core(lam: Partition, t: int) -> bool:
    """True when no cell of the Young diagram has hook length t."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    for i in range(1, lam.ell + 1):
        for j in range(1, lam.parts[i - 1] + 1):
            if hook_length(lam, i, j) == t:
                return False
    return True


def has_distinct_parts(lam: Partition) -> bool:
    return all(a > b for a, b in zip(lam.parts, lam.parts[1:]))


def has_odd_parts(lam: Partition) -> bool:
    return all(p % 2 == 1 for p in lam.parts)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths become the parts."""
    if not lam.parts:
        return Partition(())
    return Partition(
        tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1))
    )


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def walk(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for k in range(min(cap, remaining), 0, -1):
            prefix.append(k)
            yield from walk(remaining - k, k, prefix)
            prefix.pop()

    yield from walk(n, n if n else 1, [])
