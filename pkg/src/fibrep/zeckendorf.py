"""Zeckendorf decompositions: sums of nonadjacent Fibonacci numbers F_2, F_3, ..."""

from __future__ import annotations

from dataclasses import dataclass

from .fibcore import fib, fib_index_below


@dataclass(frozen=True)
class ZeckendorfDecomposition:
    """Strictly increasing Fibonacci indices, each >= 2, no two adjacent.

    The empty decomposition stands for 0.
    """

    indices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))

    def is_valid(self) -> bool:
        prev = 0
        for i in self.indices:
            if i < 2 or i < prev + 2:
                return False
            prev = i
        return True

    def validate(self) -> None:
        if not self.is_valid():
            raise ValueError(f"invalid Zeckendorf decomposition: {self.indices}")

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __contains__(self, idx):
        return idx in self.indices


def z_decompose(n: int) -> ZeckendorfDecomposition:
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    indices = []
    while n:
        i = fib_index_below(n)
        indices.append(i)
        n -= fib(i)
    indices.reverse()
    return ZeckendorfDecomposition(tuple(indices))


def z_value(d: ZeckendorfDecomposition) -> int:
    d.validate()
    return sum(fib(i) for i in d.indices)


def z_contains(n: int, idx: int) -> bool:
    """True iff F_idx is a summand of the Zeckendorf decomposition of n."""
    if idx < 2:
        raise ValueError(f"Zeckendorf indices start at 2, got {idx}")
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    return idx in z_decompose(n).indices


def z_min_index(n: int) -> int:
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    return z_decompose(n).indices[0]
