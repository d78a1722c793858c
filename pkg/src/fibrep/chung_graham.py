"""Chung-Graham decompositions over even-indexed Fibonacci numbers.

n = sum c_i F_{2i} with c_i in {0, 1, 2}, and any two coefficients equal to 2
must have a 0 strictly between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fibcore import fib, fib_index_below


@dataclass(frozen=True)
class ChungGrahamDecomposition:
    """Sparse (even index, coefficient) pairs with increasing index.

    Zero coefficients are omitted; the empty tuple stands for 0.
    """

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((int(i), int(c)) for i, c in self.terms))

    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.terms)

    def is_valid(self) -> bool:
        prev = 0
        for i, c in self.terms:
            if i < 2 or i % 2 or i <= prev or c not in (1, 2):
                return False
            prev = i
        # dense scan: after a 2, another 2 is only allowed once a 0 has been seen
        coeffs = self.coeffs()
        open_two = False
        for i in range(2, prev + 1, 2):
            c = coeffs.get(i, 0)
            if c == 0:
                open_two = False
            elif c == 2:
                if open_two:
                    return False
                open_two = True
        return True

    def validate(self) -> None:
        if not self.is_valid():
            raise ValueError(f"invalid Chung-Graham decomposition: {self.terms}")


def _even_index_below(x: int) -> int:
    m = fib_index_below(x)
    return m if m % 2 == 0 else m - 1


def cg_decompose(n: int) -> ChungGrahamDecomposition:
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    terms = []
    while n:
        i = _even_index_below(n)
        f = fib(i)
        # 2F <= remainder (not <): the literal strict rule takes F twice at equality
        c = 2 if 2 * f <= n else 1
        terms.append((i, c))
        n -= c * f
    terms.reverse()
    return ChungGrahamDecomposition(tuple(terms))


def cg_value(d: ChungGrahamDecomposition) -> int:
    d.validate()
    return sum(c * fib(i) for i, c in d.terms)


def cg_coeff(n: int, even_idx: int) -> int:
    """Coefficient of F_even_idx in the Chung-Graham decomposition of n."""
    if even_idx < 2 or even_idx % 2:
        raise ValueError(f"Chung-Graham indices are even and >= 2, got {even_idx}")
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    return cg_decompose(n).coeffs().get(even_idx, 0)


def cg_min_index(n: int) -> int:
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    return cg_decompose(n).terms[0][0]
