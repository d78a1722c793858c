"""Index sets keyed by an even Fibonacci index 2k.

A_2k  integers whose Zeckendorf decomposition has smallest summand F_2k
B_2k  integers whose Chung-Graham decomposition has smallest summand F_2k or 2F_2k
C_2k  A_2k & B_2k
I_2k  integers with F_2k in both decompositions (not necessarily smallest)

p, q, r give the j-th smallest element of A, B, C respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .chung_graham import cg_decompose
from .fibcore import fib, floor_phi
from .golden import beta, count_A, count_B, letter_at
from .zeckendorf import z_decompose


class SetKind(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    I = "I"  # noqa: E741


@dataclass(frozen=True)
class SetHandle:
    kind: SetKind
    k: int

    def __post_init__(self):
        object.__setattr__(self, "kind", SetKind(self.kind))
        _check_k(self.k)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def _check_rank(j: int, name: str = "j") -> None:
    if j < 1:
        raise ValueError(f"{name} must be >= 1, got {j}")


def p(k: int, j: int) -> int:
    """j-th smallest element of A_2k.

    Summing the difference rule (step F_2k+1 after an A, F_2k+2 after a B)
    over the first j-1 letters of the golden string.
    """
    _check_k(k)
    _check_rank(j)
    return fib(2 * k) + count_A(j - 1) * fib(2 * k + 1) + count_B(j - 1) * fib(2 * k + 2)


def q(k: int, j: int) -> int:
    """j-th smallest element of B_2k, by the Chung-Graham table recursion.

    Rows F_{2l+1}+1 .. 2F_{2l+1} repeat the earlier rows plus F_{2k+2l};
    rows 2F_{2l+1}+1 .. F_{2l+3} repeat the first F_{2l} rows plus 2F_{2k+2l}.
    """
    _check_k(k)
    _check_rank(j)
    offset = 0
    while j > 2:
        ell = 1
        while fib(2 * ell + 3) < j:
            ell += 1
        block = fib(2 * ell + 1)
        if j <= 2 * block:
            j -= block
            offset += fib(2 * k + 2 * ell)
        else:
            j -= 2 * block
            offset += 2 * fib(2 * k + 2 * ell)
    return offset + j * fib(2 * k)


def r(k: int, n: int) -> int:
    """n-th smallest element of C_2k: n F_2k + floor((n-1) phi) F_2k+1."""
    _check_k(k)
    _check_rank(n, "n")
    return n * fib(2 * k) + floor_phi(n - 1) * fib(2 * k + 1)


def i_element(k: int, n: int, j: int) -> int:
    """Element of I_2k indexed by block n and offset 0 <= j < F_2k-1."""
    _check_k(k)
    _check_rank(n, "n")
    if not 0 <= j < fib(2 * k - 1):
        raise ValueError(f"offset j must lie in [0, {fib(2 * k - 1) - 1}], got {j}")
    return r(k, n) + j


def member(h: SetHandle, n: int) -> bool:
    """Membership decided from the actual decompositions of n."""
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    even = 2 * h.k
    if h.kind is SetKind.A:
        return z_decompose(n).indices[0] == even
    if h.kind is SetKind.B:
        return cg_decompose(n).terms[0][0] == even
    if h.kind is SetKind.C:
        return z_decompose(n).indices[0] == even and cg_decompose(n).terms[0][0] == even
    return even in z_decompose(n).indices and even in cg_decompose(n).coeffs()


def enumerate_set(h: SetHandle, limit: int) -> Iterator[int]:
    """Elements of the set that are <= limit, in increasing order."""
    if h.kind is SetKind.I:
        yield from _enumerate_i(h.k, limit)
        return
    rank = {SetKind.A: p, SetKind.B: q, SetKind.C: r}[h.kind]
    j = 1
    while True:
        v = rank(h.k, j)
        if v > limit:
            return
        yield v
        j += 1


def _enumerate_i(k: int, limit: int) -> Iterator[int]:
    width = fib(2 * k - 1)
    last = 0
    n = 1
    while True:
        start = r(k, n)
        if start > limit:
            return
        # consecutive blocks are separated by more than their width
        if start <= last:
            raise AssertionError(f"I_{2 * k} blocks overlap at n={n}")
        for j in range(width):
            v = start + j
            if v > limit:
                return
            yield v
        last = start + width - 1
        n += 1


def ranked(h: SetHandle, count: int) -> Iterator[tuple[int, int]]:
    """First `count` (rank, value) pairs of the set."""
    if h.kind is SetKind.I:
        width = fib(2 * h.k - 1)
        for rank in range(1, count + 1):
            n, j = divmod(rank - 1, width)
            yield rank, i_element(h.k, n + 1, j)
        return
    fn = {SetKind.A: p, SetKind.B: q, SetKind.C: r}[h.kind]
    for rank in range(1, count + 1):
        yield rank, fn(h.k, rank)


def diff_p(k: int, j: int) -> int:
    """p(j+1) - p(j) read off the j-th letter: F_2k+1 for A, F_2k+2 for B."""
    _check_k(k)
    _check_rank(j)
    return fib(2 * k + 1) if letter_at(j) == "A" else fib(2 * k + 2)


def diff_r(k: int, j: int) -> int:
    """r(j+1) - r(j) for j >= 2, read off the letter just before the j-th B."""
    _check_k(k)
    if j < 2:
        raise ValueError(f"diff_r needs j >= 2, got {j}")
    return fib(2 * k + 2) if letter_at(beta(j) - 1) == "B" else fib(2 * k + 3)


def check_z_to_cg(k: int, j: int) -> bool:
    """F_2k in CG(p(j)) iff letter j-1 is B, and min CG(p(j)) >= F_2k."""
    _check_k(k)
    if j < 2:
        raise ValueError(f"check needs j >= 2, got {j}")
    d = cg_decompose(p(k, j))
    has = 2 * k in d.coeffs()
    return has == (letter_at(j - 1) == "B") and d.terms[0][0] >= 2 * k


def check_cg_to_z(k: int, j: int) -> bool:
    """F_2k in Z(q(j)) iff letter j-1 is A, and min Z(q(j)) >= F_2k-2.

    At k = 1 the lower bound would be F_0; it is clamped to index 2.
    """
    _check_k(k)
    if j < 2:
        raise ValueError(f"check needs j >= 2, got {j}")
    d = z_decompose(q(k, j))
    has = 2 * k in d.indices
    return has == (letter_at(j - 1) == "A") and d.indices[0] >= max(2 * k - 2, 2)
