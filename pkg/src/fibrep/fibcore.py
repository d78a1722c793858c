"""Fibonacci numbers (F1 = F2 = 1) and exact floor arithmetic with the golden ratio."""

from __future__ import annotations

import math
import threading
from bisect import bisect_right

_fibs = [0, 1, 1]  # _fibs[n] == F_n; slot 0 is padding, never returned
_lock = threading.Lock()


def _extend_to_index(n: int) -> None:
    with _lock:
        while len(_fibs) <= n:
            _fibs.append(_fibs[-1] + _fibs[-2])


def _extend_past_value(x: int) -> None:
    with _lock:
        while _fibs[-1] <= x:
            _fibs.append(_fibs[-1] + _fibs[-2])


def fib(n: int) -> int:
    """Return F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    if n >= len(_fibs):
        _extend_to_index(n)
    return _fibs[n]


def fib_index_below(x: int) -> int:
    """Largest n >= 2 with F_n <= x.

    F_1 and F_2 are both 1; the tie resolves to 2 because decompositions
    only draw from F_2, F_3, ...
    """
    if x < 1:
        raise ValueError(f"expected a positive integer, got {x}")
    if _fibs[-1] <= x:
        _extend_past_value(x)
    # the list is append-only, so a snapshot of its current prefix is consistent
    n = bisect_right(_fibs, x, lo=2) - 1
    return max(n, 2)


def isqrt(x: int) -> int:
    """Integer square root: s with s*s <= x < (s+1)**2."""
    if x < 0:
        raise ValueError(f"isqrt of negative number {x}")
    s = math.isqrt(x)
    assert s * s <= x < (s + 1) * (s + 1)
    return s


def floor_phi(n: int) -> int:
    """floor(n * phi), computed with integers only.

    n*phi = (n + sqrt(5 n^2)) / 2 and 5n^2 is never a square for n >= 1, so
    flooring the square root first does not change the result.
    """
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    return (n + isqrt(5 * n * n)) // 2


def floor_inv_phi(n: int) -> int:
    """floor(n / phi) = floor(n*phi) - n, since 1/phi = phi - 1."""
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    return floor_phi(n) - n
