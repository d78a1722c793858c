"""The golden string BABBABABBABBA... (S_1 = B, S_2 = BA, S_n = S_{n-1} S_{n-2}).

Random access goes through Beatty counts, so positions far beyond anything
that could be materialized are answerable in a handful of big-int operations.
"""

from __future__ import annotations

from .fibcore import floor_inv_phi, floor_phi

DEFAULT_PREFIX_CAP = 10**7


class ResourceLimitError(RuntimeError):
    """Requested string would exceed the configured memory cap."""


def prefix(length: int, cap: int = DEFAULT_PREFIX_CAP) -> str:
    """First `length` letters of the golden string, as a plain 'A'/'B' string."""
    if length < 0:
        raise ValueError(f"expected length >= 0, got {length}")
    if length > cap:
        raise ResourceLimitError(f"prefix of length {length} exceeds cap {cap}")
    older, newer = "B", "BA"
    if length <= 1:
        return older[:length]
    while len(newer) < length:
        older, newer = newer, newer + older
    return newer[:length]


def count_B(n: int) -> int:
    """Number of B's among the first n letters: floor((n+1)/phi)."""
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    return floor_inv_phi(n + 1)


def count_A(n: int) -> int:
    return n - count_B(n)


def letter_at(i: int) -> str:
    """The i-th letter (1-based)."""
    if i < 1:
        raise ValueError(f"positions are 1-based, got {i}")
    return "B" if count_B(i) - count_B(i - 1) == 1 else "A"


def beta(j: int) -> int:
    """Position of the j-th B."""
    if j < 1:
        raise ValueError(f"expected j >= 1, got {j}")
    return floor_phi(j)
