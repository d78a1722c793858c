"""Brute-force reference implementations.

Nothing here shares an algorithm with the main modules: decompositions come
from exhaustive search instead of the greedy, letters from concatenation
instead of Beatty counts, floor(n*phi) from a fixed-point constant instead of
an integer square root. Costs grow quickly; keep inputs small.
"""

from __future__ import annotations

import warnings
from decimal import Decimal, localcontext

from .chung_graham import ChungGrahamDecomposition
from .golden import DEFAULT_PREFIX_CAP, ResourceLimitError
from .index_sets import SetHandle, member
from .zeckendorf import ZeckendorfDecomposition

Z_SOFT_LIMIT = 10**4
CG_SOFT_LIMIT = 5 * 10**3
SET_SOFT_LIMIT = 10**6

FIXED_BITS = 256


def _soft_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        warnings.warn(f"{what}={value} exceeds oracle soft bound {bound}; this may be slow",
                      stacklevel=3)


def _fib_table(max_idx: int) -> list[int]:
    # independent of the shared memo
    f = [0, 1, 1]
    while len(f) <= max_idx:
        f.append(f[-1] + f[-2])
    return f


def oracle_z_all(n: int, max_idx: int) -> list[ZeckendorfDecomposition]:
    """All nonadjacent index sets within [2, max_idx] whose Fibonacci values sum to n."""
    _soft_bound(n, Z_SOFT_LIMIT, "n")
    f = _fib_table(max_idx)
    # below[i] = F_2 + ... + F_i, an upper bound on what indices <= i can add
    below = [0] * (max_idx + 1)
    for i in range(2, max_idx + 1):
        below[i] = below[i - 1] + f[i]
    found = []

    def search(i, remaining, chosen):
        if remaining == 0:
            found.append(ZeckendorfDecomposition(tuple(reversed(chosen))))
            return
        if i < 2 or below[i] < remaining:
            return
        if f[i] <= remaining:
            chosen.append(i)
            search(i - 2, remaining - f[i], chosen)
            chosen.pop()
        search(i - 1, remaining, chosen)

    search(max_idx, n, [])
    return found


def oracle_cg_all(n: int, max_idx: int) -> list[ChungGrahamDecomposition]:
    """All valid coefficient vectors over even indices <= max_idx with value n."""
    _soft_bound(n, CG_SOFT_LIMIT, "n")
    f = _fib_table(max_idx)
    top = max_idx - max_idx % 2
    below = [0] * (top + 1)
    for i in range(2, top + 1, 2):
        below[i] = below[i - 2] + 2 * f[i]
    found = []

    # walk indices downward; open_two means a 2 was placed with no 0 since
    def search(i, remaining, open_two, chosen):
        if i < 2:
            if remaining == 0:
                found.append(ChungGrahamDecomposition(tuple(reversed(chosen))))
            return
        if below[i] < remaining:
            return
        for c in (0, 1, 2):
            if c * f[i] > remaining:
                break
            if c == 2 and open_two:
                continue
            if c:
                chosen.append((i, c))
            search(i - 2, remaining - c * f[i], (open_two or c == 2) and c != 0, chosen)
            if c:
                chosen.pop()

    search(top, n, False, [])
    return found


def oracle_set(h: SetHandle, limit: int) -> list[int]:
    """Members of the set in [1, limit], by testing every integer."""
    _soft_bound(limit, SET_SOFT_LIMIT, "limit")
    return [n for n in range(1, limit + 1) if member(h, n)]


def oracle_word(n: int) -> str:
    """S_n by explicit concatenation (S_1 = B, S_2 = BA)."""
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    words = ["", "B", "BA"]
    while len(words) <= n:
        words.append(words[-1] + words[-2])
    return words[n]


_letters = ""


def oracle_letter(i: int, cap: int = DEFAULT_PREFIX_CAP) -> str:
    """Letter i of the golden string, read from a materialized S_n."""
    global _letters
    if i < 1:
        raise ValueError(f"positions are 1-based, got {i}")
    if i > cap:
        raise ResourceLimitError(f"position {i} exceeds cap {cap}")
    if len(_letters) < i:
        n = 1
        while len(oracle_word(n)) < i:
            n += 1
        _letters = oracle_word(n)
    return _letters[i - 1]


def oracle_letters(length: int, cap: int = DEFAULT_PREFIX_CAP) -> str:
    """First `length` letters by concatenation."""
    if length > cap:
        raise ResourceLimitError(f"length {length} exceeds cap {cap}")
    if length == 0:
        return ""
    oracle_letter(length, cap)
    return _letters[:length]


def _phi_fixed() -> int:
    with localcontext() as ctx:
        ctx.prec = 120
        phi = (1 + Decimal(5).sqrt()) / 2
        return int(phi * (1 << FIXED_BITS))


PHI_FIXED = _phi_fixed()  # floor(phi * 2^256)


def oracle_floor_phi(n: int) -> int:
    """floor(n*phi) from the 256-bit fixed-point constant.

    The truncated constant is low by less than 1 unit, so n*phi*2^256 lies in
    [n*PHI_FIXED, n*PHI_FIXED + n). Refuses when that window straddles an integer.
    """
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    prod = n * PHI_FIXED
    lo = prod >> FIXED_BITS
    if (prod + n) >> FIXED_BITS != lo:
        raise ArithmeticError(f"256-bit precision insufficient for n={n}")
    return lo


def oracle_cg_literal_greedy(n: int) -> ChungGrahamDecomposition:
    """Greedy with the strict rule: take 2F only when 2F < remainder, else F.

    At remainder == 2F this takes F and then F again; repeats are merged.
    """
    f = _fib_table(2)
    while f[-1] <= n:
        f.append(f[-1] + f[-2])
    coeffs: dict[int, int] = {}
    while n:
        i = max(i for i in range(2, len(f), 2) if f[i] <= n)
        c = 2 if 2 * f[i] < n else 1
        coeffs[i] = coeffs.get(i, 0) + c
        n -= c * f[i]
    return ChungGrahamDecomposition(tuple(sorted(coeffs.items())))


def oracle_z_rows(k: int, span: int) -> list[ZeckendorfDecomposition]:
    """Every Zeckendorf decomposition with smallest index 2k and largest <= 2k+span, sorted by value."""
    lo, hi = 2 * k, 2 * k + span
    f = _fib_table(hi)
    rows = []

    def extend(chosen, nxt):
        rows.append(tuple(chosen))
        for i in range(nxt, hi + 1):
            extend(chosen + [i], i + 2)

    extend([lo], lo + 2)
    rows.sort(key=lambda idx: sum(f[i] for i in idx))
    return [ZeckendorfDecomposition(r) for r in rows]


def oracle_cg_rows(k: int, max_ell: int) -> list[ChungGrahamDecomposition]:
    """Every valid Chung-Graham vector with smallest index 2k and largest <= 2k+2*max_ell, sorted by value."""
    lo, hi = 2 * k, 2 * k + 2 * max_ell
    f = _fib_table(hi)
    rows = []

    def extend(i, open_two, chosen):
        if i > hi:
            rows.append(tuple(chosen))
            return
        for c in (0, 1, 2) if i > lo else (1, 2):
            if c == 2 and open_two:
                continue
            extend(i + 2, (open_two or c == 2) and c != 0, chosen + [(i, c)] if c else chosen)

    extend(lo, False, [])
    rows.sort(key=lambda terms: sum(c * f[i] for i, c in terms))
    return [ChungGrahamDecomposition(r) for r in rows]
