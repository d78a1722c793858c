"""Verification harness: each check replays one result against independent routes.

Checks return CheckResult records; run_target groups them the way the CLI
exposes them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import oracle
from .chung_graham import ChungGrahamDecomposition, cg_decompose, cg_value
from .fibcore import fib, fib_index_below, floor_inv_phi, floor_phi, isqrt
from .golden import DEFAULT_PREFIX_CAP, beta, count_B, letter_at, prefix
from .index_sets import (SetHandle, check_cg_to_z, check_z_to_cg, diff_p, diff_r,
                         enumerate_set, i_element, p, q, r)
from .zeckendorf import z_decompose, z_value

TARGETS = ("main", "z-to-cg", "cg-to-z", "golden", "tables", "diffs",
           "ranks", "decomp", "arith")


@dataclass
class CheckResult:
    check: str
    k: int | None
    cases: int
    failures: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        return "PASS" if self.ok else "FAIL"


class _Tally:
    """Counts cases and keeps the first failing case for the report."""

    def __init__(self, check, k=None):
        self.check, self.k = check, k
        self.cases = self.failures = 0
        self.first = ""

    def __call__(self, ok: bool, what: Callable[[], str] | str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if not self.first:
                self.first = what() if callable(what) else what

    def result(self) -> CheckResult:
        detail = f"first failure: {self.first}" if self.failures else ""
        return CheckResult(self.check, self.k, self.cases, self.failures, detail)


# -- Theorem 1.3 -----------------------------------------------------------

def closed_form_i(k: int, limit: int) -> set[int]:
    """{n F_2k + floor((n-1) phi) F_2k+1 + j : 0 <= j < F_2k-1} cut at limit."""
    out = set()
    width = fib(2 * k - 1)
    n = 1
    while i_element(k, n, 0) <= limit:
        for j in range(width):
            v = i_element(k, n, j)
            if v <= limit:
                out.add(v)
        n += 1
    return out


def check_main(ks: Iterable[int], limit: int) -> list[CheckResult]:
    """Brute-force filter of I_2k against the closed form, for several k in one pass."""
    ks = list(ks)
    found: dict[int, set[int]] = {k: set() for k in ks}
    for n in range(1, limit + 1):
        zi = z_decompose(n).indices
        cg = cg_decompose(n).coeffs()
        for k in ks:
            if 2 * k in zi and 2 * k in cg:
                found[k].add(n)
    results = []
    for k in ks:
        expected = closed_form_i(k, limit)
        missing, extra = expected - found[k], found[k] - expected
        bad = len(missing) + len(extra)
        detail = ""
        if bad:
            detail = f"missing {sorted(missing)[:5]} extra {sorted(extra)[:5]}"
        results.append(CheckResult("main.set-equality", k, limit, bad, detail))
    return results


def check_low_high_split(k: int, limit: int) -> CheckResult:
    """For n with F_2k in Z(n) and smaller summands: the part below F_2k is < F_2k-1
    and CG(n) is the disjoint union of CG(low part) and CG(high part)."""
    t = _Tally("main.low-high-split", k)
    for n in range(1, limit + 1):
        zi = z_decompose(n).indices
        if 2 * k not in zi or zi[0] >= 2 * k:
            continue
        low = sum(fib(i) for i in zi if i < 2 * k)
        high = n - low
        cl, ch = cg_decompose(low), cg_decompose(high)
        ok = (low < fib(2 * k - 1) and cl.terms[-1][0] <= 2 * k - 2
              and cg_decompose(n).terms == cl.terms + ch.terms)
        t(ok, lambda: f"n={n}")
    return t.result()


# -- correspondences ---------------------------------------------------------

def check_z_to_cg_range(k: int, j_max: int) -> CheckResult:
    t = _Tally("z-to-cg", k)
    for j in range(2, j_max + 1):
        t(check_z_to_cg(k, j), lambda: f"j={j}")
    return t.result()


def check_cg_to_z_range(k: int, j_max: int) -> CheckResult:
    t = _Tally("cg-to-z", k)
    for j in range(2, j_max + 1):
        t(check_cg_to_z(k, j), lambda: f"j={j}")
    return t.result()


# -- golden string -------------------------------------------------------------

GOLDEN_SPAN = 27  # items 4 and 7 read up to F_27


def check_golden(limit: int, cap: int = DEFAULT_PREFIX_CAP) -> list[CheckResult]:
    """The eight structural facts about the golden string, plus beta positions."""
    length = max(fib(GOLDEN_SPAN), limit + 1)
    s = prefix(length, cap)
    at = lambda i: s[i - 1]  # noqa: E731

    def block(lo, hi):  # letters lo..hi, 1-based inclusive
        return s[lo - 1:hi]

    results = []

    t = _Tally("golden.item1")
    for n in range(1, 26):
        t(prefix(fib(n + 1), cap) == oracle.oracle_word(n) and len(oracle.oracle_word(n)) == fib(n + 1),
          lambda: f"n={n}")
    results.append(t.result())

    t = _Tally("golden.item2")
    seen = 0
    for n in range(0, limit + 1):
        if n:
            seen += at(n) == "B"
        t(seen == count_B(n), lambda: f"n={n}")
    results.append(t.result())

    t = _Tally("golden.item3")
    for n in range(1, 13):
        t(letter_at(fib(2 * n)) == "B" == at(fib(2 * n)), lambda: f"F_{2 * n}")
        t(letter_at(fib(2 * n + 1)) == "A" == at(fib(2 * n + 1)), lambda: f"F_{2 * n + 1}")
    results.append(t.result())

    t = _Tally("golden.item4")
    for n in range(2, 25):
        t(block(fib(n + 1) + 1, fib(n + 2)) == block(1, fib(n)), lambda: f"n={n}")
    results.append(t.result())

    t = _Tally("golden.item5")
    for n in range(4, 25):
        t(block(fib(n) + 1, 2 * fib(n)) == block(1, fib(n)), lambda: f"n={n}")
    results.append(t.result())

    t = _Tally("golden.item6")
    for n in range(2, 13):
        t(letter_at(2 * fib(2 * n + 1)) == "A" == at(2 * fib(2 * n + 1)), lambda: f"n={n} (A)")
        t(letter_at(fib(2 * n + 1) - 1) == "B" == at(fib(2 * n + 1) - 1), lambda: f"n={n} (B)")
    results.append(t.result())

    t = _Tally("golden.item7")
    for n in range(4, 25):
        t(block(2 * fib(n + 1) + 1, fib(n + 3) - 2) == block(1, fib(n) - 2), lambda: f"n={n}")
    results.append(t.result())

    t = _Tally("golden.item8")
    for i in range(1, limit + 1):
        a = letter_at(i)
        t(a == at(i) and (a == "B" or letter_at(i + 1) == "B"), lambda: f"i={i}")
    results.append(t.result())

    results.append(check_beta(count_B(limit), s))
    return results


def check_beta(j_max: int, letters: str | None = None) -> CheckResult:
    """beta(j) = floor(j phi) against B positions found by scanning."""
    t = _Tally("golden.beta")
    if letters is None:
        letters = oracle.oracle_letters(beta(j_max) + 1)
    positions = (i + 1 for i, c in enumerate(letters) if c == "B")
    for j, pos in zip(range(1, j_max + 1), positions):
        t(beta(j) == pos, lambda: f"j={j}")
    return t.result()


# -- tables ----------------------------------------------------------------------

def check_z_table(k: int, span: int = 10) -> CheckResult:
    """Rows F_l + 1 through F_{l+1} of the A_2k table are the first F_{l-1} rows plus F_{2k+l}."""
    t = _Tally("tables.zeckendorf", k)
    rows = oracle.oracle_z_rows(k, span)
    values = [z_value(d) for d in rows]
    t(len(rows) == fib(span + 1), lambda: f"{len(rows)} rows")
    # anything else in A_2k has a summand >= F_{2k+span+1}
    t(values[-1] < fib(2 * k + span + 1), "enumeration is not a prefix of A_2k")
    for j, v in enumerate(values, start=1):
        t(p(k, j) == v, lambda: f"p({j})")
    for ell in range(2, span + 1):
        for j in range(fib(ell) + 1, fib(ell + 1) + 1):
            row, base = rows[j - 1].indices, rows[j - fib(ell) - 1].indices
            t(row[-1] == 2 * k + ell and row == base + (2 * k + ell,), lambda: f"l={ell} j={j}")
    return t.result()


def check_cg_table(k: int, max_ell: int = 10) -> CheckResult:
    """The three-part row recursion of the B_2k table."""
    t = _Tally("tables.chung-graham", k)
    rows = oracle.oracle_cg_rows(k, max_ell)
    values = [cg_value(d) for d in rows]
    t(len(rows) == fib(2 * max_ell + 3), lambda: f"{len(rows)} rows")
    t(values[-1] < fib(2 * k + 2 * max_ell + 2), "enumeration is not a prefix of B_2k")
    for j, v in enumerate(values, start=1):
        t(q(k, j) == v, lambda: f"q({j})")
    for ell in range(1, max_ell + 1):
        top = 2 * k + 2 * ell
        block = fib(2 * ell + 1)
        for j in range(block + 1, 2 * block + 1):  # part a
            row, base = rows[j - 1].terms, rows[j - block - 1].terms
            t(row == base + ((top, 1),), lambda: f"a) l={ell} j={j}")
        for j in range(2 * block + 1, fib(2 * ell + 3) + 1):  # part b
            row, base = rows[j - 1].terms, rows[j - 2 * block - 1].terms
            t(j - 2 * block <= fib(2 * ell) and row == base + ((top, 2),), lambda: f"b) l={ell} j={j}")
        closing = tuple((i, 1) for i in range(2 * k, top, 2)) + ((top, 2),)  # part c
        t(rows[fib(2 * ell + 3) - 1].terms == closing, lambda: f"c) l={ell}")
    return t.result()


# -- difference rules ----------------------------------------------------------

def check_diffs(k: int, j_max: int) -> list[CheckResult]:
    tp = _Tally("diffs.p", k)
    prev = p(k, 1)
    for j in range(1, j_max + 1):
        nxt = p(k, j + 1)
        tp(nxt - prev == diff_p(k, j), lambda: f"j={j}")
        prev = nxt
    tr = _Tally("diffs.r", k)
    prev = r(k, 2)
    for j in range(2, j_max + 1):
        nxt = r(k, j + 1)
        tr(nxt - prev == diff_r(k, j), lambda: f"j={j}")
        prev = nxt
    return [tp.result(), tr.result()]


def check_r_beta(k: int, n_max: int) -> CheckResult:
    """r(n+1) = p(beta(n)+1)."""
    t = _Tally("diffs.r-beta", k)
    for n in range(1, n_max + 1):
        t(r(k, n + 1) == p(k, beta(n) + 1), lambda: f"n={n}")
    return t.result()


# -- ranks vs filters -------------------------------------------------------------

def check_ranks(k: int, count: int = 500) -> list[CheckResult]:
    results = []
    for kind, fn in (("A", p), ("B", q), ("C", r)):
        t = _Tally(f"ranks.{kind}", k)
        values = [fn(k, j) for j in range(1, count + 1)]
        filtered = oracle.oracle_set(SetHandle(kind, k), values[-1])
        streamed = list(enumerate_set(SetHandle(kind, k), values[-1]))
        t(len(filtered) == len(streamed) == count, lambda: f"{len(filtered)} filtered, {len(streamed)} streamed")
        for j, (v, a, b) in enumerate(zip(values, filtered, streamed), start=1):
            t(v == a == b, lambda: f"rank {j}: {v} vs filter {a} vs stream {b}")
        results.append(t.result())
    return results


# -- decompositions ----------------------------------------------------------------

def _round_trips(decompose, value, n) -> bool:
    # value() runs the validity scan and raises on a malformed decomposition
    try:
        return value(decompose(n)) == n
    except ValueError:
        return False


def check_round_trips(limit: int) -> list[CheckResult]:
    tz, tc = _Tally("decomp.z-round-trip"), _Tally("decomp.cg-round-trip")
    for n in range(0, limit + 1):
        tz(_round_trips(z_decompose, z_value, n), lambda: f"n={n}")
        tc(_round_trips(cg_decompose, cg_value, n), lambda: f"n={n}")
    return [tz.result(), tc.result()]


def check_z_uniqueness(limit: int) -> CheckResult:
    t = _Tally("decomp.z-unique")
    for n in range(1, limit + 1):
        t(oracle.oracle_z_all(n, fib_index_below(n)) == [z_decompose(n)], lambda: f"n={n}")
    return t.result()


def check_cg_uniqueness(limit: int) -> CheckResult:
    t = _Tally("decomp.cg-unique")
    for n in range(1, limit + 1):
        t(oracle.oracle_cg_all(n, fib_index_below(n)) == [cg_decompose(n)], lambda: f"n={n}")
    return t.result()


def check_cg_greedy_rule(limit: int) -> CheckResult:
    """Taking 2F at remainder == 2F agrees with the strict two-step rule."""
    t = _Tally("decomp.cg-greedy-rule")
    for n in range(0, limit + 1):
        t(oracle.oracle_cg_literal_greedy(n) == cg_decompose(n), lambda: f"n={n}")
    return t.result()


def check_cg_telescoping(m_max: int = 200) -> CheckResult:
    t = _Tally("decomp.cg-telescoping")
    for m in range(1, m_max + 1):
        d = ChungGrahamDecomposition(tuple((2 * i, 1) for i in range(1, m + 1)))
        t(cg_value(d) == fib(2 * m + 1) - 1, lambda: f"m={m}")
    return t.result()


# -- arithmetic ------------------------------------------------------------------------

def check_floor_phi(limit: int, big_samples: int = 20, seed: int = 0) -> CheckResult:
    t = _Tally("arith.floor-phi")
    for n in range(1, limit + 1):
        t(floor_phi(n) == oracle.oracle_floor_phi(n), lambda: f"n={n}")
    rng = random.Random(seed)
    for _ in range(big_samples):
        n = 10**30 + rng.randrange(-10**20, 10**20)
        t(floor_phi(n) == oracle.oracle_floor_phi(n), lambda: f"n={n}")
    return t.result()


def check_isqrt(limit: int) -> CheckResult:
    t = _Tally("arith.isqrt")
    for x in range(0, limit + 1):
        s = isqrt(x)
        t(s * s <= x < (s + 1) * (s + 1), lambda: f"x={x}")
    return t.result()


def check_complementarity(limit: int) -> CheckResult:
    t = _Tally("arith.complementarity")
    for n in range(1, limit + 1):
        t(floor_inv_phi(floor_phi(n) + 1) == n, lambda: f"n={n}")
    return t.result()


# -- targets ----------------------------------------------------------------------------

Z_ORACLE_LIMIT = 5000
CG_ORACLE_LIMIT = 2000
SPLIT_LIMIT = 10**4
RANK_COUNT = 500


def run_target(target: str, ks: list[int], limit: int,
               cap: int = DEFAULT_PREFIX_CAP) -> Iterator[CheckResult]:
    """Yield results for one target ("all" runs every target in order)."""
    if target == "all":
        for name in TARGETS:
            yield from run_target(name, ks, limit, cap)
        return
    if target == "main":
        yield from check_main(ks, limit)
        for k in ks:
            if k >= 2:
                yield check_low_high_split(k, min(limit, SPLIT_LIMIT))
    elif target == "z-to-cg":
        for k in ks:
            yield check_z_to_cg_range(k, limit)
    elif target == "cg-to-z":
        for k in ks:
            yield check_cg_to_z_range(k, limit)
    elif target == "golden":
        yield from check_golden(limit, cap)
    elif target == "tables":
        for k in ks:
            yield check_z_table(k)
            yield check_cg_table(k)
    elif target == "diffs":
        for k in ks:
            yield from check_diffs(k, limit)
            yield check_r_beta(k, limit)
    elif target == "ranks":
        for k in ks:
            yield from check_ranks(k, RANK_COUNT)
    elif target == "decomp":
        yield from check_round_trips(limit)
        yield check_z_uniqueness(min(limit, Z_ORACLE_LIMIT))
        yield check_cg_uniqueness(min(limit, CG_ORACLE_LIMIT))
        yield check_cg_greedy_rule(limit)
        yield check_cg_telescoping()
    elif target == "arith":
        yield check_floor_phi(limit)
        yield check_isqrt(limit)
        yield check_complementarity(limit)
    else:
        raise ValueError(f"unknown target {target!r}")
