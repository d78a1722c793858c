"""Exit criteria. Every check is exact; each also has a wall-clock budget."""

import subprocess
import sys
import time

import pytest

from fibrep import verify
from fibrep.fibcore import fib

from conftest import ACCEPTANCE_LINES


def _run(number, title, budget, fn):
    start = time.perf_counter()
    results = fn()
    elapsed = time.perf_counter() - start
    bad = [r for r in results if not r.ok]
    cases = sum(r.cases for r in results)
    ok = not bad and elapsed <= budget
    line = (f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}: {cases} cases, "
            f"{len(bad)} failing checks, {elapsed:.1f}s (budget {budget}s)")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not bad, [(r.check, r.k, r.detail) for r in bad]
    assert elapsed <= budget


def test_01_set_equality():
    _run(1, "I_2k brute force == closed form, k=1..6, n<=1e5", 60,
         lambda: verify.check_main(range(1, 7), 10**5))


def test_02_uniqueness():
    _run(2, "unique Zeckendorf (n<=5000) and Chung-Graham (n<=2000)", 120,
         lambda: [verify.check_z_uniqueness(5000), verify.check_cg_uniqueness(2000)])


def test_03_round_trips():
    _run(3, "round trips and validity scans on 0..1e6", 60,
         lambda: verify.check_round_trips(10**6))


def test_04_golden_string():
    def checks():
        results = verify.check_golden(10**5)
        assert len(verify.prefix(fib(25))) >= 75025
        return [r for r in results if r.check != "golden.beta"]
    _run(4, "golden string items 1-8", 30, checks)


def test_05_z_to_cg():
    _run(5, "F_2k in CG(p(j)) iff letter j-1 is B, k=1..4, j<=F_18", 30,
         lambda: [verify.check_z_to_cg_range(k, fib(18)) for k in range(1, 5)])


def test_06_cg_to_z():
    _run(6, "F_2k in Z(q(j)) iff letter j-1 is A, k=1..4, j<=F_18", 30,
         lambda: [verify.check_cg_to_z_range(k, fib(18)) for k in range(1, 5)])


def test_07_difference_rules():
    _run(7, "p and r difference rules, k=1..4, j<=1e4", 10,
         lambda: [r for k in range(1, 5) for r in verify.check_diffs(k, 10**4)])


def test_08_table_recursions():
    _run(8, "Zeckendorf and Chung-Graham table recursions, k=1..3, l<=10", 10,
         lambda: [t for k in range(1, 4)
                  for t in (verify.check_z_table(k, 10), verify.check_cg_table(k, 10))])


def test_09_floor_phi():
    _run(9, "floor(n phi) vs 256-bit fixed point, n<=1e5 and 20 near 1e30", 10,
         lambda: [verify.check_floor_phi(10**5, big_samples=20)])


def test_10_beta():
    _run(10, "beta(j) vs scanned B positions, j<=1e4", 5,
         lambda: [verify.check_beta(10**4)])


@pytest.mark.slow
def test_11_cli_verify_all():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "fibrep", "verify", "all", "--k", "1..4", "--limit", "100000"],
        capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    lines = proc.stdout.splitlines()
    fails = [line for line in lines if line.startswith("FAIL")]
    ok = proc.returncode == 0 and not fails and elapsed <= 300
    line = (f"[{'PASS' if ok else 'FAIL'}] 11. fibrep verify all --k 1..4 --limit 100000: "
            f"exit {proc.returncode}, {len(lines) - 1} checks, {len(fails)} failing, "
            f"{elapsed:.1f}s (budget 300s)")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert not fails
    assert lines[-1].endswith("0 failed")
    assert elapsed <= 300
