import pytest

from fibrep import verify
from fibrep.verify import run_target


@pytest.mark.parametrize("target", ["main", "z-to-cg", "cg-to-z", "tables", "diffs",
                                    "ranks", "decomp", "arith"])
def test_targets_pass_small(target):
    results = list(run_target(target, [1, 2], 3000))
    assert results
    assert all(r.ok for r in results), [r for r in results if not r.ok]


def test_golden_target():
    results = list(run_target("golden", [1], 5000))
    assert [r.check for r in results] == [f"golden.item{i}" for i in range(1, 9)] + ["golden.beta"]
    assert all(r.ok for r in results)


def test_unknown_target():
    with pytest.raises(ValueError):
        list(run_target("bogus", [1], 10))


def test_z_to_cg_case_count():
    res = verify.check_z_to_cg_range(1, 2584)
    assert (res.cases, res.failures) == (2583, 0)


def test_failure_is_reported(monkeypatch):
    # a wrong closed form must surface as FAIL, not be masked
    monkeypatch.setattr(verify, "i_element", lambda k, n, j: n * 7 + j)
    results = verify.check_main([2], 500)
    assert results[0].status == "FAIL"
    assert results[0].failures > 0
    assert "missing" in results[0].detail


def test_broken_rank_is_caught(monkeypatch):
    monkeypatch.setattr(verify, "q", lambda k, j: j)
    assert not verify.check_cg_table(1, 3).ok
