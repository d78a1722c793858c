import pytest
from hypothesis import given, strategies as st

from fibrep.chung_graham import cg_decompose
from fibrep.fibcore import fib
from fibrep.golden import beta, letter_at
from fibrep.index_sets import (SetHandle, SetKind, check_cg_to_z, check_z_to_cg, diff_p,
                               diff_r, enumerate_set, i_element, member, p, q, r, ranked)
from fibrep.oracle import oracle_set
from fibrep.zeckendorf import z_decompose


@pytest.mark.parametrize("k, j, expected", [(1, 1, 1), (1, 2, 4), (1, 5, 12)])
def test_p(k, j, expected):
    assert p(k, j) == expected


# q(1, 13) = F_2 + F_4 + 2F_6 = 1 + 3 + 16
@pytest.mark.parametrize("k, j, expected", [(1, 2, 2), (1, 5, 7), (1, 13, 20), (1, 1, 1)])
def test_q(k, j, expected):
    assert q(k, j) == expected


@pytest.mark.parametrize("k, n, expected", [(1, 1, 1), (1, 2, 4), (1, 4, 12)])
def test_r(k, n, expected):
    assert r(k, n) == expected


@pytest.mark.parametrize("fn", [p, q, r])
def test_rank_functions_reject_zero(fn):
    with pytest.raises(ValueError):
        fn(1, 0)
    with pytest.raises(ValueError):
        fn(0, 1)


@pytest.mark.parametrize("kind, k, n, expected", [
    ("I", 2, 4, True),
    ("A", 1, 2, False),
    ("C", 1, 6, False),
    ("B", 1, 2, True),
    ("C", 1, 12, True),
])
def test_member(kind, k, n, expected):
    assert member(SetHandle(kind, k), n) is expected


def test_member_rejects_zero():
    with pytest.raises(ValueError):
        member(SetHandle("A", 1), 0)


def test_handle_validation():
    with pytest.raises(ValueError):
        SetHandle("A", 0)
    with pytest.raises(ValueError):
        SetHandle("D", 1)
    assert SetHandle("C", 3).kind is SetKind.C


@pytest.mark.parametrize("k, n, j, expected", [(2, 1, 0, 3), (2, 1, 1, 4), (2, 2, 0, 11)])
def test_i_element(k, n, j, expected):
    assert i_element(k, n, j) == expected


def test_i_element_offset_range():
    with pytest.raises(ValueError):
        i_element(2, 1, 2)  # F_3 = 2, so offsets are 0 and 1
    with pytest.raises(ValueError):
        i_element(2, 1, -1)


@pytest.mark.parametrize("kind, k, limit, expected", [
    ("C", 1, 12, [1, 4, 9, 12]),
    ("I", 2, 12, [3, 4, 11, 12]),
    ("A", 1, 9, [1, 4, 6, 9]),
    ("B", 1, 4, [1, 2, 4]),
])
def test_enumerate(kind, k, limit, expected):
    assert list(enumerate_set(SetHandle(kind, k), limit)) == expected
    assert oracle_set(SetHandle(kind, k), limit) == expected


@pytest.mark.parametrize("kind", "ABCI")
@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumerate_matches_filter(kind, k):
    h = SetHandle(kind, k)
    assert list(enumerate_set(h, 3000)) == oracle_set(h, 3000)


def test_ranked_matches_enumerate():
    for kind in "ABCI":
        h = SetHandle(kind, 2)
        values = [v for _, v in ranked(h, 200)]
        assert values == list(enumerate_set(h, values[-1]))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_rank_functions_match_filter(k):
    for kind, fn in (("A", p), ("B", q), ("C", r)):
        values = [fn(k, j) for j in range(1, 501)]
        assert oracle_set(SetHandle(kind, k), values[-1]) == values


@pytest.mark.parametrize("k, j, expected", [(1, 1, 3), (1, 2, 2), (2, 1, 8)])
def test_diff_p(k, j, expected):
    assert diff_p(k, j) == expected
    assert p(k, j + 1) - p(k, j) == expected


@pytest.mark.parametrize("k, j, expected", [(1, 2, 5), (1, 3, 3), (2, 2, 13)])
def test_diff_r(k, j, expected):
    assert diff_r(k, j) == expected
    assert r(k, j + 1) - r(k, j) == expected


def test_diff_r_rejects_small_j():
    with pytest.raises(ValueError):
        diff_r(1, 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_difference_rules(k):
    for j in range(1, 10**4 + 1):
        assert p(k, j + 1) - p(k, j) == diff_p(k, j)
    for j in range(2, 10**4 + 1):
        assert r(k, j + 1) - r(k, j) == diff_r(k, j)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_r_is_p_after_each_B(k):
    for n in range(1, 1001):
        assert r(k, n + 1) == p(k, beta(n) + 1)


@pytest.mark.parametrize("j, in_cg", [(3, False), (2, True), (8, False)])
def test_z_to_cg_table_rows(j, in_cg):
    assert check_z_to_cg(1, j)
    assert (2 in cg_decompose(p(1, j)).coeffs()) is in_cg


@pytest.mark.parametrize("j, in_z", [(3, True), (5, False), (11, True)])
def test_cg_to_z_table_rows(j, in_z):
    assert check_cg_to_z(1, j)
    assert (2 in z_decompose(q(1, j)).indices) is in_z


def test_correspondence_checks_reject_j1():
    with pytest.raises(ValueError):
        check_z_to_cg(1, 1)
    with pytest.raises(ValueError):
        check_cg_to_z(1, 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_correspondences_through_F18(k):
    for j in range(2, fib(18) + 1):
        assert check_z_to_cg(k, j)
        assert check_cg_to_z(k, j)


def test_letter_tables_from_paper():
    # Y/N columns of the two annotated tables, rows 2..13
    z_to_cg = "YNYYNYNYYNYY"
    cg_to_z = "NYNNYNYNNYNN"
    for j in range(2, 14):
        assert (2 in cg_decompose(p(1, j)).coeffs()) == (z_to_cg[j - 2] == "Y")
        assert (2 in z_decompose(q(1, j)).indices) == (cg_to_z[j - 2] == "Y")
        assert letter_at(j - 1) == ("B" if z_to_cg[j - 2] == "Y" else "A")


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=10**30))
def test_closed_form_r_is_in_C(k, n):
    v = r(k, n)
    assert z_decompose(v).indices[0] == 2 * k
    assert cg_decompose(v).terms[0][0] == 2 * k


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=1, max_value=10**20), st.data())
def test_closed_form_i_has_F2k_in_both(k, n, data):
    j = data.draw(st.integers(min_value=0, max_value=fib(2 * k - 1) - 1))
    v = i_element(k, n, j)
    assert 2 * k in z_decompose(v).indices
    assert 2 * k in cg_decompose(v).coeffs()


def test_large_k_spot_check():
    k = 500
    for j in (1, 2, 3, 50):
        assert z_decompose(p(k, j)).indices[0] == 2 * k
        assert cg_decompose(q(k, j)).terms[0][0] == 2 * k
    assert check_z_to_cg(k, 7)
    assert check_cg_to_z(k, 7)
