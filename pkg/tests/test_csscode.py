import numpy as np
import pytest

from hypcode.csscode import CssCode, from_checks, from_tiling, rate_check
from hypcode.fpgroup import enumerate_quotient
from hypcode.homology import BitMatrix
from hypcode.tiling import build_tiling, build_toric, catalog, catalog_entry


def code_for(code_id):
    e = catalog_entry(code_id)
    t = build_tiling(enumerate_quotient(e.presentation()), e.r, e.s)
    return from_tiling(t, code_id=code_id)


def check_invariants(code):
    n, k = code.n, code.k
    assert not ((code.h_x.a.astype(int) @ code.h_z.a.T.astype(int)) & 1).any()
    xm, zm = code.logical_x_matrix, code.logical_z_matrix
    assert xm.shape == (k, n) and zm.shape == (k, n)
    # logicals commute with all opposite-type checks
    assert not ((code.h_x.a.astype(int) @ zm.T.astype(int)) & 1).any()
    assert not ((code.h_z.a.astype(int) @ xm.T.astype(int)) & 1).any()
    # symplectic pairing: X_i anticommutes with Z_j iff i == j
    overlap = (xm.astype(int) @ zm.T.astype(int)) & 1
    assert (overlap == np.eye(k, dtype=int)).all()


@pytest.mark.parametrize("L", [2, 3, 4])
def test_toric_code(L):
    code = from_tiling(build_toric(L))
    assert (code.n, code.k) == (2 * L * L, 2)
    check_invariants(code)


@pytest.mark.parametrize("code_id", ["54-60", "54-160"])
def test_catalog_codes_match_table(code_id):
    entry = catalog_entry(code_id)
    code = code_for(code_id)
    assert (code.n, code.k) == (entry.n, entry.k)
    check_invariants(code)


@pytest.mark.parametrize("code_id", ["83-48", "83-168"])
def test_83_rows_compute_k_two_above_table(code_id):
    # every {8,3} catalog row tabulates k two below the surface count;
    # the computed rank follows the formula, not the table
    entry = catalog_entry(code_id)
    code = code_for(code_id)
    assert code.n == entry.n
    assert code.k == entry.k + 2
    rep = rate_check(code, 8, 3)
    assert rep.match and rep.k_formula == code.k
    check_invariants(code)


def test_rate_check_ok_and_mismatch():
    code = code_for("54-60")
    rep = rate_check(code, 5, 4)
    assert rep.match and rep.k_computed == 8
    assert "ok" in str(rep)
    # the 8,3 n=48 entry's tabulated k disagrees with the surface count
    code48 = code_for("83-48")
    assert code48.k == 6
    assert catalog_entry("83-48").k == 4
    rep48 = rate_check(code48, 8, 3)
    assert rep48.match  # computed k does satisfy the formula
    assert rep48.k_formula == 6


def test_from_checks_rejects_bad_input():
    h = BitMatrix(np.array([[1, 1, 0]], dtype=np.uint8))
    wide = BitMatrix(np.array([[1, 0, 0, 1]], dtype=np.uint8))
    with pytest.raises(ValueError):
        from_checks(h, wide)
    anti = BitMatrix(np.array([[1, 0, 0]], dtype=np.uint8))
    with pytest.raises(ValueError):
        from_checks(h, anti)


def test_from_checks_accepts_ndarray():
    # tiny [[4,1]] toy: two weight-2 X checks, one weight-4 Z check
    h_x = np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8)
    h_z = np.array([[1, 1, 1, 1]], dtype=np.uint8)
    code = from_checks(h_x, h_z)
    assert code.n == 4 and code.k == 1
    check_invariants(code)


def test_json_roundtrip():
    code = code_for("54-60")
    code2 = CssCode.from_json(code.to_json())
    assert code2.to_dict() == code.to_dict()
    check_invariants(code2)


def test_all_catalog_rows_have_consistent_metadata():
    for entry in catalog():
        assert entry.code_id == f"{entry.r}{entry.s}-{entry.n}"
        assert entry.d <= entry.csys
