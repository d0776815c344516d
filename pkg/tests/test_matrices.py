import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tkmoves.diagram import find_sites, named
from tkmoves.matrices import (IntMatrix, MatrixError, branched_cover_homology, cover_homology_goeritz,
                              cover_homology_seifert, goeritz_matrix, mu_correction, same_group,
                              seifert_matrix, signature, signature_goeritz, smith_normal_form,
                              tristram_levine)
from tkmoves.skein import alexander, homfly
from tkmoves.suite import goeritz_move_difference


def det(m):
    return round(np.linalg.det(np.array(m.entries, dtype=float))) if m.rows else 1


def test_goeritz_examples():
    assert goeritz_matrix(named("T1")).rows == 0
    g = goeritz_matrix(named("3_1"))
    assert abs(det(g)) == 3
    assert abs(det(goeritz_matrix(named("4_1")))) == 5


def test_goeritz_needs_connected():
    with pytest.raises(MatrixError):
        goeritz_matrix(named("T2"))


def test_seifert_examples():
    assert seifert_matrix(named("T1")).rows == 0
    v = seifert_matrix(named("3_1"))
    assert v.rows == 2
    a = np.array(v.entries)
    assert abs(round(np.linalg.det(a + a.T))) == 3
    assert abs(seifert_matrix(named("2_1^2"))[0, 0]) == 1


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "6_3", "8_5", "2_1^2", "K2c"])
def test_seifert_alexander(name):
    a = np.array(seifert_matrix(named(name)).entries, dtype=float)
    delta = alexander(named(name))
    for u in (0.13, 0.37, 0.71):
        s = cmath.exp(2j * math.pi * u)
        lhs = np.linalg.det(a / s - s * a.T)
        assert math.isclose(abs(lhs), abs(delta(s=s)), rel_tol=1e-9, abs_tol=1e-9)


def test_snf_examples():
    assert smith_normal_form(IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).factors == (1, 1, 1)
    assert smith_normal_form([[2, 1], [1, 2]]).factors == (1, 3)
    assert smith_normal_form([[0, 0], [0, 0]]).factors == (0, 0)


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_snf_chain_and_determinant(rows):
    f = smith_normal_form(rows).factors
    for x, y in zip(f, f[1:]):
        assert x == 0 and y == 0 or (x != 0 and y % x == 0)
    assert abs(round(np.linalg.det(np.array(rows, dtype=float)))) == math.prod(f)


def test_cover_examples():
    assert branched_cover_homology(named("3_1"), 2).factors[-1:] == (3,)
    assert str(branched_cover_homology(named("3_1"), 2)) == "Z/3"
    h = branched_cover_homology(named("3_1"), 3)
    assert h.torsion == (2, 2) and h.dim_mod(2) == 2
    assert str(branched_cover_homology(named("4_1"), 3)) == "Z/4 + Z/4"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("s", [2, 3])
def test_unlink_cover_rank(n, s):
    assert branched_cover_homology(named(f"T{n}"), s).free_rank == (s - 1) * (n - 1)


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "6_3", "2_1^2", "6_2^3", "8_18", "9_42"])
def test_double_cover_routes_agree(name):
    d = named(name)
    assert same_group(cover_homology_goeritz(d), cover_homology_seifert(d, 2))


def test_signature_examples():
    assert signature(named("T1")).signature == 0
    assert signature(named("4_1")).signature == 0
    assert signature(named("3_1")).signature == -2
    assert signature(named("3_1m")).signature == 2
    assert tristram_levine(named("3_1"), 0).signature == -2
    assert tristram_levine(named("T1"), 0.3 + 0.2j).signature == 0
    with pytest.raises(MatrixError):
        tristram_levine(named("3_1"), 1)


def test_mu_examples():
    for name in ("3_1", "4_1", "5_2"):
        d = named(name)
        assert mu_correction(d.mirror()) == -mu_correction(d)
    d = named("4_1")
    assert signature_goeritz(d) == 0


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_goeritz_single_entry_changes(name, k):
    d = named(name)
    checked = 0
    for s in find_sites(d, "TK")[:3]:
        diff = goeritz_move_difference(d, s, k)
        if diff is None:
            continue
        nz = [(i, j, v) for i, row in enumerate(diff) for j, v in enumerate(row) if v]
        assert len(nz) == 1 and nz[0][0] == nz[0][1] and abs(nz[0][2]) == k
        checked += 1
    assert checked


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "2_1^2"])
def test_determinant_relation(name):
    from tkmoves.matrices import tl_matrix
    d = named(name)
    v, p = seifert_matrix(d), homfly(d)
    for u in (0.1, 0.3, 0.55, 0.8):
        xi = 1 - cmath.exp(2j * math.pi * u)
        lhs = np.linalg.det(1j * tl_matrix(v, xi))
        assert cmath.isclose(lhs, p(a=1j, z=2 - xi - xi.conjugate()), rel_tol=1e-9, abs_tol=1e-9)
