import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tkmoves.diagram import apply_move, braid_closure, find_sites, named, parse_braid
from tkmoves.matrices import branched_cover_homology, tristram_levine
from tkmoves.obstruction import (CongruenceMode, Verdict, bar_t2k_obstruction, fox_colorings, jones_tk_factor,
                                 lickorish_millett_check, lmm_check, mod_k_congruence, murakami_arf,
                                 tk_obstruction)
from tkmoves.skein import homfly, jones
from tkmoves.suite import T4_SCRIPTS, XI0, script_braid

P = lambda name: homfly(named(name))
V = lambda name: jones(named(name))


def test_tk_examples():
    r = tk_obstruction(P("T1"), P("3_1"), 4, 1)
    assert r.verdict is Verdict.COMPATIBLE and r.n == 1
    assert tk_obstruction(P("T1"), P("4_1"), 4, 1).verdict is Verdict.INCOMPATIBLE
    assert tk_obstruction(P("T2"), P("K2c"), 4, 1).verdict is Verdict.INCOMPATIBLE
    for k in (3, 4, 5):
        r = tk_obstruction(P("T1"), P("T1"), k, 1)
        assert r.verdict is Verdict.COMPATIBLE and r.n == 0


def test_bar_examples():
    assert bar_t2k_obstruction(P("T1"), P("5_2"), 2).verdict is Verdict.COMPATIBLE
    assert bar_t2k_obstruction(P("3_1"), P("4_1"), 2).verdict is Verdict.COMPATIBLE
    assert bar_t2k_obstruction(P("T1"), P("3_1"), 2).verdict is Verdict.INCOMPATIBLE


def test_jones_examples():
    assert jones_tk_factor(V("T1"), V("3_1"), 3, 1).verdict is Verdict.INCOMPATIBLE
    r = jones_tk_factor(V("T1"), V("T1"), 3, 1)
    assert r.verdict is Verdict.COMPATIBLE and r.n == 0
    # V(4_1) is -1 at the sixth root of unity, a square of the t3 unit
    r = jones_tk_factor(V("T1"), V("4_1"), 3, 1)
    assert r.verdict is Verdict.COMPATIBLE and r.n == 2


def reduce_oracle(p2, p1, k, n):
    """Brute force: evaluate z = 2e term by term, subtract, test every coefficient against the odd part of k."""
    ko = k
    while ko % 2 == 0:
        ko //= 2

    def at(p, e, shift, sign):
        out = {}
        for (ea, ez), c in p.terms.items():
            out[ea + shift] = out.get(ea + shift, 0) + sign * Fraction(c) * Fraction(2 * e) ** ez
        return out

    for e in (1, -1):
        diff = at(p2, e, 0, 1)
        for ea, c in at(p1, e, -k * n, e ** (k * n)).items():
            diff[ea] = diff.get(ea, 0) - c
        if any(c.numerator % ko for c in diff.values()):
            return False
    return True


def test_congruence_examples():
    assert mod_k_congruence(P("T1"), P("5_2"), 2, CongruenceMode.BAR_T2K_AT_PM_I)
    assert mod_k_congruence(P("4_1"), P("4_1"), 5, n=0)
    for k in (3, 5, 6, 9):
        assert mod_k_congruence(P("T1"), P("3_1"), k) == reduce_oracle(P("3_1"), P("T1"), k, 1)
    with pytest.raises(ValueError):
        mod_k_congruence(P("T1"), P("3_1"), 1)


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2"])
@pytest.mark.parametrize("k", [3, 5, 6, 7])
def test_congruence_on_moves(name, k):
    d = named(name)
    s = find_sites(d, "TK")[0]
    p1, p2 = homfly(d), homfly(apply_move(d, s, k))
    assert mod_k_congruence(p1, p2, k)
    assert reduce_oracle(p2, p1, k, 1)


def test_arf():
    assert murakami_arf(named("3_1")) == 1
    assert murakami_arf(named("T1")) == 0
    assert murakami_arf(named("4_1")) == 1


def test_lickorish_millett():
    for n in range(1, 5):
        c = lickorish_millett_check(named(f"T{n}"))
        assert c.dim == n - 1 and math.isclose(abs(c.lhs), math.sqrt(3) ** (n - 1))
    c = lickorish_millett_check(named("3_1"))
    assert c.dim == 1 and math.isclose(abs(c.lhs), math.sqrt(3))
    c = lickorish_millett_check(named("4_1"))
    assert c.dim == 0 and math.isclose(abs(c.lhs), 1)


def test_three_fold_cover_values():
    for n in range(1, 5):
        c = lmm_check(named(f"T{n}"))
        assert c.dim == 2 * (n - 1) and c.lhs == 2 ** (n - 1)
    c = lmm_check(named("3_1"))
    assert c.dim == 2 and c.lhs == -2 and c.consistent
    c = lmm_check(named("T1"))
    assert c.lhs == 1 and c.dim == 0


def test_colorings():
    assert fox_colorings(named("3_1"), 3) == 9
    assert fox_colorings(named("4_1"), 3) == 3
    for p in (3, 5, 7):
        assert fox_colorings(named("T1"), p) == p


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "6_3", "2_1^2", "8_18", "9_42"])
@pytest.mark.parametrize("p", [3, 5, 7])
def test_dihedral_criterion(name, p):
    d = named(name)
    assert (fox_colorings(d, p) > p) == (branched_cover_homology(d, 2).dim_mod(p) > 0)


@pytest.mark.parametrize("start,steps,level,target", T4_SCRIPTS)
def test_t4_level_from_signature(start, steps, level, target):
    d1 = braid_closure(parse_braid(start))
    d2 = braid_closure(parse_braid(script_braid(start, steps)))
    assert abs(homfly(d1)(a=1j, z=math.sqrt(2))) > 1e-9
    half = (tristram_levine(d1, XI0).signature - tristram_levine(d2, XI0).signature) / 2
    assert tk_obstruction(homfly(d1), homfly(d2), 4, 1).n == level == half


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["3_1", "4_1", "5_2", "2_1^2"]), st.integers(0, 50), st.sampled_from([3, -3, 4, -4, 5]))
def test_level_distance_of_single_move(name, i, k):
    d = named(name)
    ss = find_sites(d, "TK")
    d2 = apply_move(d, ss[i % len(ss)], k)
    r = tk_obstruction(homfly(d), homfly(d2), abs(k), 1)
    assert r.verdict is Verdict.COMPATIBLE and r.n == (1 if k > 0 else -1)
