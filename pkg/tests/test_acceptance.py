"""Acceptance criteria 1-9.  Literal forms known to be misprinted are kept as strict xfails."""

import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from tkmoves.diagram import apply_move, braid_closure, find_sites, link_table, named, parse_braid
from tkmoves.laurent import AZ, LaurentPoly, az, close, parse
from tkmoves.matrices import (cover_homology_goeritz, cover_homology_seifert, same_group, seifert_matrix,
                              signature_goeritz, signature_seifert, tl_matrix, tristram_levine)
from tkmoves.obstruction import (Verdict, bar_t2k_obstruction, fox_colorings, jones_tk_factor,
                                 lickorish_millett_check, lmm_check, mod_k_congruence, murakami_arf,
                                 tk_obstruction)
from tkmoves.skein import homfly, jones, kauffman_f
from tkmoves.suite import (BAR_T4_CLASSES, EXAMPLE_POLYS, GOLDEN_VALUES, KS, PHI, SITE_NAMES, T3_CLASSES,
                           T3_SCRIPTS, T4_CLASSES, T4_SCRIPTS, XI0, Z1_VALUES, algebraic_crossing, apow,
                           bar_alternating_identity, bar_sum_identity, bar_twist_identity, conway_identity,
                           divide_by_a_plus_inverse, fulltwist_sites, goeritz_move_difference,
                           half_bar_identity, kauffman_conway_identity, kauffman_twist_identity,
                           odd_site, script_braid, sites, skein_residuals, twist_identity, unit_specialisation)

P = lambda name: homfly(named(name))
A_ONLY = ("a",)


def table(max_crossings=14):
    for name, entry in link_table().items():
        d = entry.diagram()
        if len(d.crossings) <= max_crossings:
            yield name, d


def at_a_one(p):
    return p.substitute("a", LaurentPoly.const(1, ("z",)))


def at_z_one(p):
    return p.substitute("z", LaurentPoly.const(1, A_ONLY))


# 1. polynomials of the worked examples

@pytest.mark.criterion(1)
@pytest.mark.parametrize("name", ["T1", "3_1", "4_1"])
def test_printed_polynomials(name):
    assert P(name) == az(EXAMPLE_POLYS[name])


@pytest.mark.criterion(1)
def test_five_two_computed():
    # the printed a^-2 term reads a^2 in the computed polynomial; everything else matches
    assert P("5_2") == az("-a^2 + a^4 + a^6 + a^2 z^2 - a^4 z^2")


@pytest.mark.criterion(1)
@pytest.mark.xfail(strict=True, reason="printed constant term -a^-2 is a typo for -a^2")
def test_five_two_printed():
    assert P("5_2") == az("-a^-2 + a^4 + a^6 + a^2 z^2 - a^4 z^2")


@pytest.mark.criterion(1)
def test_printed_specialisations():
    assert at_a_one(P("3_1")) == parse("z^2 - 3", ("z",))
    assert at_a_one(P("5_2")) == 1
    p = P("4_1")
    rng = random.Random(3)
    for _ in range(24):
        a = cmath.exp(2j * math.pi * rng.random())
        assert close(p(a=a, z=math.sqrt(2)), -a ** -2 + 1 - a ** 2)


# 2. specialisations at z = 1

@pytest.mark.criterion(2)
@pytest.mark.parametrize("name", list(Z1_VALUES))
def test_z_one(name):
    assert at_z_one(P(name)) == parse(Z1_VALUES[name], A_ONLY)


# 3. values at (1, golden ratio)

@pytest.mark.criterion(3)
@pytest.mark.parametrize("name", list(GOLDEN_VALUES))
def test_golden_values(name):
    got = P(name)(a=1, z=PHI)
    assert abs(got.imag) < 1e-9
    assert math.isclose(abs(got.real), abs(GOLDEN_VALUES[name]), rel_tol=1e-9)


@pytest.mark.criterion(3)
def test_golden_signed():
    for n in range(1, 5):
        assert math.isclose(P(f"T{n}")(a=1, z=PHI).real, (math.sqrt(5) - 1) ** (n - 1))
    assert math.isclose(P("3_1")(a=1, z=PHI).real, (-3 + math.sqrt(5)) / 2)
    assert math.isclose(P("8_5")(a=1, z=PHI).real, -4 + math.sqrt(5))
    assert math.isclose(P("8_18")(a=1, z=PHI).real, 1 - 2 * math.sqrt(5))


@pytest.mark.criterion(3)
@pytest.mark.xfail(strict=True, reason="printed value for 8_18 is half the computed one")
def test_golden_eight_eighteen_printed():
    assert math.isclose(abs(P("8_18")(a=1, z=PHI)), abs((1 - 2 * math.sqrt(5)) / 2), rel_tol=1e-9)


# 4. twisting identities

TK_SITES = list(sites("TK"))
BAR_SITES = list(sites("TBARK"))


@pytest.mark.criterion(4)
def test_site_coverage():
    assert len({n for n, _, _ in TK_SITES}) >= 5
    assert len({n for n, _, _ in BAR_SITES}) >= 5


@pytest.mark.criterion(4)
@pytest.mark.parametrize("k", KS)
def test_twist_and_conway(k):
    for name, d, s in TK_SITES:
        assert twist_identity(d, s, k), name
        assert conway_identity(d, s, k), name


@pytest.mark.criterion(4)
@pytest.mark.parametrize("k", KS)
def test_bar_identities(k):
    for name, d, s in BAR_SITES:
        if len(d.crossings) + 2 * k > 14:
            continue
        assert bar_twist_identity(d, s, k), name
        assert bar_sum_identity(d, s, k), name
        assert bar_alternating_identity(d, s, k), name


@pytest.mark.criterion(4)
@pytest.mark.parametrize("k", KS)
def test_half_bar_identity(k):
    for name, d, s in BAR_SITES:
        if k % 2 == 0:
            assert half_bar_identity(d, s, k), name
        elif d.components() == 1:
            for keep in (1, 2):
                assert half_bar_identity(d, odd_site(s, keep), k), name


@pytest.mark.criterion(4)
@pytest.mark.xfail(strict=True, reason="printed coefficient squares a + 1/a in the denominator")
def test_bar_sum_printed_coefficient():
    for name, d, s in BAR_SITES:
        for k in (2, 3):
            num = apow(k) + (-1) ** (k + 1) * apow(-k)
            quo = divide_by_a_plus_inverse(num)
            assert bar_sum_identity(d, s, k, coeff=quo * quo), name


@pytest.mark.criterion(4)
@pytest.mark.xfail(strict=True, reason="printed sign rule gives +1 for k divisible by 4")
def test_half_bar_printed_sign():
    # compared with the denominator a + 1/a cleared, since the printed quotient is not a polynomial
    from tkmoves.diagram import slot_tangle
    z = LaurentPoly.gen("z", AZ)
    k = 4
    eps = -1 if (k + 2) % 4 == 0 else 1
    for name, d, s in BAR_SITES:
        lhs = apow(-k) * homfly(apply_move(d, s, k)) - apow(k) * homfly(apply_move(d, s, -k))
        rhs = z * (apow(-k) + eps * apow(k)) * homfly(slot_tangle(d, s, "inf"))
        assert lhs * (apow(1) + apow(-1)) == rhs, name


@pytest.mark.criterion(4)
@pytest.mark.parametrize("k", KS)
def test_kauffman_identities(k):
    count = 0
    for name, d, s in TK_SITES:
        if len(d.crossings) + k > 11:
            continue
        assert kauffman_twist_identity(d, s, k), name
        assert kauffman_twist_identity(d, s, k, mirror=True), name
        assert kauffman_conway_identity(d, s, k), name
        count += 1
    assert count >= 5


@pytest.mark.criterion(4)
def test_unit_specialisation_on_table():
    for name, d in table():
        assert unit_specialisation(homfly(d)), name


# 5. obstruction verdicts

def _pairs(classes):
    for c1 in classes:
        for c2 in classes:
            for x in c1:
                for y in c2:
                    yield x, y, c1 == c2


@pytest.mark.criterion(5)
def test_t4_classes():
    for x, y, same in _pairs(T4_CLASSES):
        want = Verdict.COMPATIBLE if same else Verdict.INCOMPATIBLE
        assert tk_obstruction(P(x), P(y), 4, 1).verdict is want, (x, y)
    assert tk_obstruction(P("T2"), P("K2c"), 4, 1).verdict is Verdict.INCOMPATIBLE


@pytest.mark.criterion(5)
def test_bar_t4_classes():
    for x, y, same in _pairs(BAR_T4_CLASSES):
        want = Verdict.COMPATIBLE if same else Verdict.INCOMPATIBLE
        assert bar_t2k_obstruction(P(x), P(y), 2).verdict is want, (x, y)


@pytest.mark.criterion(5)
def test_t3_classes():
    for x, y, same in _pairs(tuple(T3_CLASSES.values())):
        want = Verdict.COMPATIBLE if same else Verdict.INCOMPATIBLE
        assert tk_obstruction(P(x), P(y), 3, 1).verdict is want, (x, y)


@pytest.mark.criterion(5)
@pytest.mark.parametrize("k,script", [(4, s) for s in T4_SCRIPTS] + [(3, s) for s in T3_SCRIPTS])
def test_scripted_levels(k, script):
    start, steps, level, target = script
    d1 = braid_closure(parse_braid(start))
    d2 = braid_closure(parse_braid(script_braid(start, steps)))
    assert homfly(d2) == P(target)
    rep = tk_obstruction(homfly(d1), homfly(d2), k, 1)
    assert rep.verdict is Verdict.COMPATIBLE and rep.n == level


@pytest.mark.criterion(5)
def test_jones_separations():
    V = lambda n: jones(named(n))
    assert jones_tk_factor(V("T1"), V("3_1"), 3, 1).verdict is Verdict.INCOMPATIBLE
    assert jones_tk_factor(V("T1"), V("T2"), 3, 1).verdict is Verdict.INCOMPATIBLE


@pytest.mark.criterion(5)
@pytest.mark.xfail(strict=True, reason="V(4_1) = -1 at the sixth root of unity, a power of the t3 unit")
def test_jones_unknot_figure_eight():
    V = lambda n: jones(named(n))
    assert jones_tk_factor(V("T1"), V("4_1"), 3, 1).verdict is Verdict.INCOMPATIBLE


def _at_z(p, z0, shift=0, scale=1):
    """Coefficients in a of p(a, z0) a^shift * scale, exactly."""
    out = {}
    for (ea, ez), c in p.terms.items():
        out[ea + shift] = out.get(ea + shift, 0) + scale * Fraction(c) * Fraction(z0) ** ez
    return out


def _odd_part(k):
    while k % 2 == 0:
        k //= 2
    return k


def _congruent(p2, p1, k, factor):
    """p2(a, 2e) = factor(e) a^-k p1(a, 2e) with coefficients in Z[1/2]/k, both signs e."""
    ko = _odd_part(k)
    for e in (1, -1):
        diff = _at_z(p2, 2 * e)
        for ea, c in _at_z(p1, 2 * e, -k, factor(e)).items():
            diff[ea] = diff.get(ea, 0) - c
        if any(c.numerator % ko for c in diff.values()):
            return False
    return True


MOVE_PAIRS = [(name, d, s) for name, d, s in TK_SITES]


@pytest.mark.criterion(5)
@pytest.mark.parametrize("k", range(2, 13))
def test_congruence_on_moves(k):
    for name, d, s in MOVE_PAIRS:
        if len(d.crossings) + k > 14:
            continue
        p1, p2 = homfly(d), homfly(apply_move(d, s, k))
        assert mod_k_congruence(p1, p2, k), name
        assert _congruent(p2, p1, k, lambda e: e ** k), name


@pytest.mark.criterion(5)
@pytest.mark.xfail(strict=True, reason="the sign factor is e^k, not e; visible once the odd part of k exceeds 1 at even k")
def test_congruence_printed_sign():
    for name, d, s in MOVE_PAIRS:
        p1, p2 = homfly(d), homfly(apply_move(d, s, 6))
        assert _congruent(p2, p1, 6, lambda e: e), name


def _twist_at_two(d, s, k, eps, c1, c0):
    """a^k P(t_k) - c1 k a P(t_1) + c0 (k-1) P(L) at z = 2 eps, sampled."""
    pk, p1, p0 = homfly(apply_move(d, s, k)), homfly(apply_move(d, s, 1)), homfly(d)
    for u in (0.11, 0.37, 0.74):
        a = cmath.exp(2j * math.pi * u)
        z = 2 * eps
        got = a ** k * pk(a=a, z=z) - c1 * k * a * p1(a=a, z=z) + c0 * (k - 1) * p0(a=a, z=z)
        if abs(got) > 1e-7:
            return False
    return True


@pytest.mark.criterion(5)
@pytest.mark.parametrize("k", KS)
def test_twist_at_plus_minus_two(k):
    for name, d, s in TK_SITES:
        for eps in (1, -1):
            assert _twist_at_two(d, s, k, eps, eps ** (k - 1), eps ** k), name


@pytest.mark.criterion(5)
@pytest.mark.xfail(strict=True, reason="printed signs e, e hold only for e = 1")
def test_twist_at_plus_minus_two_printed():
    for name, d, s in TK_SITES:
        for k in (2, 3):
            assert _twist_at_two(d, s, k, -1, -1, -1), name


# 6. special values

@pytest.mark.criterion(6)
def test_special_values_on_table():
    for name, d in table(12):
        p = homfly(d)
        arf = murakami_arf(d, p)
        val = p(a=1, z=math.sqrt(2))
        if arf is None:
            assert abs(val) < 1e-9, name
        else:
            assert close(val, math.sqrt(2) ** (d.components() - 1) * (-1) ** arf), name
        assert lickorish_millett_check(d, p).consistent, name
        assert lmm_check(d, p).consistent, name


@pytest.mark.criterion(6)
@pytest.mark.parametrize("n", range(1, 6))
def test_trivial_link_closed_forms(n):
    d = named(f"T{n}")
    lm = lickorish_millett_check(d)
    assert lm.dim == n - 1 and close(abs(lm.lhs), math.sqrt(3) ** (n - 1))
    lmm = lmm_check(d)
    assert lmm.dim == 2 * (n - 1) and lmm.lhs == 2 ** (n - 1)
    assert murakami_arf(d) == 0


@pytest.mark.criterion(6)
def test_trefoil_three_fold_value():
    c = lmm_check(named("3_1"))
    assert c.lhs == -2 and c.dim == 2


@pytest.mark.criterion(6)
@pytest.mark.xfail(strict=True, reason="P(3_1)(1, 1) is -2; only its magnitude is 2")
def test_trefoil_three_fold_value_as_stated():
    assert lmm_check(named("3_1")).lhs == 2


# 7. homology

@pytest.mark.criterion(7)
def test_double_cover_routes():
    for name, d in table():
        assert same_group(cover_homology_goeritz(d), cover_homology_seifert(d, 2)), name


@pytest.mark.criterion(7)
@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_goeritz_single_entry(k):
    count = 0
    for name, d, s in sites("TK", per=3):
        diff = goeritz_move_difference(d, s, k)
        if diff is None:
            continue
        nz = [(i, j, v) for i, row in enumerate(diff) for j, v in enumerate(row) if v]
        assert len(nz) == 1 and nz[0][0] == nz[0][1] and abs(nz[0][2]) == k, name
        count += 1
    assert count >= 10


@pytest.mark.criterion(7)
@pytest.mark.parametrize("s", [2, 3])
def test_full_twist_invariance(s):
    count = 0
    for name in ("3_1", "4_1", "2_1^2"):
        d = named(name)
        for m in (2, 3):
            for site in fulltwist_sites(d, m, 3):
                for n in (2, 3, 4):
                    d2 = apply_move(d, site, n)
                    if len(d2.crossings) > 16:
                        continue
                    q = algebraic_crossing(d, d2, m, n)
                    if q % s:
                        continue
                    h1, h2 = cover_homology_seifert(d, s), cover_homology_seifert(d2, s)
                    assert h1.reduce_mod(n) == h2.reduce_mod(n), (name, m, n)
                    count += 1
    assert count


@pytest.mark.criterion(7)
@pytest.mark.parametrize("s", [2, 3, 4])
def test_unlink_cover_generators(s):
    for n in range(1, 5):
        assert cover_homology_seifert(named(f"T{n}"), s).generators == (s - 1) * (n - 1)


@pytest.mark.criterion(7)
@pytest.mark.xfail(strict=True, reason="the s-fold cover of T_n has first Betti number (s-1)(n-1)")
def test_unlink_cover_generators_printed():
    for n in range(2, 5):
        assert cover_homology_seifert(named(f"T{n}"), 2).generators == 2 * (n - 1)


# 8. signatures

@pytest.mark.criterion(8)
def test_signature_routes():
    for name, d in table():
        assert signature_goeritz(d) == signature_seifert(d).signature, name


@pytest.mark.criterion(8)
def test_twist_signature_bounds():
    pairs = 0
    for name, d, s in sites("TK", names=SITE_NAMES + ("T2",), per=3):
        s0 = signature_seifert(d).signature
        p = homfly(d)
        for k in (2, 3, 4, 5):
            d2 = apply_move(d, s, k)
            assert k - 2 <= s0 - signature_seifert(d2).signature <= k, (name, k)
            pairs += 1
            if k == 4 and abs(p(a=1j, z=math.sqrt(2))) > 1e-9:
                diff = tristram_levine(d, XI0).signature - tristram_levine(d2, XI0).signature
                assert diff == 2, name
    assert pairs >= 20


@pytest.mark.criterion(8)
def test_bar_signature_bounds():
    rng = random.Random(11)
    pairs = 0
    for name, d, s in sites("TBARK", per=3):
        for k in (1, 2):
            d2 = apply_move(d, s, 2 * k)
            for _ in range(2):
                xi = 1 - rng.uniform(0.1, 2) * cmath.exp(1j * rng.uniform(-math.pi / 2, math.pi / 2))
                diff = tristram_levine(d2, xi).signature - tristram_levine(d, xi).signature
                assert 0 <= diff <= 2, (name, k)
                pairs += 1
    assert pairs >= 20


@pytest.mark.criterion(8)
@pytest.mark.parametrize("start,steps,level,target", T4_SCRIPTS)
def test_t4_level_from_signature(start, steps, level, target):
    d1 = braid_closure(parse_braid(start))
    d2 = braid_closure(parse_braid(script_braid(start, steps)))
    half = (tristram_levine(d1, XI0).signature - tristram_levine(d2, XI0).signature) / 2
    assert half == level


@pytest.mark.criterion(8)
def test_determinant_relation():
    rng = random.Random(5)
    names = ("3_1", "4_1", "5_2", "2_1^2", "K2c")
    for i in range(10):
        d = named(names[i % len(names)])
        v, p = seifert_matrix(d), homfly(d)
        xi = 1 - cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        lhs = np.linalg.det(1j * tl_matrix(v, xi))
        assert close(complex(lhs), p(a=1j, z=2 - xi - xi.conjugate()))


# 9. properties

@pytest.mark.criterion(9)
def test_skein_residuals_on_table():
    for name, d in table(12):
        assert all(r.is_zero() for r in skein_residuals(d)), name


@pytest.mark.criterion(9)
def test_reversal_factor():
    rng = random.Random(9)
    for name in ("2_1^2", "6_2^3", "K2c", "6_3^2"):
        d = named(name)
        v = jones(d)
        for i in range(d.components()):
            lam = sum(d.linking_number(i, j) for j in range(d.components()) if j != i)
            v2 = jones(d.reverse_component(i))
            for _ in range(20):
                t = cmath.exp(2j * math.pi * rng.random())
                s = cmath.sqrt(t)
                assert close(v2(s=s), t ** (-3 * lam) * v(s=s)), name


@pytest.mark.criterion(9)
def test_kauffman_to_jones():
    rng = random.Random(13)
    for name in ("3_1", "4_1", "2_1^2", "5_2", "6_2^3"):
        d = named(name)
        f, v = kauffman_f(d), jones(d)
        for _ in range(20):
            q = cmath.exp(0.5j * math.pi * rng.random())  # q = t^(1/4)
            assert close(f(a=q ** -3, x=-(q + 1 / q)), v(s=q * q)), name


@pytest.mark.criterion(9)
def test_coloring_invariance():
    rng = random.Random(17)
    names = ("3_1", "4_1", "5_2", "2_1^2", "6_2^3", "6_3")
    for _ in range(50):
        d = named(rng.choice(names))
        kind = rng.choice(("TK", "TBARK"))
        s = rng.choice(find_sites(d, kind))
        if kind == "TBARK":
            s = odd_site(s, rng.choice((1, 2)))
        d2 = apply_move(d, s, rng.choice((3, -3)))
        assert fox_colorings(d, 3) == fox_colorings(d2, 3)
