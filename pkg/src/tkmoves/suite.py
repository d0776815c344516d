"""Replayable checks of the twist identities, worked examples and invariant relations.

The checkers here are shared by `tkmoves verify` and the test suite.  Each suite item
returns an ItemResult with a count of checks, the failures, and values worth plotting.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field

from .chebyshev import twist_seq
from .diagram import DiagramError, LinkDiagram, MoveKind, MoveSite, apply_move, find_sites, link_table, named, slot_tangle
from .laurent import AX, AZ, LaurentPoly, close, exact_divide
from .matrices import (cover_homology_goeritz, cover_homology_seifert, goeritz_faces, same_group,
                       seifert_matrix, signature_goeritz, signature_seifert, tl_matrix, tristram_levine)
from .obstruction import (DEFAULT_SEED, Verdict, bar_t2k_obstruction, fox_colorings,
                          jones_tk_factor, lickorish_millett_check, lmm_check,
                          murakami_arf, tk_obstruction)
from .skein import homfly, jones, kauffman_f, kauffman_lambda

import numpy as np

SITE_NAMES = ("3_1", "4_1", "2_1^2", "5_2", "6_3", "K2c")
KS = range(2, 7)

_A = LaurentPoly.gen("a", AZ)
_Z = LaurentPoly.gen("z", AZ)
_X = LaurentPoly.gen("x", AX)


def apow(n: int, variables=AZ) -> LaurentPoly:
    return LaurentPoly.gen("a", variables, n)


def in_az(p: LaurentPoly) -> LaurentPoly:
    return p.with_variables(AZ)


def z_to_x(p: LaurentPoly) -> LaurentPoly:
    return in_az(p).substitute("z", _X)


def a_inverse(p: LaurentPoly) -> LaurentPoly:
    return p.substitute("a", LaurentPoly.gen("a", p.variables, -1))


def divide_by_a_plus_inverse(p: LaurentPoly) -> LaurentPoly:
    """Exact quotient of a polynomial in a alone by a + 1/a."""
    q = LaurentPoly(("a",), {(e[p.variables.index("a")],): c for e, c in p.terms.items()})
    return in_az(exact_divide(q, LaurentPoly(("a",), {(1,): 1, (-1,): 1})))


def odd_site(site: MoveSite, keep: int) -> MoveSite:
    return MoveSite(site.kind, site.anchors, site.twists, site.face_side, keep)


def sites(kind: str, names=SITE_NAMES, per: int = 2):
    """(name, diagram, site) triples, a few sites per diagram."""
    for name in names:
        d = named(name)
        for s in find_sites(d, kind)[:per]:
            yield name, d, s


# twisting identities, all exact

def twist_identity(d, site, k) -> bool:
    lhs = apow(k) * homfly(apply_move(d, site, k))
    rhs = (_A * in_az(twist_seq("V1", k)) * homfly(apply_move(d, site, 1))
           - in_az(twist_seq("V1", k - 1)) * homfly(d))
    return lhs == rhs


def conway_identity(d, site, k) -> bool:
    lhs = apow(k) * homfly(apply_move(d, site, k)) + apow(-k) * homfly(apply_move(d, site, -k))
    return lhs == in_az(twist_seq("W1", k)) * homfly(d)


def bar_twist_identity(d, site, k) -> bool:
    rhs = (-1) ** k * apow(2 * k) * homfly(d) + _Z * in_az(twist_seq("U1", 2 * k)) * homfly(slot_tangle(d, site, "inf"))
    return homfly(apply_move(d, site, 2 * k)) == rhs


def bar_sum_coefficient(k) -> LaurentPoly:
    """(a^k + (-1)^(k+1) a^-k)^2 / (a + 1/a)."""
    num = apow(k) + (-1) ** (k + 1) * apow(-k)
    return divide_by_a_plus_inverse(num * num)


def bar_sum_identity(d, site, k, coeff: LaurentPoly | None = None) -> bool:
    coeff = bar_sum_coefficient(k) if coeff is None else coeff
    lhs = apow(-2 * k) * homfly(apply_move(d, site, 2 * k)) + apow(2 * k) * homfly(apply_move(d, site, -2 * k))
    return lhs == (-1) ** k * 2 * homfly(d) + _Z * coeff * homfly(slot_tangle(d, site, "inf"))


def bar_alternating_identity(d, site, k) -> bool:
    lhs = apow(-k) * homfly(apply_move(d, site, 2 * k)) + (-1) ** k * apow(k) * homfly(apply_move(d, site, -2 * k))
    return lhs == ((-1) ** k * apow(k) + apow(-k)) * homfly(d)


def half_bar_sign(k: int) -> int:
    return -1 if k % 2 == 0 else 1


def half_bar_identity(d, site, k, eps: int | None = None) -> bool:
    """Sum over +-k half twists on antiparallel strands; odd k needs odd_keep on the site."""
    eps = half_bar_sign(k) if eps is None else eps
    lhs = apow(-k) * homfly(apply_move(d, site, k)) + (-1) ** (k + 1) * apow(k) * homfly(apply_move(d, site, -k))
    coeff = divide_by_a_plus_inverse(apow(-k) + eps * apow(k))
    return lhs == _Z * coeff * homfly(slot_tangle(d, site, "inf"))


def kauffman_twist_identity(d, site, k, mirror: bool = False) -> bool:
    L = kauffman_lambda
    sgn = -1 if mirror else 1
    v2 = twist_seq("V2", k)
    v2 = a_inverse(v2) if mirror else v2
    rhs = (z_to_x(twist_seq("V1", k)) * L(slot_tangle(d, site, "-" if mirror else "+"))
           - z_to_x(twist_seq("V1", k - 1)) * L(d) + _X * v2 * L(slot_tangle(d, site, "inf")))
    return L(apply_move(d, site, sgn * k)) == rhs


def kauffman_conway_identity(d, site, k) -> bool:
    L = kauffman_lambda
    lhs = L(apply_move(d, site, k)) + L(apply_move(d, site, -k))
    return lhs == z_to_x(twist_seq("W1", k)) * L(d) + _X * twist_seq("W2", k) * L(slot_tangle(d, site, "inf"))


def unit_specialisation(p: LaurentPoly) -> bool:
    """P(a, a + 1/a) == 1; the z-denominator is cleared first."""
    m = max(0, -p.degree_range("z")[0])
    w = apow(1) + apow(-1)
    return (p * LaurentPoly.gen("z", AZ, m)).substitute("z", w) == w ** m


def skein_residuals(d: LinkDiagram) -> list:
    """a P(L+) + 1/a P(L-) - z P(L0) at every crossing, as polynomials."""
    out = []
    p = homfly(d)
    for i, c in enumerate(d.crossings):
        q = homfly(d.switch(i))
        p0 = homfly(d.smooth(i, "oriented"))
        pp, pm = (p, q) if c.sign > 0 else (q, p)
        out.append(_A * pp + apow(-1) * pm - _Z * p0)
    return out


# worked examples

EXAMPLE_POLYS = {
    "T1": "1",
    "3_1": "-a^-4 - 2a^-2 + a^-2 z^2",
    "4_1": "-a^-2 - 1 - a^2 + z^2",
    "5_2": "-a^2 + a^4 + a^6 + a^2 z^2 - a^4 z^2",
}

# polynomials in a at z = 1
Z1_VALUES = {
    "T1": "1",
    "T2": "a^-1 + a",
    "T3": "a^-2 + 2 + a^2",
    "4_1": "-a^-2 - a^2",
}

PHI = (1 + math.sqrt(5)) / 2
GOLDEN_VALUES = {
    "T1": 1.0,
    "T2": math.sqrt(5) - 1,
    "T3": (math.sqrt(5) - 1) ** 2,
    "T4": (math.sqrt(5) - 1) ** 3,
    "3_1": (-3 + math.sqrt(5)) / 2,
    "8_5": -4 + math.sqrt(5),
    "8_18": 1 - 2 * math.sqrt(5),
}

# classes modulo t3 moves; links in different classes are separated
T3_CLASSES = {
    "a": ("granny", "square", "T3"),
    "b": ("3_1", "T2"),
    "c": ("5_2", "6_3", "2_1^2", "6_2^3", "T1"),
    "d": ("4_1", "9_42"),
}
T4_CLASSES = (("T1", "3_1"), ("4_1", "5_2"))
BAR_T4_CLASSES = (("T1", "5_2"), ("3_1", "4_1"))

# scripted braid words: (start, [(position, letter, count)], expected level distance)
# inserting letter^count at position; count = +-k is one t_k move up or down
T4_SCRIPTS = [
    ("n=2:-1", [(1, 1, 4)], 1, "3_1"),
    ("n=3:1 -2 1 -2", [(0, -1, 4)], -1, "5_2"),
]
T3_SCRIPTS = [
    ("n=2:1 1 1", [(0, -1, 3)], -1, "T2"),
    ("n=2:-1", [(1, 1, 3)], 1, "2_1^2"),
    ("n=3:1 1 1 2 2 2", [(0, -1, 3), (0, -2, 3)], -2, "T3"),
    ("n=3:1 1 1 -2 -2 -2", [(0, -1, 3), (0, 2, 3)], 0, "T3"),
]


def script_braid(start: str, steps) -> str:
    head, body = start.split(":")
    letters = [int(x) for x in body.split()]
    for pos, letter, count in steps:
        letters[pos:pos] = [letter] * count
    return f"{head}:{' '.join(str(x) for x in letters)}"


def random_script(rng: random.Random, k: int, start: str, moves: int):
    """Random insertions of sigma^(+-k); returns (braid text, level distance)."""
    head, body = start.split(":")
    n = int(head.split("=")[1])
    letters = [int(x) for x in body.split()]
    level = 0
    for _ in range(moves):
        pos = rng.randrange(len(letters) + 1)
        g = rng.randrange(1, n)
        sgn = rng.choice((1, -1))
        letters[pos:pos] = [g * sgn] * k
        level += sgn
    return f"n={n}:{' '.join(str(x) for x in letters)}", level


# item runner

@dataclass
class ItemResult:
    id: str
    title: str
    checks: int = 0
    failures: list = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.checks > 0 and not self.failures

    def check(self, cond: bool, what: str):
        self.checks += 1
        if not cond:
            self.failures.append(what)

    def to_json(self) -> dict:
        return {"id": self.id, "title": self.title, "ok": self.ok, "checks": self.checks,
                "failures": self.failures}


def _table(max_crossings: int = 14):
    for name, entry in link_table().items():
        d = entry.diagram()
        if len(d.crossings) <= max_crossings:
            yield name, d


def item_polynomials(rng) -> ItemResult:
    from .laurent import az, parse
    r = ItemResult("table-polynomials", "HOMFLY polynomials and their specialisations")
    for name, text in EXAMPLE_POLYS.items():
        r.check(homfly(named(name)) == az(text), f"P({name})")
    r.check(homfly(named("3_1")).substitute("a", LaurentPoly.const(1, ("z",))) == parse("z^2 - 3", ("z",)),
            "P(3_1)(1,z)")
    r.check(homfly(named("5_2")).substitute("a", LaurentPoly.const(1, ("z",))) == 1, "P(5_2)(1,z)")
    p = homfly(named("4_1"))
    for _ in range(24):
        a = cmath.exp(2j * math.pi * rng.random())
        r.check(close(p(a=a, z=math.sqrt(2)), -a ** -2 + 1 - a ** 2), "P(4_1)(a,sqrt2)")
    for name, text in Z1_VALUES.items():
        got = homfly(named(name)).substitute("z", LaurentPoly.const(1, ("a",)))
        r.check(got == parse(text, ("a",)), f"P({name})(a,1)")
    for name, want in GOLDEN_VALUES.items():
        got = homfly(named(name))(a=1, z=PHI)
        r.values[name] = (abs(got), abs(want))
        r.check(close(abs(got), abs(want)), f"|P({name})(1,phi)|")
    return r


def item_identities(rng) -> ItemResult:
    r = ItemResult("twist-identities", "exact twisting identities for HOMFLY and Kauffman")
    for name, d, s in sites("TK"):
        for k in KS:
            r.check(twist_identity(d, s, k), f"twist {name} k={k}")
            r.check(conway_identity(d, s, k), f"conway {name} k={k}")
            if k <= 4:
                r.check(kauffman_twist_identity(d, s, k), f"kauffman twist {name} k={k}")
                r.check(kauffman_twist_identity(d, s, k, mirror=True), f"kauffman twist- {name} k={k}")
                r.check(kauffman_conway_identity(d, s, k), f"kauffman sum {name} k={k}")
    for name, d, s in sites("TBARK"):
        for k in KS:
            if len(d.crossings) + 2 * k <= 14:
                r.check(bar_twist_identity(d, s, k), f"bar twist {name} k={k}")
                r.check(bar_sum_identity(d, s, k), f"bar sum {name} k={k}")
                r.check(bar_alternating_identity(d, s, k), f"bar alternating {name} k={k}")
            if k % 2 == 0:
                r.check(half_bar_identity(d, s, k), f"half bar {name} k={k}")
            elif d.components() == 1:
                for keep in (1, 2):
                    r.check(half_bar_identity(d, odd_site(s, keep), k), f"half bar {name} k={k}")
    for name, d in _table():
        r.check(unit_specialisation(homfly(d)), f"P({name})(a,a+1/a)")
    return r


def t3_matrix():
    """t3 verdicts between all class members: {(x, y): verdict}."""
    names = [n for c in T3_CLASSES.values() for n in c]
    P = {n: homfly(named(n)) for n in names}
    return names, {(x, y): tk_obstruction(P[x], P[y], 3, 1) for x in names for y in names}


def item_obstructions(rng) -> ItemResult:
    r = ItemResult("obstructions", "equivalence-class separations and scripted level distances")
    P = lambda n: homfly(named(n))
    for c1 in T4_CLASSES:
        for c2 in T4_CLASSES:
            for x in c1:
                for y in c2:
                    v = tk_obstruction(P(x), P(y), 4, 1).verdict
                    want = Verdict.COMPATIBLE if c1 == c2 else Verdict.INCOMPATIBLE
                    r.check(v is want, f"t4 {x} {y}")
    for c1 in BAR_T4_CLASSES:
        for c2 in BAR_T4_CLASSES:
            for x in c1:
                for y in c2:
                    v = bar_t2k_obstruction(P(x), P(y), 2).verdict
                    want = Verdict.COMPATIBLE if c1 == c2 else Verdict.INCOMPATIBLE
                    r.check(v is want, f"bar t4 {x} {y}")
    r.check(tk_obstruction(P("T2"), P("K2c"), 4, 1).verdict is Verdict.INCOMPATIBLE, "t4 T2 K")
    names, mat = t3_matrix()
    cls = {n: c for c, ms in T3_CLASSES.items() for n in ms}
    for (x, y), rep in mat.items():
        want = Verdict.COMPATIBLE if cls[x] == cls[y] else Verdict.INCOMPATIBLE
        r.check(rep.verdict is want, f"t3 {x} {y}")
    r.values["t3"] = (names, {k: (v.verdict.value, v.n) for k, v in mat.items()})
    V = lambda n: jones(named(n))
    r.check(jones_tk_factor(V("T1"), V("3_1"), 3, 1).verdict is Verdict.INCOMPATIBLE, "jones T1 3_1")
    r.check(jones_tk_factor(V("T1"), V("T2"), 3, 1).verdict is Verdict.INCOMPATIBLE, "jones T1 T2")
    # V(4_1) = -1 = i^2 at this root, so the Jones value alone cannot separate it from T1
    rep = jones_tk_factor(V("T1"), V("4_1"), 3, 1)
    r.check(rep.verdict is Verdict.COMPATIBLE and rep.n == 2, "jones T1 4_1")
    from .diagram import braid_closure, parse_braid
    for k, scripts in ((4, T4_SCRIPTS), (3, T3_SCRIPTS)):
        for start, steps, level, target in scripts:
            d1 = braid_closure(parse_braid(start))
            d2 = braid_closure(parse_braid(script_braid(start, steps)))
            rep = tk_obstruction(homfly(d1), homfly(d2), k, 1)
            r.check(rep.verdict is Verdict.COMPATIBLE and rep.n == level, f"script t{k} {start}")
            r.check(homfly(d2) == P(target), f"script target {target}")
    starts = ["n=2:1 1 1", "n=3:1 -2 1 -2", "n=3:1 1 -2"]
    for k in (3, 4, 5):
        for _ in range(4):
            start = rng.choice(starts)
            text, level = random_script(rng, k, start, rng.randrange(1, 3))
            d1, d2 = braid_closure(parse_braid(start)), braid_closure(parse_braid(text))
            if len(d2.crossings) > 14:
                continue
            rep = tk_obstruction(homfly(d1), homfly(d2), k, 1)
            r.check(rep.verdict is Verdict.COMPATIBLE and rep.n == level, f"random t{k} {text}")
    return r


def item_special_values(rng) -> ItemResult:
    r = ItemResult("special-values", "Arf, Lickorish-Millett and three-fold cover relations")
    for name, d in _table(12):
        p = homfly(d)
        arf = murakami_arf(d, p)
        val = p(a=1, z=math.sqrt(2))
        c = d.components()
        if arf is None:
            r.check(abs(val) < 1e-9, f"arf {name}")
        else:
            r.check(close(val, math.sqrt(2) ** (c - 1) * (-1) ** arf), f"arf {name}")
        r.check(lickorish_millett_check(d, p).consistent, f"lm {name}")
        r.check(lmm_check(d, p).consistent, f"lmm {name}")
    for n in range(1, 6):
        d = named(f"T{n}")
        lm = lickorish_millett_check(d)
        r.check(lm.dim == n - 1 and close(abs(lm.lhs), math.sqrt(3) ** (n - 1)), f"lm T{n}")
        lmm = lmm_check(d)
        r.check(lmm.dim == 2 * (n - 1) and close(lmm.lhs, 2 ** (n - 1)), f"lmm T{n}")
    return r


def fulltwist_sites(d: LinkDiagram, m: int, limit: int):
    import itertools
    out = []
    for walk in d.faces():
        for combo in itertools.combinations(walk, m):
            labs = [e for e, _ in combo]
            if len(set(labs)) < m:
                continue
            site = MoveSite(MoveKind.FULLTWIST, labs)
            try:
                apply_move(d, site, 1)
            except DiagramError:
                continue
            out.append(site)
    return out[:limit]


def algebraic_crossing(d1: LinkDiagram, d2: LinkDiagram, m: int, n: int) -> int:
    """q for n full twists on m strands, from the writhe change n (q^2 - m)."""
    q2 = m + (d2.writhe() - d1.writhe()) // n
    return int(round(math.sqrt(q2)))


def goeritz_move_difference(d: LinkDiagram, site: MoveSite, k: int):
    """Entrywise difference of Goeritz matrices across a twist, with matched regions.

    The regions beside the first anchor are coloured white and the one away from the
    slot is deleted, so the slot itself is black.
    """
    other = {"left": "right", "right": "left"}
    e = site.anchors[0]
    side = other[site.face_side]
    d2 = apply_move(d, site, k)
    w1, g1 = goeritz_faces(d, d.face_side(e, side), d.face_side(e, side))
    w2, g2 = goeritz_faces(d2, d2.face_side(e, side), d2.face_side(e, side))
    rep = {}
    for lab in sorted(d.endpoints):
        if lab in site.anchors:
            continue
        for sd in ("left", "right"):
            rep.setdefault(d.face_side(lab, sd), (lab, sd))
    perm = [w2.index(d2.face_side(*rep[f])) for f in w1]
    if len(w2) != len(w1):
        return None
    n = len(w1)
    return [[g2[perm[a], perm[b]] - g1[a, b] for b in range(n)] for a in range(n)]


def item_homology(rng) -> ItemResult:
    r = ItemResult("homology", "double cover routes, Goeritz twist entries, full-twist invariance")
    for name, d in _table():
        r.check(same_group(cover_homology_goeritz(d), cover_homology_seifert(d, 2)), f"routes {name}")
    for name, d, s in sites("TK", per=3):
        for k in (2, 3, 4):
            diff = goeritz_move_difference(d, s, k)
            if diff is None:
                continue
            nz = [(a, b, v) for a, row in enumerate(diff) for b, v in enumerate(row) if v]
            r.check(len(nz) == 1 and nz[0][0] == nz[0][1] and abs(nz[0][2]) == k, f"goeritz {name} k={k}")
    for name in ("3_1", "4_1", "2_1^2"):
        d = named(name)
        for m in (2, 3):
            for site in fulltwist_sites(d, m, 3):
                for n in (1, 2, 3):
                    d2 = apply_move(d, site, n)
                    if len(d2.crossings) > 16:
                        continue
                    q = algebraic_crossing(d, d2, m, n)
                    for s in (2, 3):
                        if q % s:
                            continue
                        h1, h2 = cover_homology_seifert(d, s), cover_homology_seifert(d2, s)
                        r.check(h1.reduce_mod(n) == h2.reduce_mod(n), f"full twist {name} m={m} n={n} s={s}")
    for n in range(1, 5):
        for s in (2, 3):
            r.check(cover_homology_seifert(named(f"T{n}"), s).generators == (s - 1) * (n - 1), f"e_{s}(T{n})")
    return r


XI0 = 1 - cmath.exp(1j * math.pi / 4)


def item_signatures(rng) -> ItemResult:
    r = ItemResult("signatures", "signature routes, twist inequalities, determinant relation")
    for name, d in _table():
        r.check(signature_goeritz(d) == signature_seifert(d).signature, f"sigma {name}")
    pairs = 0
    for name, d, s in sites("TK", names=SITE_NAMES + ("T2",), per=3):
        s0 = signature_seifert(d).signature
        p = homfly(d)
        for k in (2, 3, 4):
            d2 = apply_move(d, s, k)
            diff = s0 - signature_seifert(d2).signature
            r.check(k - 2 <= diff <= k, f"tk signature {name} k={k}")
            pairs += 1
            if k == 4 and abs(p(a=1j, z=math.sqrt(2))) > 1e-9:
                t1 = tristram_levine(d, XI0).signature
                t2 = tristram_levine(d2, XI0).signature
                r.check(t1 - t2 == 2, f"t4 xi0 {name}")
    for name, d, s in sites("TBARK", per=3):
        for k in (1, 2):
            d2 = apply_move(d, s, 2 * k)
            for _ in range(2):
                xi = 1 - rng.uniform(0.1, 2) * cmath.exp(1j * rng.uniform(-math.pi / 2, math.pi / 2))
                t1 = tristram_levine(d, xi).signature
                t2 = tristram_levine(d2, xi).signature
                r.check(0 <= t2 - t1 <= 2, f"bar signature {name} k={k}")
    r.values["pairs"] = pairs
    for name in ("3_1", "4_1", "5_2", "2_1^2", "K2c"):
        d = named(name)
        v, p = seifert_matrix(d), homfly(d)
        for _ in range(2):
            xi = 1 - cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            a = tl_matrix(v, xi)
            lhs = np.linalg.det(1j * a) if a.size else 1.0
            r.check(close(complex(lhs), p(a=1j, z=2 - xi - xi.conjugate())), f"det {name}")
    return r


def item_properties(rng) -> ItemResult:
    r = ItemResult("properties", "skein residuals, reversal, Kauffman-Jones, coloring invariance")
    for name, d in _table(12):
        r.check(all(x.is_zero() for x in skein_residuals(d)), f"skein {name}")
    for name in ("2_1^2", "6_2^3", "K2c", "6_3^2"):
        d = named(name)
        v = jones(d)
        for i in range(d.components()):
            lam = sum(d.linking_number(i, j) for j in range(d.components()) if j != i)
            v2 = jones(d.reverse_component(i))
            for _ in range(5):
                s = cmath.exp(1j * math.pi * rng.random())
                r.check(close(v2(s=s), s ** (-6 * lam) * v(s=s)), f"reverse {name}")
    for name in ("3_1", "4_1", "2_1^2", "5_2"):
        d = named(name)
        f, v = kauffman_f(d), jones(d)
        for _ in range(5):
            q = cmath.exp(0.5j * math.pi * rng.random())
            r.check(close(f(a=q ** -3, x=-(q + 1 / q)), v(s=q * q)), f"kauffman-jones {name}")
    names = ("3_1", "4_1", "5_2", "2_1^2", "6_2^3")
    for _ in range(12):
        d = named(rng.choice(names))
        kind = rng.choice(("TK", "TBARK"))
        ss = find_sites(d, kind)
        s = rng.choice(ss)
        if kind == "TBARK":
            s = odd_site(s, rng.choice((1, 2)))
        d2 = apply_move(d, s, rng.choice((3, -3)))
        r.check(fox_colorings(d, 3) == fox_colorings(d2, 3), "colorings")
    return r


ITEMS = (item_polynomials, item_identities, item_obstructions, item_special_values,
         item_homology, item_signatures, item_properties)


def run_suite(seed: int = DEFAULT_SEED) -> list:
    rng = random.Random(seed)
    return [item(rng) for item in ITEMS]
