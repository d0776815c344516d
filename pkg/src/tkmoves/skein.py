"""HOMFLY, Kauffman, Jones and Alexander polynomials by skein resolution.

Both recursions walk the diagram from per-component basepoints, find the first
crossing met first as an under-crossing, and resolve it.  The switched diagram
keeps its labels, so the number of such crossings strictly drops and the
recursion ends at descending diagrams, whose values are known in closed form.
"""

from __future__ import annotations

import threading

from .diagram import Crossing, LinkDiagram, orient
from .laurent import AX, AZ, LaurentError, LaurentPoly, exact_divide

MAX_CROSSINGS_HOMFLY = 14
MAX_CROSSINGS_KAUFFMAN = 12


class SkeinBudgetError(RuntimeError):
    pass


class SkeinInternalError(RuntimeError):
    pass


def _pow_cached(cache, base, n):
    if n not in cache:
        cache[n] = base ** n
    return cache[n]


_A = LaurentPoly.gen("a", AZ)
_AI = LaurentPoly.gen("a", AZ, -1)
_Z = LaurentPoly.gen("z", AZ)
_DELTA_P = (_A + _AI) * LaurentPoly.gen("z", AZ, -1)

_KA = LaurentPoly.gen("a", AX)
_KX = LaurentPoly.gen("x", AX)
_DELTA_K = (_KA + LaurentPoly.gen("a", AX, -1)) * LaurentPoly.gen("x", AX, -1) - 1

_delta_p_pows: dict = {}
_delta_k_pows: dict = {}


# raw state: (tuple of (edges, sign), number of free loops)

def _raw(d: LinkDiagram):
    return tuple((c.edges, c.sign) for c in d.crossings), len(d.loops)


def _heads(cs):
    head = {}
    for i, (e, s) in enumerate(cs):
        head[e[0]] = (i, 0)
        oi = 3 if s > 0 else 1
        head[e[oi]] = (i, oi)
    return head


def _succ(cs, head):
    out = {}
    for lab, (i, q) in head.items():
        e, s = cs[i]
        out[lab] = e[2] if q == 0 else e[1 if s > 0 else 3]
    return out


def _merge(cs, loops, idx, joins):
    """Remove crossing idx and identify label pairs; returns new raw state."""
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for x, y in joins:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    out = []
    used = set()
    for i, (e, s) in enumerate(cs):
        if i == idx:
            continue
        ne = tuple(find(x) for x in e)
        used.update(ne)
        out.append((ne, s))
    roots = {find(x) for x in cs[idx][0]}
    loops += sum(1 for r in roots if r not in used)
    return tuple(out), loops


def _strip_kinks(cs, loops):
    """Remove Reidemeister I curls; returns (state, sum of removed signs)."""
    tw = 0
    changed = True
    while changed:
        changed = False
        for i, (e, s) in enumerate(cs):
            for p in range(4):
                if e[p] == e[(p + 1) % 4]:
                    x, y = e[(p + 2) % 4], e[(p + 3) % 4]
                    # the curl label is absorbed; if x == y the crossing was an isolated unknot
                    cs, loops = _merge(cs, loops, i, [(x, y), (e[p], x)])
                    tw += s
                    changed = True
                    break
            if changed:
                break
    return cs, loops, tw


def _scan(cs):
    """Traverse from basepoints; returns (#components, first bad crossing or None, traversal relabel)."""
    head = _heads(cs)
    succ = _succ(cs, head)
    seen_edge = set()
    first_under = {}
    order = []
    relabel = {}
    ncomp = 0
    comp_of = {}
    for start in sorted(succ):
        if start in seen_edge:
            continue
        e = start
        while e not in seen_edge:
            seen_edge.add(e)
            relabel[e] = len(relabel)
            comp_of[e] = ncomp
            i, q = head[e]
            if i not in first_under:
                first_under[i] = (q == 0)
                order.append(i)
            e = succ[e]
        ncomp += 1
    bad = next((i for i in order if first_under[i]), None)
    return ncomp, bad, relabel, comp_of


def _key(cs, loops, relabel):
    return (tuple(sorted((tuple(relabel[x] for x in e), s) for e, s in cs)), loops)


class _Memo:
    def __init__(self):
        self.data = {}
        self.lock = threading.Lock()

    def get(self, k):
        return self.data.get(k)

    def put(self, k, v):
        with self.lock:
            self.data.setdefault(k, v)


_homfly_memo = _Memo()
_kauffman_memo = _Memo()


def _homfly_raw(cs, loops):
    cs, loops, _ = _strip_kinks(cs, loops)
    if not cs:
        return _pow_cached(_delta_p_pows, _DELTA_P, loops - 1)
    ncomp, bad, relabel, _ = _scan(cs)
    key = _key(cs, loops, relabel)
    hit = _homfly_memo.get(key)
    if hit is not None:
        return hit
    if bad is None:
        res = _pow_cached(_delta_p_pows, _DELTA_P, ncomp + loops - 1)
    else:
        e, s = cs[bad]
        sw = list(cs)
        sw[bad] = _switch_raw(e, s)
        p_sw = _homfly_raw(tuple(sw), loops)
        joins = [(e[0], e[1]), (e[3], e[2])] if s > 0 else [(e[0], e[3]), (e[1], e[2])]
        p_sm = _homfly_raw(*_merge(cs, loops, bad, joins))
        # a P+ + a^-1 P- = z P0
        if s > 0:
            res = _AI * (_Z * p_sm - _AI * p_sw)
        else:
            res = _A * (_Z * p_sm - _A * p_sw)
    _homfly_memo.put(key, res)
    return res


def _switch_raw(e, s):
    c = Crossing(e, s)
    a, b, cc, d = c.edges
    if s > 0:
        return (d, a, b, cc), -1
    return (b, cc, d, a), 1


def homfly(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """P(a,z) with a P+ + a^-1 P- = z P0 and P(unknot) = 1."""
    cap = MAX_CROSSINGS_HOMFLY if max_crossings is None else max_crossings
    if len(d.crossings) > cap:
        raise SkeinBudgetError(f"{len(d.crossings)} crossings exceeds the HOMFLY budget {cap}")
    res = _homfly_raw(*_raw(d))
    lo, _ = res.degree_range("z")
    if lo < -(d.components() - 1):
        raise SkeinInternalError("z-denominator exceeds the component bound")
    return res


def _kauffman_raw(cs, loops):
    cs, loops, tw = _strip_kinks(cs, loops)
    factor = _KA ** tw if tw >= 0 else LaurentPoly.gen("a", AX, tw)
    if not cs:
        return factor * _pow_cached(_delta_k_pows, _DELTA_K, loops - 1)
    ncomp, bad, relabel, comp_of = _scan(cs)
    key = _key(cs, loops, relabel)
    hit = _kauffman_memo.get(key)
    if hit is not None:
        return factor * hit
    if bad is None:
        self_tw = sum(s for e, s in cs if comp_of[e[0]] == comp_of[e[1]])
        res = LaurentPoly.gen("a", AX, self_tw) * _pow_cached(_delta_k_pows, _DELTA_K, ncomp + loops - 1)
    else:
        e, s = cs[bad]
        sw = list(cs)
        sw[bad] = _switch_raw(e, s)
        l_sw = _kauffman_raw(tuple(sw), loops)
        j0 = [(e[0], e[1]), (e[3], e[2])] if s > 0 else [(e[0], e[3]), (e[1], e[2])]
        jinf = [(e[0], e[3]), (e[1], e[2])] if s > 0 else [(e[0], e[1]), (e[3], e[2])]
        l0 = _kauffman_raw(*_merge(cs, loops, bad, j0))
        l_inf = _kauffman_raw(*_reoriented(*_merge(cs, loops, bad, jinf)))
        res = _KX * (l0 + l_inf) - l_sw
    _kauffman_memo.put(key, res)
    return factor * res


def _reoriented(cs, loops):
    d = orient([e for e, _ in cs], [-(n + 1) for n in range(loops)])
    return tuple((c.edges, c.sign) for c in d.crossings), loops


def kauffman_lambda(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """Regular isotopy invariant Lambda(a,x)."""
    cap = MAX_CROSSINGS_KAUFFMAN if max_crossings is None else max_crossings
    if len(d.crossings) > cap:
        raise SkeinBudgetError(f"{len(d.crossings)} crossings exceeds the Kauffman budget {cap}")
    return _kauffman_raw(*_raw(d))


def kauffman_f(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """F = a^{-tw} Lambda."""
    return LaurentPoly.gen("a", AX, -d.writhe()) * kauffman_lambda(d, max_crossings)


# specialisations: i is carried as a formal variable and reduced with i^2 = -1

_SI = ("s", "i")


def _gauss_split(p: LaurentPoly):
    re, im = {}, {}
    for (es, ei), c in p.terms.items():
        r = ei % 4
        sgn = -1 if r >= 2 else 1
        tgt = re if r % 2 == 0 else im
        tgt[(es,)] = tgt.get((es,), 0) + sgn * c
    return LaurentPoly(("s",), re), LaurentPoly(("s",), im)


def _specialise(P: LaurentPoly, a_image: LaurentPoly, ncomp: int):
    lo, _ = P.degree_range("z")
    m = max(0, -lo)
    Q = P * LaurentPoly.gen("z", AZ, m)
    z_image = LaurentPoly(_SI, {(0, 1): 1}) * (LaurentPoly.gen("s", _SI) - LaurentPoly.gen("s", _SI, -1))
    step = Q.substitute("a", a_image.with_variables(("s", "i", "z")))
    R = step.substitute("z", z_image)
    re, im = _gauss_split(R)
    # divide by (i (s - s^-1))^m: first by i^m
    for _ in range(m % 4):
        re, im = im, -re
    den = (LaurentPoly.gen("s", ("s",)) - LaurentPoly.gen("s", ("s",), -1)) ** m
    try:
        re, im = exact_divide(re, den), exact_divide(im, den)
    except LaurentError as exc:
        raise SkeinInternalError(f"specialisation did not divide exactly: {exc}")
    return re, im


def jones(d: LinkDiagram, P: LaurentPoly | None = None) -> LaurentPoly:
    """V(t) as a Laurent polynomial in s = t^{1/2}, via a = i s^-2, z = i(s - s^-1)."""
    P = homfly(d) if P is None else P
    a_img = LaurentPoly(_SI, {(-2, 1): 1})
    re, im = _specialise(P, a_img, d.components())
    if not im.is_zero():
        raise SkeinInternalError("Jones specialisation has an imaginary part")
    return re


def alexander(d: LinkDiagram, P: LaurentPoly | None = None) -> LaurentPoly:
    """Conway-normalised Alexander polynomial in s = t^{1/2}, via a = i, z = i(s - s^-1)."""
    P = homfly(d) if P is None else P
    a_img = LaurentPoly(_SI, {(0, 1): 1})
    re, im = _specialise(P, a_img, d.components())
    if not im.is_zero():
        raise SkeinInternalError("Alexander specialisation has an imaginary part")
    return re


def clear_caches():
    _homfly_memo.data.clear()
    _kauffman_memo.data.clear()
