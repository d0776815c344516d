"""t_k-equivalence tests: root-of-unity evaluations, level distances, congruences,
special values and Fox colourings."""

from __future__ import annotations

import cmath
import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import LinkDiagram
from .laurent import LaurentPoly, close, eval_complex
from .matrices import branched_cover_homology
from .skein import homfly

DEFAULT_SEED = 20240917
SAMPLES = 24
TOL = 1e-9
NMAX = 64


class ObstructionError(RuntimeError):
    pass


class Verdict(enum.Enum):
    COMPATIBLE = "Compatible"
    INCOMPATIBLE = "Incompatible"
    INCONCLUSIVE = "Inconclusive"


class CongruenceMode(enum.Enum):
    T_K_AT_PM2 = "T_K_AT_PM2"
    BAR_T2K_AT_PM_I = "BAR_T2K_AT_PM_I"


@dataclass
class ObstructionReport:
    verdict: Verdict
    n: int | None = None
    witness: dict = field(default_factory=dict)
    method: str = ""

    def to_json(self) -> dict:
        w = {k: _cjson(v) for k, v in self.witness.items()}
        return {"verdict": self.verdict.value, "n": self.n, "witness": w, "method": self.method}


def _cjson(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def sample_points(n: int = SAMPLES, seed: int = DEFAULT_SEED) -> list:
    rng = random.Random(seed)
    return [cmath.exp(2j * math.pi * rng.random()) for _ in range(n)]


def _fit_power(f1, f2, factor, nmax, method, pts, periodic=None):
    """Find n with f2 = factor^n f1 at every sample point."""
    if all(abs(x) < TOL for x in f1) and all(abs(y) < TOL for y in f2):
        raise ObstructionError("both sides vanish at every sample")
    order = range(periodic) if periodic else sorted(range(-nmax, nmax + 1), key=lambda n: (abs(n), -n))
    for n in order:
        if all(close(y, factor(j) ** n * x, abs_=TOL) for j, (x, y) in enumerate(zip(f1, f2))):
            return ObstructionReport(Verdict.COMPATIBLE, n, {"point": pts[0], "lhs": f2[0], "rhs": f1[0]}, method)
    # factor has unit modulus, so a modulus mismatch refutes every n
    gaps = [abs(abs(y) - abs(x)) for x, y in zip(f1, f2)]
    j = max(range(len(gaps)), key=gaps.__getitem__)
    witness = {"point": pts[j], "lhs": f2[j], "rhs": f1[j]}
    if gaps[j] > TOL * max(1.0, abs(f1[j]), abs(f2[j])) or periodic:
        return ObstructionReport(Verdict.INCOMPATIBLE, None, witness, method)
    return ObstructionReport(Verdict.INCONCLUSIVE, None, witness, method)


def tk_obstruction(pL: LaurentPoly, pL2: LaurentPoly, k: int, m: int = 1, nmax: int = NMAX,
                   seed: int = DEFAULT_SEED) -> ObstructionReport:
    """Level-distance search: P_L'(a,z0) = ((-1)^m a^-k)^n P_L(a,z0), z0 = 2cos(pi m/k)."""
    if k < 3 or not 1 <= m < k:
        raise ValueError("need k >= 3 and 1 <= m < k")
    if 2 * m == k:
        raise ValueError("degenerate z0 = 0")
    z0 = 2 * math.cos(math.pi * m / k)
    pts = sample_points(seed=seed)
    f1 = [eval_complex(pL, {"a": a, "z": z0}) for a in pts]
    f2 = [eval_complex(pL2, {"a": a, "z": z0}) for a in pts]
    return _fit_power(f1, f2, lambda j: (-1) ** m * pts[j] ** (-k), nmax, f"t{k} at z0=2cos(pi*{m}/{k})", pts)


def bar_t2k_roots(k: int) -> list:
    """Admissible a0 with a0^(2k) = (-1)^k, a0 != +-i."""
    out = []
    for j in range(2 * k):
        if j % k == 0:
            continue
        out.append(1j * cmath.exp(1j * math.pi * j / k))
    return out


def bar_t2k_obstruction(pL: LaurentPoly, pL2: LaurentPoly, k: int,
                        seed: int = DEFAULT_SEED) -> ObstructionReport:
    """P(a0, z) must agree at every admissible root a0."""
    if k < 1:
        raise ValueError("need k >= 1")
    zs = [1.5 * z for z in sample_points(seed=seed)]
    roots = bar_t2k_roots(k)
    for a0 in roots:
        for z in zs:
            x = eval_complex(pL, {"a": a0, "z": z})
            y = eval_complex(pL2, {"a": a0, "z": z})
            if not close(x, y, abs_=TOL):
                return ObstructionReport(Verdict.INCOMPATIBLE, None, {"point": [a0, z], "lhs": y, "rhs": x},
                                         f"bar t{2 * k} at a0^{2 * k}=(-1)^{k}")
    w = {"point": [roots[0], zs[0]]} if roots else {}
    return ObstructionReport(Verdict.COMPATIBLE, None, w, f"bar t{2 * k} at a0^{2 * k}=(-1)^{k}")


def jones_tk_factor(vL: LaurentPoly, vL2: LaurentPoly, k: int, m: int = 1) -> ObstructionReport:
    """V_L'(t) = ((-1)^m i^k)^n V_L(t) at t^(1/2) = -i e^(i pi m/k); V in s = t^(1/2)."""
    s = -1j * cmath.exp(1j * math.pi * m / k)
    if close(s * s, -1):
        raise ValueError("t = -1 is excluded")
    x = eval_complex(vL, {"s": s})
    y = eval_complex(vL2, {"s": s})
    factor = (-1) ** m * 1j ** k
    rep = _fit_power([x], [y], lambda j: factor, 0, f"Jones t{k} at t^(1/2)=-i e^(i pi {m}/{k})", [s ** 2],
                     periodic=4)
    return rep


# congruences

def _odd_part(k: int) -> int:
    while k % 2 == 0:
        k //= 2
    return k


def _eval_z(p: LaurentPoly, z0: int) -> dict:
    """Exact P(a, z0) as {a-exponent: Fraction}."""
    ia, iz = p.variables.index("a"), p.variables.index("z")
    out: dict = {}
    for e, c in p.terms.items():
        out[e[ia]] = out.get(e[ia], 0) + c * Fraction(z0) ** e[iz]
    return {k: v for k, v in out.items() if v}


def _eval_a_gauss(p: LaurentPoly, eps: int) -> dict:
    """Exact P(eps*i, z) as {z-exponent: (re, im)}."""
    ia, iz = p.variables.index("a"), p.variables.index("z")
    out: dict = {}
    for e, c in p.terms.items():
        r = (e[ia] * (1 if eps > 0 else 3)) % 4
        unit = [(1, 0), (0, 1), (-1, 0), (0, -1)][r]
        re, im = out.get(e[iz], (0, 0))
        out[e[iz]] = (re + c * unit[0], im + c * unit[1])
    return out


def _reduce_half(q: Fraction, k: int) -> int:
    """Image of q in Z[1/2]/kZ[1/2] = Z/(odd part of k)."""
    ko = _odd_part(k)
    if ko == 1:
        return 0
    return q.numerator * pow(q.denominator, -1, ko) % ko


def mod_k_congruence(pL: LaurentPoly, pL2: LaurentPoly, k: int,
                     mode: CongruenceMode | str = CongruenceMode.T_K_AT_PM2, n: int = 1) -> bool:
    """T_K_AT_PM2: P_L'(a,2e) = (e^k a^-k)^n P_L(a,2e) over Z[1/2]/k for e = +-1.
    BAR_T2K_AT_PM_I: P_L'(+-i, z) = P_L(+-i, z) over Z[i]/k."""
    mode = CongruenceMode(mode) if isinstance(mode, str) else mode
    if k < 2:
        raise ValueError("need k >= 2")
    if mode is CongruenceMode.T_K_AT_PM2:
        for eps in (1, -1):
            left = _eval_z(pL2, 2 * eps)
            right = {e - k * n: c * eps ** (k * n) for e, c in _eval_z(pL, 2 * eps).items()}
            for e in set(left) | set(right):
                if _reduce_half(left.get(e, Fraction(0)) - right.get(e, Fraction(0)), k):
                    return False
        return True
    for eps in (1, -1):
        left, right = _eval_a_gauss(pL2, eps), _eval_a_gauss(pL, eps)
        for e in set(left) | set(right):
            a, b = left.get(e, (0, 0)), right.get(e, (0, 0))
            if (a[0] - b[0]) % k or (a[1] - b[1]) % k:
                return False
    return True


# special values

def _components(d: LinkDiagram) -> int:
    return d.components()


def murakami_arf(d: LinkDiagram, P: LaurentPoly | None = None) -> int | None:
    """Arf invariant from P(1, sqrt 2) = (sqrt 2)^(c-1) (-1)^Arf, None when it vanishes."""
    P = homfly(d) if P is None else P
    v = eval_complex(P, {"a": 1, "z": math.sqrt(2)}).real
    if abs(v) < TOL:
        return None
    mag = math.sqrt(2) ** (_components(d) - 1)
    if not close(abs(v), mag):
        raise ObstructionError(f"P(1, sqrt 2) = {v} is neither 0 nor +-{mag}")
    return 0 if v > 0 else 1


@dataclass
class SpecialValueCheck:
    lhs: complex
    dim: int
    consistent: bool

    def to_json(self) -> dict:
        return {"lhs": _cjson(complex(self.lhs)), "dim": self.dim, "consistent": self.consistent}


def lickorish_millett_check(d: LinkDiagram, P: LaurentPoly | None = None) -> SpecialValueCheck:
    """|P(e^(i pi/6), 1)| = (sqrt 3)^dim H_1(M^(2), Z_3)."""
    P = homfly(d) if P is None else P
    lhs = eval_complex(P, {"a": cmath.exp(1j * math.pi / 6), "z": 1})
    dim = branched_cover_homology(d, 2).dim_mod(3)
    return SpecialValueCheck(lhs, dim, close(abs(lhs), math.sqrt(3) ** dim))


def lmm_check(d: LinkDiagram, P: LaurentPoly | None = None) -> SpecialValueCheck:
    """|P(1, 1)| = 2^(dim H_1(M^(3), Z_2) / 2)."""
    P = homfly(d) if P is None else P
    lhs = eval_complex(P, {"a": 1, "z": 1}).real
    dim = branched_cover_homology(d, 3).dim_mod(2)
    return SpecialValueCheck(lhs, dim, close(abs(lhs), 2 ** (dim / 2)))


# colourings

def _rank_mod_p(rows: list, ncols: int, p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def coloring_arcs(d: LinkDiagram) -> dict:
    """Edge label -> arc index (over-passes join edges, under-passes cut them)."""
    parent = {e: e for e in d.endpoints}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        a, b = find(c.edges[1]), find(c.edges[3])
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(e) for e in d.endpoints})
    idx = {r: n for n, r in enumerate(roots)}
    return {e: idx[find(e)] for e in d.endpoints}


def fox_colorings(d: LinkDiagram, p: int) -> int:
    """Number of Fox p-colourings, constant ones included."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    arcs = coloring_arcs(d)
    n = len(set(arcs.values()))
    rows = []
    for c in d.crossings:
        r = [0] * n
        r[arcs[c.edges[1]]] += 2
        r[arcs[c.edges[0]]] -= 1
        r[arcs[c.edges[2]]] -= 1
        rows.append(r)
    free = n - _rank_mod_p(rows, n, p)
    return p ** (free + len(d.loops))
