"""Sparse exact Laurent polynomials over the integers."""

from __future__ import annotations

import cmath
from typing import Iterable, Mapping

REL_TOL = 1e-9
ABS_TOL = 1e-12


class LaurentError(ValueError):
    pass


def close(x: complex, y: complex, rel: float = REL_TOL, abs_: float = ABS_TOL) -> bool:
    return abs(x - y) <= max(abs_, rel * max(abs(x), abs(y)))


class LaurentPoly:
    """Immutable Laurent polynomial: variable names plus {exponent tuple: int}."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, int] | None = None):
        variables = tuple(variables)
        if not 1 <= len(variables) <= 4 or len(set(variables)) != len(variables):
            raise LaurentError(f"bad variable list {variables}")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(v) for v in e)
            if len(e) != len(variables):
                raise LaurentError(f"exponent {e} does not match variables {variables}")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # constructors
    @classmethod
    def const(cls, c: int, variables) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gen(cls, name: str, variables, power: int = 1) -> "LaurentPoly":
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): 1})

    @classmethod
    def monomial(cls, variables, exps, coeff: int = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exps): coeff})

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.variables, frozenset(self.terms.items()))))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.const(other, self.variables)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.variables != self.variables:
            raise LaurentError(f"variable mismatch {self.variables} vs {other.variables}")
        return other

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self.terms.values()))) != 1:
                raise LaurentError("non-invertible image")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(-x * -n for x in e): c ** (-n)})
        result = LaurentPoly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exps) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        return LaurentPoly(self.variables, {tuple(x + y for x, y in zip(e, exps)): c
                                            for e, c in self.terms.items()})

    def coeff(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def degree_range(self, var: str) -> tuple[int, int]:
        i = self.variables.index(var)
        vals = [e[i] for e in self.terms]
        if not vals:
            return (0, 0)
        return (min(vals), max(vals))

    def with_variables(self, variables) -> "LaurentPoly":
        """Re-embed into a (super)set of variables; dropped variables must be absent."""
        variables = tuple(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for v, x in zip(self.variables, e):
                if v in variables:
                    ne[variables.index(v)] = x
                elif x:
                    raise LaurentError(f"variable {v} still present")
            out[tuple(ne)] = c
        return LaurentPoly(variables, out)

    # substitution and evaluation
    def substitute(self, var: str, image: "LaurentPoly") -> "LaurentPoly":
        return poly_substitute(self, var, image)

    def __call__(self, **values) -> complex:
        return eval_complex(self, values)

    # rendering
    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentPoly({self.variables}, {to_text(self)!r})"


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_substitute(p: LaurentPoly, var: str, image: LaurentPoly) -> LaurentPoly:
    """Replace `var` by `image`; the result lives in image's variable list."""
    if var not in p.variables:
        raise LaurentError(f"unknown variable {var}")
    i = p.variables.index(var)
    target = image.variables
    rest = [v for v in p.variables if v != var]
    for v in rest:
        if v not in target:
            raise LaurentError(f"image variables {target} must contain {v}")
    cache: dict[int, LaurentPoly] = {}

    def power(n):
        if n not in cache:
            cache[n] = image ** n
        return cache[n]

    out = LaurentPoly(target)
    for e, c in p.terms.items():
        mono = [0] * len(target)
        for v, x in zip(p.variables, e):
            if v != var:
                mono[target.index(v)] += x
        out = out + power(e[i]).shift(mono) * c
    return out


def eval_complex(p: LaurentPoly, pt: Mapping[str, complex]) -> complex:
    for v in p.variables:
        if v not in pt:
            raise LaurentError(f"no value for {v}")
    vals = [complex(pt[v]) for v in p.variables]
    total = 0j
    for e, c in p.terms.items():
        term = complex(c)
        for x, k in zip(vals, e):
            if k < 0 and x == 0:
                raise LaurentError(f"zero assignment with negative exponent")
            term *= x ** k
        total += term
    return total


def _mono_text(variables, e) -> str:
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return " ".join(parts)


def to_text(p: LaurentPoly) -> str:
    """Canonical text; terms ordered by exponent vector, last variable major."""
    if not p.terms:
        return "0"
    keys = sorted(p.terms, key=lambda e: tuple(reversed(e)))
    out = []
    for n, e in enumerate(keys):
        c = p.terms[e]
        mono = _mono_text(p.variables, e)
        mag = abs(c)
        body = mono if (mono and mag == 1) else (f"{mag}{mono}" if mono else str(mag))
        if n == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def to_json(p: LaurentPoly) -> list:
    keys = sorted(p.terms, key=lambda e: tuple(reversed(e)))
    return [{"exps": list(e), "coeff": str(p.terms[e])} for e in keys]


def from_json(variables, data) -> LaurentPoly:
    return LaurentPoly(variables, {tuple(t["exps"]): int(t["coeff"]) for t in data})


def parse(text: str, variables) -> LaurentPoly:
    """Parse the text rendering back (also accepts '*' and '**')."""
    variables = tuple(variables)
    s = text.replace("**", "^").replace("*", " ").replace("-", " - ").replace("+", " + ")
    s = s.replace("^ - ", "^-")
    toks = s.split()
    out = LaurentPoly(variables)
    sign, coeff, exps, have = 1, None, [0] * len(variables), False

    def flush():
        nonlocal out
        if have:
            out = out + LaurentPoly.monomial(variables, exps, sign * (1 if coeff is None else coeff))

    for t in toks:
        if t in "+-":
            flush()
            sign, coeff, exps, have = (1 if t == "+" else -1), None, [0] * len(variables), False
            continue
        have = True
        j = 0
        while j < len(t) and t[j].isdigit():
            j += 1
        if j:
            coeff = (coeff or 1) * int(t[:j])
        t = t[j:]
        while t:
            v = t[0]
            if v not in variables:
                raise LaurentError(f"unknown symbol {v!r} in {text!r}")
            t = t[1:]
            k = 1
            if t.startswith("^"):
                m = 1
                while m < len(t) and (t[m].isdigit() or (m == 1 and t[m] == "-")):
                    m += 1
                k = int(t[1:m])
                t = t[m:]
            exps[variables.index(v)] += k
    flush()
    return out


# handy rings
AZ = ("a", "z")
AX = ("a", "x")


def az(text: str) -> LaurentPoly:
    return parse(text, AZ)


def ax(text: str) -> LaurentPoly:
    return parse(text, AX)


def unit_circle(theta: float) -> complex:
    return cmath.exp(1j * theta)


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p/q of univariate Laurent polynomials; raises if q does not divide p."""
    if len(p.variables) != 1 or p.variables != q.variables:
        raise LaurentError("exact_divide needs matching univariate polynomials")
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    v = p.variables[0]
    plo, phi = p.degree_range(v)
    qlo, qhi = q.degree_range(v)
    num = [p.coeff((plo + j,)) for j in range(phi - plo + 1)]
    den = [q.coeff((qlo + j,)) for j in range(qhi - qlo + 1)]
    if len(den) > len(num):
        raise LaurentError("inexact division")
    quot = [0] * (len(num) - len(den) + 1)
    for j in range(len(quot) - 1, -1, -1):
        c = num[j + len(den) - 1]
        if c % den[-1]:
            raise LaurentError("inexact division")
        f = c // den[-1]
        quot[j] = f
        if f:
            for t, dc in enumerate(den):
                num[j + t] -= f * dc
    if any(num):
        raise LaurentError("inexact division")
    return LaurentPoly(p.variables, {(plo - qlo + j,): c for j, c in enumerate(quot)})
