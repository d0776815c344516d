"""Twist-recursion sequences v1, w1, u1, v2, w2."""

from __future__ import annotations

import enum
import threading

from .laurent import AX, LaurentPoly


class TwistSeqKind(enum.Enum):
    V1 = "V1"
    W1 = "W1"
    U1 = "U1"
    V2 = "V2"
    W2 = "W2"


class SequenceError(ValueError):
    pass


def _z():
    return LaurentPoly.gen("z", ("z",))


def _one(vs):
    return LaurentPoly.const(1, vs)


def _a(n):
    return LaurentPoly.gen("a", AX, n)


def _x():
    return LaurentPoly.gen("x", AX)


# memo[kind] holds consecutive values starting at the kind's first index
_memo: dict = {}
_lock = threading.Lock()
_START = {TwistSeqKind.V1: -1, TwistSeqKind.W1: 0, TwistSeqKind.U1: 0,
          TwistSeqKind.V2: 0, TwistSeqKind.W2: 0}


def _seed(kind):
    if kind is TwistSeqKind.V1:
        return [-_one(("z",)), LaurentPoly(("z",)), _one(("z",))]
    if kind is TwistSeqKind.W1:
        return [LaurentPoly.const(2, ("z",)), _z()]
    if kind is TwistSeqKind.U1:
        # stored by half-index j for u1^(2j)
        return [LaurentPoly(("a",)), LaurentPoly.gen("a", ("a",))]
    if kind is TwistSeqKind.V2:
        return [LaurentPoly(AX), LaurentPoly(AX), _a(-1)]
    return [LaurentPoly(AX), _one(AX)]


def _step(kind, vals):
    n = len(vals) + _START[kind]  # index of the value being produced
    if kind in (TwistSeqKind.V1, TwistSeqKind.W1):
        return _z() * vals[-1] - vals[-2]
    if kind is TwistSeqKind.U1:
        a = LaurentPoly.gen("a", ("a",))
        return -(a * a) * vals[-1] + a
    if kind is TwistSeqKind.V2:
        return _x() * vals[-1] - vals[-2] + _a(1 - n)
    return _x() * vals[-1] - vals[-2] + _a(n - 1) + _a(1 - n)


def twist_seq(kind: TwistSeqKind | str, k: int) -> LaurentPoly:
    """Exact value of the sequence at index k, by unrolling the recursion."""
    kind = TwistSeqKind(kind) if isinstance(kind, str) else kind
    if k < _START[kind]:
        raise SequenceError(f"index {k} out of range for {kind.value}")
    if kind is TwistSeqKind.U1:
        if k % 2:
            raise SequenceError("U1 is defined only at even indices")
        pos = k // 2
    else:
        pos = k - _START[kind]
    with _lock:
        vals = _memo.setdefault(kind, _seed(kind))
        while len(vals) <= pos:
            vals.append(_step(kind, vals))
        return vals[pos]


def twist_seq_closed(kind: TwistSeqKind | str, k: int, p: complex, a: complex = 1.0) -> complex:
    """Closed-form value at z (or x) = p + 1/p."""
    kind = TwistSeqKind(kind) if isinstance(kind, str) else kind
    p, a = complex(p), complex(a)

    def nonzero(v, what):
        if abs(v) < 1e-12:
            raise SequenceError(f"singular parameter: {what} vanishes")
        return v

    if kind is TwistSeqKind.V1:
        if p == 0:
            raise SequenceError("singular parameter: p vanishes")
        return (p ** k - p ** -k) / nonzero(p - 1 / p, "p - 1/p")
    if kind is TwistSeqKind.W1:
        if p == 0:
            raise SequenceError("singular parameter: p vanishes")
        return p ** k + p ** -k
    if kind is TwistSeqKind.U1:
        if k % 2:
            raise SequenceError("U1 is defined only at even indices")
        if a == 0:
            raise SequenceError("singular parameter: a vanishes")
        j = k // 2
        sg = (-1) ** (j + 1)
        return sg * a ** j * (a ** j + sg * a ** -j) / nonzero(a + 1 / a, "a + 1/a")
    if p == 0 or a == 0:
        raise SequenceError("singular parameter: p or a vanishes")
    if kind is TwistSeqKind.V2:
        d1 = nonzero(p - 1 / p, "p - 1/p")
        d2 = nonzero(a + 1 / a - (p + 1 / p), "a + 1/a - x")
        num = -(p ** k - p ** -k) / a + p * (a ** -k - p ** -k) - (a ** -k - p ** k) / p
        return num / (d1 * d2)
    d1 = nonzero(a - p, "a - p")
    d2 = nonzero(1 - a * p, "1 - a p")
    return a ** -(k - 1) * p ** -(k - 1) * (a ** k - p ** k) / d1 * (1 - a ** k * p ** k) / d2
