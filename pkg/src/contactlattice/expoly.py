"""Exponential polynomials ``sum c * t^k * e^{a t} * cos(b t) | sin(b t)``.

These are the entries of ``exp(t*beta)`` for rational ``beta`` whose
semisimple part is a direct sum of 1x1 blocks ``(w)`` and 2x2 blocks
``[[a, b], [-b, a]]`` in coordinates.  The functions ``t^k e^{at} cos(bt)``
(``b >= 0``) and ``t^k e^{at} sin(bt)`` (``b > 0``) are linearly independent,
so equality of canonical term maps is equality of functions.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from . import matrix as mx
from .errors import SpectralShapeError
from .scalars import LaurentPoly, QuadraticNumber, cos_quarter_turn, sin_quarter_turn

Key = tuple  # (k, a, b, "cos" | "sin")


class ExpPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        store: dict = {}
        for (k, a, b, kind), c in (terms or {}).items():
            a, b, c = Fraction(a), Fraction(b), Fraction(c)
            if kind not in ("cos", "sin"):
                raise ValueError(f"unknown trig kind {kind!r}")
            if b < 0:
                b = -b
                if kind == "sin":
                    c = -c
            if kind == "sin" and b == 0:
                continue
            key = (int(k), a, b, kind)
            store[key] = store.get(key, Fraction(0)) + c
        self.terms = {key: c for key, c in store.items() if c != 0}

    @classmethod
    def term(cls, c=1, k: int = 0, a=0, b=0, kind: str = "cos") -> ExpPoly:
        """``c * t^k * e^{a t} * cos(b t)`` (or ``sin``)."""
        return cls({(k, a, b, kind): c})

    @classmethod
    def constant(cls, c) -> ExpPoly:
        return cls.term(c)

    def _coerce(self, other) -> ExpPoly | None:
        if isinstance(other, ExpPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExpPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in o.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + c
        return ExpPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}

        def put(key, c):
            tmp = ExpPoly({key: c})
            for kk, cc in tmp.terms.items():
                out[kk] = out.get(kk, Fraction(0)) + cc

        for (k1, a1, b1, s1), c1 in self.terms.items():
            for (k2, a2, b2, s2), c2 in o.terms.items():
                k, a, c = k1 + k2, a1 + a2, c1 * c2 / 2
                if s1 == "cos" and s2 == "cos":
                    put((k, a, b1 - b2, "cos"), c)
                    put((k, a, b1 + b2, "cos"), c)
                elif s1 == "sin" and s2 == "sin":
                    put((k, a, b1 - b2, "cos"), c)
                    put((k, a, b1 + b2, "cos"), -c)
                elif s1 == "sin":
                    put((k, a, b1 + b2, "sin"), c)
                    put((k, a, b1 - b2, "sin"), c)
                else:
                    put((k, a, b1 + b2, "sin"), c)
                    put((k, a, b2 - b1, "sin"), c)
        return ExpPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return ExpPoly({k: v / c for k, v in self.terms.items()})

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # --- evaluation ---
    def __call__(self, t: float) -> float:
        total = 0.0
        for (k, a, b, kind), c in self.terms.items():
            trig = math.cos(float(b) * t) if kind == "cos" else math.sin(float(b) * t)
            total += float(c) * t ** k * math.exp(float(a) * t) * trig
        return total

    def is_polynomial(self) -> bool:
        return all(a == 0 and b == 0 for (_, a, b, _) in self.terms)

    def at_rational(self, t) -> Fraction:
        """Exact value at rational ``t``; only for polynomial entries."""
        if not self.is_polynomial():
            raise ValueError("entry has exponential or trigonometric terms")
        t = Fraction(t)
        return sum((c * t ** k for (k, _, _, _), c in self.terms.items()), Fraction(0))

    def at_quarter_turn(self, j: int, symbol: str = "pi") -> LaurentPoly:
        """Exact value at ``t = j*pi/2`` as a Laurent polynomial in ``pi``.

        Requires no real exponentials and every frequency ``b`` with ``b*j``
        an integer, so the trig factors are quarter-turn values.
        """
        out = LaurentPoly({}, symbol)
        for (k, a, b, kind), c in self.terms.items():
            if a != 0:
                raise ValueError("e^{a t} is transcendental at t = j*pi/2")
            turn = b * j
            if turn.denominator != 1:
                raise ValueError(f"cos/sin({b} * {j} pi/2) is not a quarter-turn value")
            trig = cos_quarter_turn(int(turn)) if kind == "cos" else sin_quarter_turn(int(turn))
            out = out + LaurentPoly({k: c * trig * Fraction(j, 2) ** k}, symbol)
        return out

    def at_log_unit(self, c, unit: QuadraticNumber, symbol: str = "t0") -> LaurentPoly:
        """Exact value at ``t = c*t0`` where ``e^{t0} = unit``.

        Requires no trig terms and ``a*c`` integral for every exponent.
        """
        c = Fraction(c)
        out = LaurentPoly({}, symbol)
        for (k, a, b, _), v in self.terms.items():
            if b != 0:
                raise ValueError("trigonometric term at a logarithmic time")
            w = a * c
            if w.denominator != 1:
                raise ValueError(f"e^({w} t0) is not in the quadratic field")
            out = out + LaurentPoly({k: (unit ** int(w)) * v * c ** k}, symbol)
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (k, a, b, kind), c in sorted(self.terms.items(), key=lambda kv: str(kv[0])):
            bits = [str(c)]
            if k:
                bits.append(f"t^{k}")
            if a:
                bits.append(f"e^({a}t)")
            if b:
                bits.append(f"{kind}({b}t)")
            parts.append("*".join(bits))
        return " + ".join(parts)


def poly_in_t(coeffs) -> ExpPoly:
    """``sum_k coeffs[k] * t^k``."""
    return ExpPoly({(k, 0, 0, "cos"): c for k, c in enumerate(coeffs)})


def _coordinate_blocks(S) -> list[list[int]]:
    """Connected components of the nonzero pattern of ``S`` (as a graph on indices)."""
    n = len(S)
    seen, blocks = set(), []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and (S[i][j] != 0 or S[j][i] != 0):
                    seen.add(j)
                    stack.append(j)
        blocks.append(sorted(comp))
    return blocks


def exp_semisimple_symbolic(S) -> list[list[ExpPoly]]:
    """``exp(t S)`` for ``S`` made of coordinate blocks ``(w)`` or ``[[a, b], [-b, a]]``."""
    n = len(S)
    out = [[ExpPoly() for _ in range(n)] for _ in range(n)]
    for comp in _coordinate_blocks(S):
        if len(comp) == 1:
            (i,) = comp
            out[i][i] = ExpPoly.term(1, a=S[i][i])
            continue
        if len(comp) != 2:
            raise SpectralShapeError(f"semisimple block on indices {comp} has no closed form here")
        i, j = comp
        a, b = S[i][i], S[i][j]
        if S[j][j] != a or S[j][i] != -b:
            raise SpectralShapeError("2x2 block is not of the form [[a, b], [-b, a]]")
        cos = ExpPoly.term(1, a=a, b=b, kind="cos")
        sin = ExpPoly.term(1, a=a, b=b, kind="sin")
        out[i][i], out[i][j], out[j][i], out[j][j] = cos, sin, -sin, cos
    return out


def exp_symbolic(beta) -> list[list[ExpPoly]]:
    """``exp(t beta)`` as a matrix of exponential polynomials in ``t``.

    Uses ``exp(tS) exp(tN)`` from the Jordan-Chevalley decomposition; the
    factor ``exp(tN)`` is a polynomial in ``t``.
    """
    from .linalg import jordan_chevalley

    jc = jordan_chevalley(beta)
    S = [list(r) for r in jc.S]
    N = [list(r) for r in jc.N]
    n = len(S)
    es = exp_semisimple_symbolic(S)
    # exp(tN) = sum_j t^j N^j / j!
    en = [[ExpPoly() for _ in range(n)] for _ in range(n)]
    power = mx.identity(n)
    fact = 1
    for j in range(n):
        if j:
            power = mx.matmul(power, N)
            fact *= j
        if mx.is_zero(power):
            break
        for r in range(n):
            for c in range(n):
                if power[r][c] != 0:
                    en[r][c] = en[r][c] + ExpPoly.term(power[r][c] / fact, k=j)
    return mx.matmul(es, en)


def evaluate_matrix(M, t: float):
    return [[float(x(t)) if isinstance(x, ExpPoly) else float(x) for x in r] for r in M]
