"""Univariate polynomials with exact coefficients, Sturm sequences and root isolation."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import matrix as mx


def _norm(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


class PolynomialQ:
    """``sum_i c_i X^i`` with coefficients stored lowest degree first.

    Coefficients are usually ``Fraction`` but any exact field element works
    for the ring operations; division needs a field.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "X"):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def x(cls, var: str = "X") -> PolynomialQ:
        return cls([0, 1], var)

    @classmethod
    def constant(cls, c, var: str = "X") -> PolynomialQ:
        return cls([c], var)

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "X") -> PolynomialQ:
        out = cls([1], var)
        for r in roots:
            out = out * cls([-r, 1], var)
        return out

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> PolynomialQ | None:
        if isinstance(other, PolynomialQ):
            return other
        if isinstance(other, bool):
            return None
        try:
            if other == 0:
                return PolynomialQ((), self.var)
        except TypeError:
            return None
        if isinstance(other, (int, Fraction)) or hasattr(other, "conjugate"):
            return PolynomialQ([other], self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return PolynomialQ([self.coefficient(i) + o.coefficient(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return PolynomialQ([-c for c in self.coeffs], self.var)

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
        if not self.coeffs or not o.coeffs:
            return PolynomialQ((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return PolynomialQ(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = PolynomialQ([1], self.var)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(o.coeffs) + 1, 0)
        lead = o.leading()
        for shift in range(len(q) - 1, -1, -1):
            c = rem[shift + o.degree] / lead
            q[shift] = c
            if c != 0:
                for j, b in enumerate(o.coeffs):
                    rem[shift + j] = rem[shift + j] - c * b
        return PolynomialQ(q, self.var), PolynomialQ(rem[:o.degree] if o.degree > 0 else [],
                                                      self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, c):
        """Division by a nonzero scalar."""
        if isinstance(c, PolynomialQ):
            q, r = divmod(self, c)
            if not r.is_zero():
                raise ValueError("polynomial division is not exact")
            return q
        return PolynomialQ([x / c for x in self.coeffs], self.var)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def monic(self) -> PolynomialQ:
        if self.is_zero():
            return self
        return self / self.leading()

    def derivative(self) -> PolynomialQ:
        return PolynomialQ([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Horner evaluation at a scalar, another polynomial, or a square matrix."""
        if isinstance(x, list):
            n = len(x)
            acc = mx.zeros(n)
            for c in reversed(self.coeffs):
                acc = mx.matmul(acc, x)
                for i in range(n):
                    acc[i][i] = acc[i][i] + c
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def squarefree_part(self) -> PolynomialQ:
        """``p / gcd(p, p')``, monic; same roots, each simple."""
        if self.degree <= 0:
            return self.monic()
        return (self // gcd(self, self.derivative())).monic()

    def is_squarefree(self) -> bool:
        return gcd(self, self.derivative()).degree <= 0

    def __repr__(self):
        return f"PolynomialQ({list(self.coeffs)!r}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and mag == 1:
                term = mono
            elif mono:
                term = f"{mag}*{mono}"
            else:
                term = str(mag)
            if parts:
                parts.append(("- " if neg else "+ ") + term)
            else:
                parts.append(("-" if neg else "") + term)
        return " ".join(parts)


def gcd(a: PolynomialQ, b: PolynomialQ) -> PolynomialQ:
    """Monic greatest common divisor (Euclid over the coefficient field)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# --- Sturm sequences --------------------------------------------------------

def sturm_sequence(p: PolynomialQ) -> list[PolynomialQ]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [q for q in seq if not q.is_zero()]


def _variations(seq: Sequence[PolynomialQ], x) -> int:
    signs = [v for v in (q(x) for q in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def sturm_count(p: PolynomialQ, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    Non-squarefree inputs are first reduced by ``gcd(p, p')``; such an input
    with a root exactly at an endpoint is rejected.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if not p.is_squarefree():
        if p(lo) == 0 or p(hi) == 0:
            raise ValueError("non-squarefree polynomial has a root at an interval endpoint")
        p = p.squarefree_part()
    seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(p: PolynomialQ) -> Fraction:
    """Cauchy bound: every real root lies in ``[-B, B]``."""
    lead = abs(p.leading())
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def real_roots(p: PolynomialQ, tol=Fraction(1, 10**6)) -> list[tuple[float, tuple[Fraction, Fraction]]]:
    """Distinct real roots as ``(approximation, (lo, hi))`` with the root in ``(lo, hi]``.

    Intervals are Sturm-isolated, then bisected to width at most ``tol``.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    q = p.squarefree_part()
    if q.degree <= 0:
        return []
    seq = sturm_sequence(q)

    def count(a, b):
        return _variations(seq, a) - _variations(seq, b)

    bound = root_bound(q)
    stack = [(-bound - 1, bound)]
    isolated = []
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            isolated.append((a, b))
            continue
        mid = (a + b) / 2
        stack.extend([(a, mid), (mid, b)])
    out = []
    for a, b in sorted(isolated):
        while b - a > tol:
            mid = (a + b) / 2
            if count(a, mid):
                b = mid
            else:
                a = mid
        out.append((float((a + b) / 2), (a, b)))
    return out
