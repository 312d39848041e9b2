"""Exact scalar types.

Three kinds of exact numbers show up in the verifications:

* rationals, as :class:`fractions.Fraction`;
* elements ``a + b*sqrt(d)`` of a real quadratic field, :class:`QuadraticNumber`;
* cosines and sines of quarter turns ``k*pi/2``, which are plain rationals in
  ``{-1, 0, 1}`` (:func:`cos_quarter_turn`, :func:`sin_quarter_turn`).

:class:`LaurentPoly` adds a formal transcendental symbol (``t0`` or ``pi``)
on top of a field so that lattice generators such as ``t0*e5`` and rescaled
basis vectors such as ``e4/t0`` can be paired exactly.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[Fraction, "QuadraticNumber"]


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction; reject floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, QuadraticNumber) and x.b == 0:
        return x.a
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class QuadraticNumber:
    """``a + b*sqrt(d)`` with ``a, b`` rational and ``d`` a positive non-square.

    Arithmetic between different ``d`` is refused: one computation lives in
    one field.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        d = int(d)
        if d <= 1 or _is_square(d):
            raise ValueError(f"d={d} must be a positive non-square integer")
        self.a = as_fraction(a)
        self.b = as_fraction(b)
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> QuadraticNumber:
        return cls(0, 1, d)

    def _coerce(self, other) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(
                    f"mixed quadratic fields Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadraticNumber(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a * o.a + self.d * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        c = self.conjugate()
        return QuadraticNumber(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadraticNumber(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b) == (other.a, other.b) and (
                self.d == other.d or self.b == 0)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d})"


def is_rational(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return True
    if isinstance(x, QuadraticNumber):
        return x.is_rational()
    if isinstance(x, LaurentPoly):
        return x.is_rational()
    return False


def is_integer(x) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, (QuadraticNumber, LaurentPoly)):
        return x.is_integer()
    return False


def to_rational(x) -> Fraction:
    if isinstance(x, LaurentPoly):
        if not x.is_rational():
            raise ValueError(f"{x} is not rational")
        return to_rational(x.coefficient(0))
    if isinstance(x, QuadraticNumber):
        if x.b != 0:
            raise ValueError(f"{x} is not rational")
        return x.a
    return as_fraction(x)


# --- quarter turns ---------------------------------------------------------

_COS = (1, 0, -1, 0)


def cos_quarter_turn(k: int) -> Fraction:
    """``cos(k*pi/2)`` exactly."""
    return Fraction(_COS[k % 4])


def sin_quarter_turn(k: int) -> Fraction:
    """``sin(k*pi/2)`` exactly."""
    return Fraction(_COS[(k - 1) % 4])


def quarter_turn_index(angle_over_pi) -> int:
    """Return ``k`` with ``angle = k*pi/2``; the angle is given as a multiple of pi."""
    k = as_fraction(angle_over_pi) * 2
    if k.denominator != 1:
        raise ValueError(f"{angle_over_pi}*pi is not a quarter turn")
    return int(k)


# --- a formal transcendental on top of a field ------------------------------

class LaurentPoly:
    """Finite sum ``sum_k c_k * tau**k`` with field coefficients and integer ``k``.

    ``tau`` is a named transcendental (``t0`` in the D5 certificate, ``pi`` in
    the D11 one). A value is rational exactly when only the ``tau**0``
    coefficient survives and it is rational.
    """

    __slots__ = ("terms", "symbol")

    def __init__(self, terms: dict | None = None, symbol: str = "tau"):
        self.symbol = symbol
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c, symbol: str = "tau") -> LaurentPoly:
        return cls({0: c}, symbol)

    @classmethod
    def monomial(cls, c, power: int, symbol: str = "tau") -> LaurentPoly:
        return cls({power: c}, symbol)

    def coefficient(self, k: int):
        return self.terms.get(k, Fraction(0))

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.symbol != self.symbol and other.terms and self.terms:
                if set(other.terms) - {0} or set(self.terms) - {0}:
                    raise ValueError(
                        f"mixed transcendentals {self.symbol} and {other.symbol}")
            return other
        if isinstance(other, (int, Fraction, QuadraticNumber)) and not isinstance(other, bool):
            return LaurentPoly.constant(other, self.symbol)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in o.terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly(terms, self.symbol)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.symbol)

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
        terms: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(terms, self.symbol)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            if len(other.terms) != 1:
                raise ZeroDivisionError("only monomials are invertible")
            (k, c), = other.terms.items()
            return self * LaurentPoly({-k: 1 / c}, self.symbol)
        return LaurentPoly({k: c / other for k, c in self.terms.items()}, self.symbol)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: kv[0])))

    def __bool__(self):
        return bool(self.terms)

    def is_rational(self) -> bool:
        if set(self.terms) - {0}:
            return False
        return is_rational(self.coefficient(0))

    def is_integer(self) -> bool:
        return self.is_rational() and is_integer(self.coefficient(0))

    def evaluate(self, tau_value: float) -> float:
        return sum(float(c) * tau_value ** k for k, c in self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(f"({c})" if k == 0 else f"({c})*{self.symbol}^{k}")
        return " + ".join(parts)
