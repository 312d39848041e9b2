"""Closed-form group operations on the Heisenberg group ``H^{2n+1}``.

A point ``(x, y, z)`` is the matrix ``[[1, x, z], [0, I, y^T], [0, 0, 1]]``;
an algebra element ``(a, b, c)`` is ``[[0, a, c], [0, 0, b^T], [0, 0, 0]]``.
In the catalog basis ``e1`` is ``c``, ``e2..e_{n+1}`` are ``a`` and
``e_{n+2}..e_{2n+1}`` are ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import PolynomialQ
from .report import Report


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class HeisenbergPoint:
    x: tuple
    y: tuple
    z: object

    @classmethod
    def make(cls, x: Sequence, y: Sequence, z) -> HeisenbergPoint:
        if len(x) != len(y):
            raise ValueError("x and y must have the same length")
        return cls(tuple(Fraction(v) if isinstance(v, int) else v for v in x),
                   tuple(Fraction(v) if isinstance(v, int) else v for v in y),
                   Fraction(z) if isinstance(z, int) else z)

    @classmethod
    def identity(cls, n: int) -> HeisenbergPoint:
        return cls.make([0] * n, [0] * n, 0)

    @property
    def n(self) -> int:
        return len(self.x)

    def matrix(self) -> list:
        n = self.n
        m = [[Fraction(int(i == j)) for j in range(n + 2)] for i in range(n + 2)]
        for k in range(n):
            m[0][k + 1] = self.x[k]
            m[k + 1][n + 1] = self.y[k]
        m[0][n + 1] = self.z
        return m

    def __mul__(self, other: HeisenbergPoint) -> HeisenbergPoint:
        return heisenberg_mul(self, other)


def heisenberg_mul(a: HeisenbergPoint, b: HeisenbergPoint) -> HeisenbergPoint:
    """``(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x.y')``."""
    if a.n != b.n:
        raise ValueError("points of different Heisenberg groups")
    return HeisenbergPoint(tuple(p + q for p, q in zip(a.x, b.x)),
                           tuple(p + q for p, q in zip(a.y, b.y)),
                           a.z + b.z + _dot(a.x, b.y))


def heisenberg_inv(a: HeisenbergPoint) -> HeisenbergPoint:
    return HeisenbergPoint(tuple(-v for v in a.x), tuple(-v for v in a.y), -a.z + _dot(a.x, a.y))


def heisenberg_exp(X: Sequence) -> HeisenbergPoint:
    """Algebra coordinates ``[c, a_1..a_n, b_1..b_n]`` to ``(a, b, c + a.b/2)``."""
    if len(X) % 2 != 1:
        raise ValueError("Heisenberg algebra elements have odd length 2n+1")
    n = len(X) // 2
    c, a, b = X[0], tuple(X[1:n + 1]), tuple(X[n + 1:])
    return HeisenbergPoint.make(a, b, c + _dot(a, b) / 2)


def heisenberg_ln(p: HeisenbergPoint) -> list:
    """Inverse of :func:`heisenberg_exp`: ``[z - x.y/2, x, y]``."""
    return [p.z - _dot(p.x, p.y) / 2, *p.x, *p.y]


def integer_lattice_check(n: int, z_denominator: int = 1) -> Report:
    """Closure of ``{(x, y, z) : x, y integral, z in Z/d}`` under products and inverses.

    The check is symbolic in the generators: products of integral points
    add ``x.y'`` (an integer) to ``z``, so every generator pair and every
    inverse is tested on the standard generators and their combinations.
    """
    rep = Report(f"H({n})")
    d = Fraction(1, z_denominator)
    gens = []
    for k in range(n):
        e = [0] * n
        e[k] = 1
        gens.append(HeisenbergPoint.make(e, [0] * n, 0))
        gens.append(HeisenbergPoint.make([0] * n, e, 0))
    gens.append(HeisenbergPoint.make([0] * n, [0] * n, d))
    samples = list(gens)
    samples += [heisenberg_mul(a, b) for a in gens for b in gens]
    samples += [heisenberg_inv(a) for a in list(samples)]

    def member(p):
        return all(Fraction(v).denominator == 1 for v in p.x + p.y) and (p.z / d).denominator == 1

    rep.add("products", all(member(heisenberg_mul(a, b)) for a in samples for b in samples))
    rep.add("inverses", all(member(heisenberg_inv(a)) for a in samples))
    rep.add("identity", member(HeisenbergPoint.identity(n)))
    return rep


def left_invariant_contact_value(p: HeisenbergPoint, X: Sequence):
    """``(dz - sum x_i dy_i)`` at ``p`` applied to the left-invariant field of ``X``.

    The tangent vector is ``d/de [p * exp(e X)]`` at ``e = 0``, computed
    exactly by running the group law over polynomials in ``e`` and keeping
    the linear coefficient.
    """
    eps = PolynomialQ.x("eps")
    path = heisenberg_exp([eps * c for c in X])
    base = HeisenbergPoint(tuple(PolynomialQ.constant(v, "eps") for v in p.x),
                           tuple(PolynomialQ.constant(v, "eps") for v in p.y),
                           PolynomialQ.constant(p.z, "eps"))
    q = heisenberg_mul(base, path)
    dz = q.z.coefficient(1)
    dy = [c.coefficient(1) for c in q.y]
    return dz - _dot(p.x, dy)


def dual_e1(X: Sequence):
    """``e1*(X)``, the central coordinate."""
    return X[0]
