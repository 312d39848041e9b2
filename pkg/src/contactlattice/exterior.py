"""Exterior algebra on the dual of a Lie algebra.

Forms are sparse maps from strictly increasing index tuples to coefficients.
Coefficients only need ring operations, so the same code serves rational
forms and the polynomial-in-``s`` forms of the boundary module.

Sign conventions: ``(a^b)(X,Y) = a(X)b(Y) - a(Y)b(X)`` and
``d eta(X,Y) = -eta([X,Y])``, extended to all degrees as an antiderivation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import matrix as mx
from .algebra import LieAlgebra
from .errors import DimensionMismatch, NotContact


def sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...] | None, int]:
    """Sort indices by bubble sort, tracking the permutation sign; repeated -> (None, 0)."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


class KForm:
    """A ``k``-form ``sum_I c_I e_I^*`` on the parent algebra."""

    __slots__ = ("parent", "degree", "coeffs")

    def __init__(self, parent: LieAlgebra, degree: int, coeffs: Mapping | None = None):
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        self.parent = parent
        self.degree = degree
        store: dict = {}
        for key, c in (coeffs or {}).items():
            key = tuple(parent.index(k) for k in key)
            if len(key) != degree:
                raise ValueError(f"index tuple {key} has wrong degree")
            canon, sign = sort_with_sign(key)
            if canon is None:
                continue
            if isinstance(c, int):
                c = Fraction(c)
            store[canon] = store.get(canon, 0) + sign * c
        self.coeffs = {k: c for k, c in store.items() if c != 0}

    @property
    def dim(self) -> int:
        return self.parent.dim

    # constructors
    @classmethod
    def zero(cls, parent: LieAlgebra, degree: int) -> KForm:
        return cls(parent, degree)

    @classmethod
    def constant(cls, parent: LieAlgebra, c) -> KForm:
        return cls(parent, 0, {(): c})

    @classmethod
    def covector(cls, parent: LieAlgebra, label, c=1) -> KForm:
        return cls(parent, 1, {(label,): c})

    @classmethod
    def from_vector(cls, parent: LieAlgebra, coeffs: Sequence) -> KForm:
        return cls(parent, 1, {(i,): c for i, c in enumerate(coeffs) if c != 0})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other: KForm):
        if other.parent is not self.parent and other.parent != self.parent:
            raise DimensionMismatch("forms live on different algebras")

    def __add__(self, other: KForm) -> KForm:
        self._same(other)
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return KForm(self.parent, self.degree, out)

    def __neg__(self) -> KForm:
        return KForm(self.parent, self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: KForm) -> KForm:
        return self + (-other)

    def scale(self, c) -> KForm:
        return KForm(self.parent, self.degree, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, c) -> KForm:
        return self.scale(c)

    __rmul__ = __mul__

    def __xor__(self, other: KForm) -> KForm:
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs and (
            self.parent is other.parent or self.parent == other.parent)

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs))))

    def coefficient(self, *labels):
        key = tuple(self.parent.index(k) for k in labels)
        canon, sign = sort_with_sign(key)
        if canon is None:
            return Fraction(0)
        return sign * self.coeffs.get(canon, Fraction(0))

    def top_coefficient(self):
        if self.degree != self.dim:
            raise ValueError("not a top-degree form")
        return self.coeffs.get(tuple(range(self.dim)), Fraction(0))

    def map_coefficients(self, f) -> KForm:
        return KForm(self.parent, self.degree, {k: f(c) for k, c in self.coeffs.items()})

    def evaluate(self, *vectors: Sequence):
        """Value on ``degree`` vectors (determinant convention)."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        total = Fraction(0)
        for idx, c in self.coeffs.items():
            sub = [[v[i] for v in vectors] for i in idx]
            total = total + c * mx.det(sub) if sub else total + c
        return total

    def __repr__(self):
        if not self.coeffs:
            return f"0 ({self.degree}-form)"
        labs = self.parent.labels
        parts = []
        for idx in sorted(self.coeffs):
            name = "^".join(labs[i] + "*" for i in idx) or "1"
            parts.append(f"({self.coeffs[idx]}){name}")
        return " + ".join(parts)


def wedge(a: KForm, b: KForm) -> KForm:
    a._same(b)
    if a.degree + b.degree > a.dim:
        return KForm(a.parent, a.degree + b.degree)
    out: dict = {}
    for I, x in a.coeffs.items():
        for J, y in b.coeffs.items():
            canon, sign = sort_with_sign(I + J)
            if canon is None:
                continue
            out[canon] = out.get(canon, 0) + sign * (x * y)
    return KForm(a.parent, a.degree + b.degree, out)


def wedge_power(a: KForm, n: int) -> KForm:
    if n == 0:
        return KForm.constant(a.parent, 1)
    out = a
    for _ in range(n - 1):
        out = wedge(out, a)
    return out


@lru_cache(maxsize=256)
def _d_covectors(L: LieAlgebra) -> tuple:
    """``d e_k^* = -sum_{i<j} c_ij^k e_i^* ^ e_j^*`` for each ``k``."""
    out = [dict() for _ in range(L.dim)]
    for (i, j), img in L.structure.items():
        for k, c in img.items():
            out[k][(i, j)] = out[k].get((i, j), 0) - c
    return tuple(tuple(d.items()) for d in out)


def ce_differential(L: LieAlgebra, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential, as an antiderivation of degree +1."""
    if a.parent is not L and a.parent != L:
        raise DimensionMismatch("form does not live on this algebra")
    dcov = _d_covectors(L)
    out: dict = {}
    for I, c in a.coeffs.items():
        for pos, k in enumerate(I):
            sgn = -1 if pos % 2 else 1
            for (i, j), v in dcov[k]:
                canon, sign = sort_with_sign(I[:pos] + (i, j) + I[pos + 1:])
                if canon is None:
                    continue
                out[canon] = out.get(canon, 0) + (sgn * sign * v) * c
    return KForm(L, a.degree + 1, out)


def interior_product(x: Sequence, a: KForm) -> KForm:
    """``iota_x a``; antiderivation of degree -1."""
    if len(x) != a.dim:
        raise DimensionMismatch("vector and form dimensions differ")
    if a.degree == 0:
        return KForm(a.parent, 0)
    out: dict = {}
    for I, c in a.coeffs.items():
        for pos, k in enumerate(I):
            if x[k] == 0:
                continue
            key = I[:pos] + I[pos + 1:]
            term = (x[k] * c) if pos % 2 == 0 else -(x[k] * c)
            out[key] = out.get(key, 0) + term
    return KForm(a.parent, a.degree - 1, out)


def pair(a: KForm, x: Sequence):
    """``a(x)`` for a 1-form."""
    if a.degree != 1:
        raise ValueError("pairing needs a 1-form")
    total = Fraction(0)
    for (i,), c in a.coeffs.items():
        if x[i] != 0:
            total = total + c * x[i]
    return total


def contact_volume(L: LieAlgebra, eta: KForm):
    """Top coefficient of ``eta ^ (d eta)^n`` for ``dim L = 2n+1``."""
    if L.dim % 2 == 0:
        raise ValueError("contact forms need odd dimension")
    if eta.degree != 1:
        raise ValueError("a contact form is a 1-form")
    n = L.dim // 2
    return wedge(eta, wedge_power(ce_differential(L, eta), n)).top_coefficient()


def is_contact(L: LieAlgebra, eta: KForm) -> bool:
    return contact_volume(L, eta) != 0


def is_symplectic(L: LieAlgebra, omega: KForm) -> bool:
    if L.dim % 2:
        raise ValueError("symplectic forms need even dimension")
    if omega.degree != 2:
        raise ValueError("a symplectic form is a 2-form")
    if not ce_differential(L, omega).is_zero():
        return False
    return wedge_power(omega, L.dim // 2).top_coefficient() != 0


def two_form_matrix(omega: KForm) -> mx.Matrix:
    """Antisymmetric matrix ``A[i][j] = omega(e_i, e_j)``."""
    n = omega.dim
    A = mx.zeros(n)
    for (i, j), c in omega.coeffs.items():
        A[i][j] = c
        A[j][i] = -c
    return A


def reeb_vector(L: LieAlgebra, eta: KForm) -> list:
    """Unique ``xi`` with ``eta(xi) = 1`` and ``iota_xi d eta = 0``."""
    if L.dim % 2 == 0:
        raise ValueError("contact forms need odd dimension")
    A = two_form_matrix(ce_differential(L, eta))
    # rows j: sum_i xi_i d eta(e_i, e_j) = 0 ; last row: eta(xi) = 1
    rows = [[A[i][j] for i in range(L.dim)] for j in range(L.dim)]
    rows.append([eta.coeffs.get((i,), Fraction(0)) for i in range(L.dim)])
    rhs = [Fraction(0)] * L.dim + [Fraction(1)]
    try:
        xi = mx.solve(rows, rhs)
    except ValueError:
        raise NotContact("d eta has kernel of dimension > 1; eta is not contact") from None
    if xi is None:
        raise NotContact("eta vanishes on ker d eta; eta is not contact")
    return xi
