"""The symplectic form ``Omega = d(s eta)`` on ``g x I`` and its Liouville field.

Forms live on ``g + R ds``: the extended algebra has one extra generator
``ds`` (last index) that brackets trivially, and coefficients are
polynomials in ``s``.  The differential is the Chevalley-Eilenberg one on
the ``g`` part plus ``ds ^ d/ds`` on coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import LieAlgebra
from .catalog import CatalogEntry
from .errors import DimensionMismatch, NotContact
from .exterior import (KForm, ce_differential, interior_product, is_contact, is_symplectic,
                       reeb_vector, wedge, wedge_power)
from .polynomial import PolynomialQ
from .report import Report

DS = "ds"


@lru_cache(maxsize=64)
def extended_algebra(L: LieAlgebra) -> LieAlgebra:
    labels = list(L.labels) + [DS]
    table = {(L.labels[i], L.labels[j]): {L.labels[k]: c for k, c in out.items()}
             for (i, j), out in L.structure.items()}
    return LieAlgebra(labels, table, name=f"{L.name}+ds")


def _poly(c) -> PolynomialQ:
    return c if isinstance(c, PolynomialQ) else PolynomialQ.constant(Fraction(c), "s")


S = PolynomialQ([0, 1], "s")


@dataclass(frozen=True)
class SForm:
    base: LieAlgebra
    form: KForm          # on extended_algebra(base), PolynomialQ coefficients

    @classmethod
    def lift(cls, a: KForm, coeff=1) -> SForm:
        """``coeff(s) * a`` for a constant-coefficient form ``a`` on ``g``."""
        L = a.parent
        E = extended_algebra(L)
        c = _poly(coeff)
        return cls(L, KForm(E, a.degree, {k: c * _poly(v) for k, v in a.coeffs.items()}))

    @classmethod
    def ds(cls, L: LieAlgebra) -> SForm:
        E = extended_algebra(L)
        return cls(L, KForm(E, 1, {(DS,): PolynomialQ.constant(1, "s")}))

    @property
    def degree(self) -> int:
        return self.form.degree

    def __add__(self, other: SForm) -> SForm:
        return SForm(self.base, self.form + other.form)

    def __neg__(self) -> SForm:
        return SForm(self.base, -self.form)

    def __sub__(self, other: SForm) -> SForm:
        return SForm(self.base, self.form - other.form)

    def scale(self, c) -> SForm:
        return SForm(self.base, self.form.scale(_poly(c)))

    def __xor__(self, other: SForm) -> SForm:
        return SForm(self.base, wedge(self.form, other.form))

    def power(self, k: int) -> SForm:
        return SForm(self.base, wedge_power(self.form, k))

    def d(self) -> SForm:
        E = self.form.parent
        g_part = ce_differential(E, self.form)
        deriv = KForm(E, self.degree, {k: c.derivative() for k, c in self.form.coeffs.items()})
        return SForm(self.base, g_part + wedge(SForm.ds(self.base).form, deriv))

    def interior(self, v: SVector) -> SForm:
        return SForm(self.base, interior_product(v.components(), self.form))

    def is_zero(self) -> bool:
        return self.form.is_zero()

    def __eq__(self, other):
        if not isinstance(other, SForm):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(self.form)

    def at(self, s0) -> KForm:
        """Constant-coefficient form on ``g + R ds`` at ``s = s0``."""
        s0 = Fraction(s0)
        return KForm(self.form.parent, self.degree, {k: c(s0) for k, c in self.form.coeffs.items()})

    def top_coefficient(self) -> PolynomialQ:
        return self.form.coeffs.get(tuple(range(self.form.dim)), PolynomialQ([], "s"))

    def __repr__(self):
        return repr(self.form)


@dataclass(frozen=True)
class SVector:
    base: LieAlgebra
    g: tuple            # coordinates in g
    ds: PolynomialQ     # coefficient of d/ds

    def components(self) -> list:
        return [_poly(x) for x in self.g] + [_poly(self.ds)]


def _contact_data(entry: CatalogEntry):
    L, eta = entry.algebra, entry.eta
    if L.dim % 2 == 0:
        raise DimensionMismatch(f"{entry.label} has even dimension {L.dim}; no contact form")
    if eta is None:
        raise NotContact(f"{entry.label} carries no contact form")
    if not is_contact(L, eta):
        raise NotContact(f"{entry.label}: the stored 1-form is not contact")
    return L, eta


def omega_form(entry: CatalogEntry) -> SForm:
    """``Omega = d(s * eta)``."""
    L, eta = _contact_data(entry)
    return SForm.lift(eta, S).d()


def liouville_field(entry: CatalogEntry) -> SVector:
    L, eta = _contact_data(entry)
    return SVector(L, tuple(reeb_vector(L, eta)), S)


def verify_nondegenerate(entry: CatalogEntry, samples: Sequence = (1, -2, Fraction(1, 3))) -> Report:
    L, eta = _contact_data(entry)
    n = L.dim // 2
    rep = Report(entry.label)
    Om = omega_form(entry)
    e = SForm.lift(eta)
    de = SForm.lift(ce_differential(L, eta))
    ds = SForm.ds(L)
    rep.add("boundary:omega_formula", Om == (ds ^ e) + de.scale(S), "Omega = ds^eta + s d eta")
    rep.add("boundary:closed", Om.d().is_zero(), "d Omega = 0")
    rep.add("boundary:ds_eta_square", ((ds ^ e) ^ (ds ^ e)).is_zero(), "(ds^eta)^2 = 0")
    rep.add("boundary:d_eta_power", wedge_power(ce_differential(L, eta), n + 1).is_zero(),
            f"(d eta)^{n + 1} = 0")
    lhs = Om.power(n + 1)
    rhs = (ds ^ e ^ de.power(n)).scale(PolynomialQ([0] * n + [n + 1], "s"))
    top = lhs.top_coefficient()
    rep.add("boundary:power_formula", lhs == rhs,
            f"Omega^{n + 1} = {n + 1} s^{n} ds^eta^(d eta)^{n}; top coefficient {top}")
    rep.add("boundary:top_nonzero", top.degree >= 0 and top(Fraction(0)) == 0 and top.degree == n,
            f"vanishes only at s = 0 ({top})")
    E = extended_algebra(L)
    flat = LieAlgebra.abelian(E.dim)
    for s0 in samples:
        form = Om.at(s0)
        ok = is_symplectic(flat, KForm(flat, 2, form.coeffs))
        rep.add(f"boundary:pointwise_s={Fraction(s0)}", ok)
    return rep


def liouville_check(entry: CatalogEntry) -> Report:
    L, eta = _contact_data(entry)
    rep = Report(entry.label)
    Om = omega_form(entry)
    X = liouville_field(entry)
    ds, e = SForm.ds(L), SForm.lift(eta)
    contraction = Om.interior(X)
    expected = e.scale(S) - ds
    if contraction == expected:
        rep.add("boundary:contraction", True, "iota_X Omega = -ds + s eta")
    else:
        rep.add("boundary:contraction", contraction == -expected,
                "iota_X Omega = +ds - s eta (opposite global sign)")
    dOm = Om.d()
    rep.add("boundary:closed", dOm.is_zero())
    lie = contraction.d() + dOm.interior(X)
    rep.add("boundary:lie_derivative", lie == Om,
            "L_X Omega = Omega" if lie == Om else f"L_X Omega - Omega = {lie - Om}")
    return rep


def boundary_report(entry: CatalogEntry) -> Report:
    rep = verify_nondegenerate(entry)
    rep.extend(liouville_check(entry))
    return rep
