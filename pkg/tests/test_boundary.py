from dataclasses import replace
from fractions import Fraction

import pytest

from contactlattice import catalog as cat
from contactlattice.algebra import LieAlgebra
from contactlattice.boundary import (S, SForm, boundary_report, extended_algebra, liouville_check,
                                     liouville_field, omega_form, verify_nondegenerate)
from contactlattice.errors import DimensionMismatch, NotContact
from contactlattice.exterior import KForm, ce_differential, is_symplectic
from contactlattice.polynomial import PolynomialQ

CONTACT = [cat.get(n) for n in cat.D_NAMES] + [cat.get("H", {"n": n}) for n in (1, 2, 3)] + [
    cat.get("SA", {"n": 2})]


def test_d1_omega_golden():
    e = cat.get("D1")
    L = e.algebra
    want = (SForm.ds(L) ^ SForm.lift(e.eta)) + SForm.lift(
        KForm(L, 2, {("e2", "e4"): -1, ("e3", "e5"): -1}), S)
    assert omega_form(e) == want


def test_h3_omega_golden():
    e = cat.get("H", {"n": 1})
    L = e.algebra
    a, b, c = L.labels
    want = (SForm.ds(L) ^ SForm.lift(KForm.covector(L, a))) + SForm.lift(KForm(L, 2, {(b, c): -1}), S)
    assert omega_form(e) == want


@pytest.mark.parametrize("e", CONTACT, ids=lambda e: e.label)
def test_zero_slice_is_ds_wedge_eta(e):
    Om = omega_form(e)
    ds_eta = SForm.ds(e.algebra) ^ SForm.lift(e.eta)
    assert Om.at(0) == ds_eta.at(0)


@pytest.mark.parametrize("e", CONTACT, ids=lambda e: e.label)
def test_theorem_identities(e):
    rep = boundary_report(e)
    assert rep.ok, [c.name for c in rep.failures()]


@pytest.mark.parametrize("e", CONTACT, ids=lambda e: e.label)
def test_contraction_has_the_stated_sign(e):
    L = e.algebra
    X = liouville_field(e)
    got = omega_form(e).interior(X)
    assert got == SForm.lift(e.eta, S) - SForm.ds(L)


def test_power_formula_top_coefficient():
    for e, n in ((cat.get("H", {"n": 1}), 1), (cat.get("D5"), 2), (cat.get("H", {"n": 3}), 3)):
        Om = omega_form(e)
        top = Om.power(n + 1).top_coefficient()
        assert top.degree == n
        assert top.coefficient(n) != 0
        assert all(top.coefficient(k) == 0 for k in range(n))


def test_differential_on_s_powers():
    e = cat.get("D13")
    L = e.algebra
    for k in (1, 2, 3):
        sk = PolynomialQ([0] * k + [1], "s")
        lhs = SForm.lift(e.eta, sk).d()
        rhs = (SForm.ds(L) ^ SForm.lift(e.eta)).scale(PolynomialQ([0] * (k - 1) + [k], "s")) + \
            SForm.lift(ce_differential(L, e.eta), sk)
        assert lhs == rhs
    assert SForm.ds(L).d().is_zero()


def test_pointwise_degenerate_at_zero():
    e = cat.get("D5")
    E = extended_algebra(e.algebra)
    flat = LieAlgebra.abelian(E.dim)
    form = omega_form(e)
    assert not is_symplectic(flat, KForm(flat, 2, form.at(0).coeffs))
    assert is_symplectic(flat, KForm(flat, 2, form.at(Fraction(5, 2)).coeffs))


def test_broken_field_fails_lie_derivative():
    e = cat.get("D11")
    X = liouville_field(e)
    doubled = replace(X, ds=2 * S)
    Om = omega_form(e)
    lie = Om.interior(doubled).d() + Om.d().interior(doubled)
    assert lie != Om


def test_even_dimension_and_non_contact():
    with pytest.raises(DimensionMismatch):
        omega_form(cat.get("HR"))
    bad = replace(cat.get("D1"), eta=KForm.covector(cat.get("D1").algebra, "e2"))
    with pytest.raises(NotContact):
        verify_nondegenerate(bad)
    with pytest.raises(NotContact):
        liouville_check(replace(cat.get("D1"), eta=None))
