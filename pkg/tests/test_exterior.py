import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from contactlattice import catalog as cat
from contactlattice.algebra import bracket
from contactlattice.exterior import (KForm, ce_differential, interior_product, is_contact,
                                     is_symplectic, pair, reeb_vector, wedge, wedge_power)

from helpers import random_form

ENTRIES = [cat.get(n) for n in cat.D_NAMES] + [cat.get("H", {"n": 2}), cat.get("SA", {"n": 2})]
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def _entry_and_seed():
    return st.tuples(st.sampled_from(ENTRIES), st.integers(0, 10**6))


@settings(max_examples=60, deadline=None)
@given(_entry_and_seed(), st.integers(0, 3))
def test_d_squared_vanishes(es, k):
    e, seed = es
    a = random_form(random.Random(seed), e.algebra, min(k, e.dim))
    assert ce_differential(e.algebra, ce_differential(e.algebra, a)).is_zero()


@settings(max_examples=40, deadline=None)
@given(_entry_and_seed(), st.integers(0, 2), st.integers(0, 2))
def test_leibniz_rule(es, k, l):
    e, seed = es
    rng = random.Random(seed)
    L = e.algebra
    a, b = random_form(rng, L, k), random_form(rng, L, l)
    lhs = ce_differential(L, wedge(a, b))
    rhs = wedge(ce_differential(L, a), b) + wedge(a, ce_differential(L, b)).scale((-1) ** k)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(_entry_and_seed(), st.integers(1, 3), st.integers(1, 2))
def test_interior_product_is_antiderivation(es, k, l):
    e, seed = es
    rng = random.Random(seed)
    L = e.algebra
    a, b = random_form(rng, L, k), random_form(rng, L, l)
    x = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(L.dim)]
    lhs = interior_product(x, wedge(a, b))
    rhs = wedge(interior_product(x, a), b) + wedge(a, interior_product(x, b)).scale((-1) ** k)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([e for e in ENTRIES if e.eta is not None]),
       st.lists(rationals, min_size=10, max_size=10))
def test_d_of_one_form_against_bracket(e, coords):
    L, eta = e.algebra, e.eta
    x, y = coords[:L.dim], coords[5:5 + L.dim]
    assert ce_differential(L, eta).evaluate(x, y) == -pair(eta, bracket(L, x, y))


def test_d1_differential_golden():
    e = cat.get("D1")
    de = ce_differential(e.algebra, e.eta)
    assert de == KForm(e.algebra, 2, {("e2", "e4"): -1, ("e3", "e5"): -1})


def test_wedge_is_graded_commutative():
    L = cat.get("D5").algebra
    rng = random.Random(5)
    a, b = random_form(rng, L, 1), random_form(rng, L, 2)
    assert wedge(a, b) == wedge(b, a)
    c = random_form(rng, L, 1)
    assert wedge(a, c) == -wedge(c, a)


def test_contact_volume_and_reeb_for_every_entry():
    for e in ENTRIES:
        if e.eta is None:
            continue
        L, eta = e.algebra, e.eta
        assert is_contact(L, eta)
        xi = reeb_vector(L, eta)
        assert pair(eta, xi) == 1
        assert interior_product(xi, ce_differential(L, eta)).is_zero()


def test_reeb_scales_inversely():
    e = cat.get("D13")
    L = e.algebra
    xi = reeb_vector(L, e.eta)
    c = Fraction(-7, 3)
    assert reeb_vector(L, e.eta.scale(c)) == [v / c for v in xi]


def test_non_contact_forms_are_rejected():
    L = cat.get("D1").algebra
    assert not is_contact(L, KForm.covector(L, "e2"))
    assert not is_contact(L, KForm.covector(L, "e1").scale(0))


def test_symplectic_detection_on_abelian_frame():
    from contactlattice.algebra import LieAlgebra
    flat = LieAlgebra.abelian(4)
    w = KForm(flat, 2, {("e1", "e2"): 1, ("e3", "e4"): 1})
    assert is_symplectic(flat, w)
    assert not is_symplectic(flat, KForm(flat, 2, {("e1", "e2"): 1}))
    assert wedge_power(w, 2).top_coefficient() == 2
