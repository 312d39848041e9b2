import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from contactlattice.expoly import ExpPoly, evaluate_matrix, exp_symbolic, poly_in_t
from contactlattice.scalars import (LaurentPoly, QuadraticNumber, cos_quarter_turn, is_integer,
                                    is_rational, quarter_turn_index, sin_quarter_turn, to_rational)

q = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@settings(max_examples=80, deadline=None)
@given(q, q, q, q, st.sampled_from([2, 3, 5, 12, 21]))
def test_quadratic_field_axioms(a, b, c, e, d):
    x, y = QuadraticNumber(a, b, d), QuadraticNumber(c, e, d)
    assert (x + y) - y == x
    assert x * y == y * x
    assert float(x * y) == pytest.approx(float(x) * float(y), rel=1e-9, abs=1e-9)
    if x != 0:
        assert x * x.inverse() == 1
        assert (y / x) * x == y
    assert x.norm() == a * a - d * b * b


def test_unit_of_d5_field():
    unit = QuadraticNumber(Fraction(3, 2), Fraction(1, 2), 5)
    assert unit * unit.conjugate() == 1
    assert unit + unit.inverse() == 3
    assert unit ** 2 + unit ** -2 == 7
    assert float(unit) == pytest.approx((3 + math.sqrt(5)) / 2)


def test_quadratic_refuses_squares_and_mixed_fields():
    with pytest.raises(ValueError):
        QuadraticNumber(1, 1, 4)
    with pytest.raises((ValueError, TypeError)):
        QuadraticNumber(1, 1, 2) + QuadraticNumber(1, 1, 3)


def test_rationality_predicates():
    assert is_rational(QuadraticNumber(Fraction(1, 2), 0, 5))
    assert not is_rational(QuadraticNumber(0, 1, 5))
    assert is_integer(QuadraticNumber(3, 0, 7))
    assert to_rational(LaurentPoly.constant(Fraction(2, 3), "pi")) == Fraction(2, 3)
    assert not is_rational(LaurentPoly.monomial(1, 1, "pi"))


def test_quarter_turns():
    assert [cos_quarter_turn(k) for k in range(5)] == [1, 0, -1, 0, 1]
    assert [sin_quarter_turn(k) for k in range(5)] == [0, 1, 0, -1, 0]
    assert quarter_turn_index(Fraction(3, 2)) == 3
    with pytest.raises(ValueError):
        quarter_turn_index(Fraction(1, 3))


def test_laurent_arithmetic():
    t = LaurentPoly.monomial(1, 1, "t0")
    inv = LaurentPoly.monomial(1, -1, "t0")
    assert t * inv == LaurentPoly.constant(1, "t0")
    assert (t + inv).evaluate(2.0) == pytest.approx(2.5)


def test_expoly_closed_forms_evaluate():
    e = ExpPoly.term(1, a=2)
    assert evaluate_matrix([[e]], 0.5)[0][0] == pytest.approx(math.e)
    rot = ExpPoly.term(1, b=1, kind="cos")
    assert rot.at_quarter_turn(2) == LaurentPoly.constant(-1, "pi")
    p = poly_in_t([1, 0, Fraction(1, 2)])
    assert p.at_rational(2) == 3
    unit = QuadraticNumber(Fraction(3, 2), Fraction(1, 2), 5)
    assert ExpPoly.term(1, a=-1).at_log_unit(1, unit).terms[0] == unit.inverse()


@pytest.mark.parametrize("beta", [
    [[1, 0, 0], [0, -2, 0], [0, 0, 1]],
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]],
    [[Fraction(1, 2), 0, 0], [0, -1, 0], [0, 1, -1]],
    [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
])
def test_exp_symbolic_matches_scipy(beta):
    sym = [[ExpPoly() + x for x in r] for r in exp_symbolic([[Fraction(x) for x in r] for r in beta])]
    for t in (0.5, 1.0, 2.0):
        ref = scipy.linalg.expm(t * np.array(beta, dtype=float))
        assert np.allclose(evaluate_matrix(sym, t), ref, atol=1e-10)
