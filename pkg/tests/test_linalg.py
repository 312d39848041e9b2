import random
from fractions import Fraction

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from contactlattice import lattice as lat
from contactlattice import matrix as mx
from contactlattice.errors import NotNilpotent
from contactlattice.linalg import (char_poly, check_jordan_chevalley, commute, exp_nilpotent,
                                   exp_numeric, is_nilpotent_matrix, jordan_chevalley,
                                   simultaneous_eigenbasis)
from contactlattice.polynomial import PolynomialQ, gcd, real_roots, root_bound, sturm_count

from helpers import random_jordan_matrix

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def square(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80, deadline=None)
@given(square())
def test_cayley_hamilton(M):
    assert mx.is_zero(char_poly(M)(M))


@settings(max_examples=60, deadline=None)
@given(square(4))
def test_char_poly_matches_numpy(M):
    p = char_poly(M)
    want = np.poly(np.array(M, dtype=float))
    got = [float(c) for c in reversed(p.coeffs)]
    assert np.allclose(got, want, atol=1e-8)
    assert p.coefficient(0) == (-1) ** len(M) * mx.det(M)


def test_char_poly_golden():
    X = PolynomialQ.x()
    assert char_poly(lat.U1) == X ** 3 - 3 * X ** 2 + 2 * X - 1
    assert char_poly([[1, 2], [3, 4]]) == X ** 2 - 5 * X - 2


def test_sturm_against_numpy_on_random_cubics():
    rng = random.Random(11)
    for _ in range(100):
        while True:
            c = [rng.randint(-9, 9) for _ in range(3)]
            p = PolynomialQ([Fraction(x) for x in c] + [Fraction(1)])
            if p.is_squarefree():
                break
        roots = np.roots([1] + list(reversed(c)))
        real = sorted(r.real for r in roots if abs(r.imag) < 1e-9)
        B = root_bound(p)
        assert sturm_count(p, -B, B) == len(real)
        iso = [r for r, _ in real_roots(p)]
        assert len(iso) == len(real)
        assert np.allclose(sorted(iso), real, atol=1e-5)


def test_real_roots_brackets_are_exact():
    p = char_poly(lat.T2)
    for approx, (lo, hi) in real_roots(p):
        assert lo <= hi
        assert sturm_count(p, lo, hi) == 1


def test_gcd_and_squarefree():
    X = PolynomialQ.x()
    p = (X - 1) ** 2 * (X + 2)
    assert gcd(p, p.derivative()).monic() == X - 1
    assert p.squarefree_part().monic() == (X - 1) * (X + 2)
    assert not p.is_squarefree()


def test_jordan_chevalley_random():
    rng = random.Random(21)
    for i in range(60):
        n = rng.randint(2, 5)
        M = random_jordan_matrix(rng, n)
        jc = jordan_chevalley(M)
        assert all(check_jordan_chevalley(jc).values())


def test_jordan_chevalley_of_jordan_block():
    M = [[2, 1, 0], [0, 2, 0], [0, 0, 3]]
    S, N = jordan_chevalley(M).as_lists()
    assert S == [[2, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert N == [[0, 1, 0], [0, 0, 0], [0, 0, 0]]


def test_jordan_chevalley_irrational_spectrum():
    # rotation-like block: S keeps the irreducible quadratic factor
    M = [[0, -1, 1, 0], [1, 0, 0, 1], [0, 0, 0, -1], [0, 0, 1, 0]]
    jc = jordan_chevalley(M)
    assert all(check_jordan_chevalley(jc).values())
    S, N = jc.as_lists()
    assert not mx.is_zero(N)


def test_exp_nilpotent_exact_and_rejects():
    N = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    E = exp_nilpotent(mx.from_rows(N))
    assert E == [[1, 1, Fraction(1, 2)], [0, 1, 1], [0, 0, 1]]
    assert is_nilpotent_matrix(N)
    with pytest.raises(NotNilpotent):
        exp_nilpotent(mx.from_rows([[1, 0], [0, 0]]))


@settings(max_examples=40, deadline=None)
@given(square(4))
def test_exp_numeric_against_scipy(M):
    A = np.array(M, dtype=float)
    ours = exp_numeric(A)
    ref = scipy.linalg.expm(A)
    assert np.allclose(ours, ref, rtol=1e-9, atol=1e-9)
    twice = exp_numeric(2 * A)
    assert np.allclose(ours @ ours, twice, rtol=1e-8, atol=1e-8)


def test_commuting_pair_eigenbasis():
    assert commute(lat.T1, lat.T2)
    assert not commute(lat.T1, lat.U1)
    psi, blocks = simultaneous_eigenbasis(lat.U1, lat.U2)
    assert blocks.sizes == [1, 2]
    D = np.linalg.inv(psi) @ np.array(lat.U1, float) @ psi
    assert abs(D[0, 1]) < 1e-9 and abs(D[1, 0]) < 1e-9
    with pytest.raises(ValueError):
        simultaneous_eigenbasis(lat.T1, lat.U1)
