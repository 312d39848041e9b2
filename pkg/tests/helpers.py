"""Random exact objects shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from contactlattice import matrix as mx
from contactlattice.algebra import LieAlgebra
from contactlattice.exterior import KForm


def random_rational(rng: random.Random, num: int = 20, den: int = 9) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_form(rng: random.Random, L: LieAlgebra, k: int, density: float = 0.6) -> KForm:
    coeffs = {}
    for idx in combinations(range(L.dim), k):
        if rng.random() < density:
            coeffs[idx] = random_rational(rng)
    return KForm(L, k, coeffs)


def random_unimodular(rng: random.Random, n: int, steps: int = 4):
    """Product of elementary integer matrices and one optional transposition."""
    P = mx.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        E = mx.identity(n)
        E[i][j] = Fraction(rng.choice([-2, -1, 1, 2]))
        P = mx.matmul(P, E)
    if rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        for row in P:
            row[i], row[j] = row[j], row[i]
    return P


def random_invertible(rng: random.Random, n: int):
    while True:
        P = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if mx.det(P) != 0:
            return P


def random_jordan_matrix(rng: random.Random, n: int):
    """``P J P^{-1}`` with rational eigenvalues and random Jordan blocks."""
    blocks, left = [], n
    while left:
        size = rng.randint(1, left)
        lam = Fraction(rng.randint(-3, 3))
        B = [[lam if i == j else Fraction(int(j == i + 1)) for j in range(size)] for i in range(size)]
        blocks.append(B)
        left -= size
    J = mx.block_diag(*blocks)
    P = random_invertible(rng, n)
    return mx.matmul(mx.matmul(P, J), mx.inverse(P))
