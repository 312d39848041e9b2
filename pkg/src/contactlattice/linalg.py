"""Characteristic polynomials, Jordan-Chevalley decomposition and exponentials.

The exact side works on list-of-rows matrices from :mod:`.matrix`; the
numeric side (``exp_numeric``, ``simultaneous_eigenbasis``) works on floats
through numpy, with an mpmath rerun used as the error yardstick.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from . import matrix as mx
from .errors import DecompositionError, NotNilpotent
from .polynomial import PolynomialQ


def _square(M) -> int:
    n, m = mx.shape(M)
    if n != m:
        raise ValueError(f"matrix is {n}x{m}, not square")
    return n


def char_poly(M, var: str = "X") -> PolynomialQ:
    """``det(X*I - M)`` by Berkowitz's division-free recurrence."""
    n = _square(M)
    vec = [Fraction(1)]  # coefficients, highest degree first
    for k in range(n):
        a = M[k][k]
        row = M[k][:k]
        col = [M[i][k] for i in range(k)]
        sub = [r[:k] for r in M[:k]]
        toeplitz = [Fraction(1), -a]
        power_col = col
        for _ in range(k):
            toeplitz.append(-sum((r * c for r, c in zip(row, power_col)), Fraction(0)))
            power_col = mx.matvec(sub, power_col)
        new = []
        for i in range(k + 2):
            acc = Fraction(0)
            for j in range(k + 1):
                if 0 <= i - j < len(toeplitz):
                    acc = acc + toeplitz[i - j] * vec[j]
            new.append(acc)
        vec = new
    return PolynomialQ(list(reversed(vec)), var)


# --- Jordan-Chevalley ----------------------------------------------------------

@dataclass(frozen=True)
class JordanChevalley:
    M: tuple
    S: tuple
    N: tuple
    U: tuple | None = None

    def as_lists(self):
        return [list(r) for r in self.S], [list(r) for r in self.N]


def _freeze(M) -> tuple:
    return tuple(tuple(r) for r in M)


def is_nilpotent_matrix(N) -> bool:
    n = _square(N)
    return mx.is_zero(mx.power(N, n)) if n else True


def jordan_chevalley(M) -> JordanChevalley:
    """Additive ``M = S + N`` (and ``M = S U`` when ``M`` is invertible) over Q.

    ``S`` is found by Newton iteration ``S <- S - p(S) p'(S)^{-1}`` with ``p``
    the squarefree part of the characteristic polynomial, so it is a
    polynomial in ``M`` with rational coefficients.
    """
    n = _square(M)
    M = mx.from_rows(M)
    p = char_poly(M).squarefree_part()
    dp = p.derivative()
    S = [list(r) for r in M]
    for _ in range(2 * n + 2):
        ps = p(S)
        if mx.is_zero(ps):
            break
        S = mx.sub(S, mx.matmul(ps, mx.inverse(dp(S))))
    else:
        raise DecompositionError("Newton iteration for the semisimple part did not converge")
    N = mx.sub(M, S)
    U = None
    if mx.det(M) != 0:
        U = _freeze(mx.matmul(mx.inverse(S), M))
    return JordanChevalley(_freeze(M), _freeze(S), _freeze(N), U)


def check_jordan_chevalley(jc: JordanChevalley) -> dict[str, bool]:
    M, S, N = ([list(r) for r in x] for x in (jc.M, jc.S, jc.N))
    checks = {
        "sum": mx.equal(mx.add(S, N), M),
        "commute": mx.is_zero(mx.commutator(S, N)),
        "nilpotent": is_nilpotent_matrix(N),
        "semisimple": mx.is_zero(char_poly(M).squarefree_part()(S)),
    }
    if jc.U is not None:
        U = [list(r) for r in jc.U]
        checks["unipotent"] = is_nilpotent_matrix(mx.sub(U, mx.identity(len(U))))
        checks["product"] = mx.equal(mx.matmul(S, U), M)
    return checks


# --- exponentials ---------------------------------------------------------------

def exp_nilpotent(N):
    """``sum_j N^j / j!`` for nilpotent ``N``; entries may lie in any Q-algebra."""
    n = _square(N)
    term = mx.identity(n)
    total = mx.identity(n)
    for j in range(1, n + 1):
        term = [[x / j for x in r] for r in mx.matmul(term, N)]
        if mx.is_zero(term):
            return total
        total = mx.add(total, term)
    if not mx.is_zero(mx.matmul(term, N)):
        raise NotNilpotent("matrix is not nilpotent")
    return total


def _expm_series(A, one, eps, norm, scale_limit=60):
    """Scaling and squaring with a Taylor core; ``A`` is a list of rows."""
    n = len(A)
    nrm = norm(A)
    s = 0
    while nrm > 0.5 and s < scale_limit:
        nrm /= 2
        s += 1
    if s == scale_limit:
        raise OverflowError("matrix norm too large for exponentiation")
    f = one * 2 ** s
    B = [[x / f for x in r] for r in A]
    ident = [[one if i == j else one * 0 for j in range(n)] for i in range(n)]
    total = [r[:] for r in ident]
    term = [r[:] for r in ident]
    k = 1
    while True:
        term = [[sum(term[i][m] * B[m][j] for m in range(n)) / k for j in range(n)]
                for i in range(n)]
        total = [[a + b for a, b in zip(r, t)] for r, t in zip(total, term)]
        if norm(term) <= eps * max(norm(total), 1) or k > 60:
            break
        k += 1
    for _ in range(s):
        total = [[sum(total[i][m] * total[m][j] for m in range(n)) for j in range(n)]
                 for i in range(n)]
    return total


def exp_numeric(M, tol: float = 1e-10) -> np.ndarray:
    """Float matrix exponential checked entrywise against a 40-digit rerun.

    Raises ``OverflowError`` for non-finite results and ``ArithmeticError``
    when some entry differs from the high-precision value by more than
    ``tol`` relative to ``max(1, |entry|)``.
    """
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("exp_numeric needs a square matrix")
    rows = A.tolist()
    inf_norm = lambda X: max((sum(abs(x) for x in r) for r in X), default=0.0)
    low = np.array(_expm_series(rows, 1.0, 2.0 ** -53, inf_norm), dtype=float)
    if not np.all(np.isfinite(low)):
        raise OverflowError("matrix exponential overflowed")
    # a private context: workdps() would change the global precision seen by other threads
    ctx = mpmath.MPContext()
    ctx.dps = 40
    hi_rows = [[ctx.mpf(x) for x in r] for r in rows]
    high = _expm_series(hi_rows, ctx.mpf(1), ctx.mpf(10) ** -38, inf_norm)
    ref = np.array([[float(x) for x in r] for r in high])
    worst = 0.0
    for i in range(A.shape[0]):
        for j in range(A.shape[0]):
            err = abs(ctx.mpf(low[i, j]) - high[i][j]) / max(1, abs(high[i][j]))
            worst = max(worst, float(err))
    if worst > tol:
        raise ArithmeticError(f"exp_numeric relative error {worst:.3e} exceeds {tol:.1e}")
    return ref


# --- commuting pairs ---------------------------------------------------------------

def commute(A, B) -> bool:
    """Exact for exact entries; floats are compared with a 1e-12 tolerance."""
    if any(isinstance(x, float) for r in list(A) + list(B) for x in r):
        a, b = np.asarray(A, float), np.asarray(B, float)
        return bool(np.max(np.abs(a @ b - b @ a), initial=0.0) <= 1e-12 * max(1.0, np.max(np.abs(a)) * np.max(np.abs(b))))
    return mx.is_zero(mx.commutator(mx.from_rows(A), mx.from_rows(B)))


@dataclass
class EigenBlocks:
    """Real block structure shared by a commuting pair.

    ``sizes`` lists block sizes (1 or 2) along the diagonal; ``values[m][b]``
    is the eigenvalue of input ``m`` on block ``b``; for a 2x2 block with
    columns ``(x, -y)`` it is the eigenvalue on ``x + i y``.
    """

    psi: np.ndarray
    sizes: list[int]
    values: list[list[complex]]
    residuals: list[float]


def _block_residual(D: np.ndarray, sizes: Sequence[int]) -> float:
    model = np.zeros_like(D)
    off = 0
    for sz in sizes:
        blk = D[off:off + sz, off:off + sz]
        if sz == 2:
            a = (blk[0, 0] + blk[1, 1]) / 2
            b = (blk[1, 0] - blk[0, 1]) / 2
            blk = np.array([[a, -b], [b, a]])
        model[off:off + sz, off:off + sz] = blk
        off += sz
    return float(np.max(np.abs(D - model), initial=0.0))


def simultaneous_eigenbasis(A, B, tol: float = 1e-8) -> tuple[np.ndarray, EigenBlocks]:
    """Real basis ``Psi`` block-diagonalizing both ``A`` and ``B``.

    Eigenvectors come from a generic combination ``A + c B``.  A complex
    eigenvector ``x + i y`` (positive imaginary eigenvalue part) contributes
    the columns ``(x, -y)``, so each 2x2 block reads ``[[a, -b], [b, a]]``.
    """
    if not commute(A, B):
        raise ValueError("matrices do not commute")
    a, b = np.asarray([[float(x) for x in r] for r in A]), np.asarray([[float(x) for x in r] for r in B])
    n = a.shape[0]
    last_err = "no combination tried"
    for c in (0.6180339887, 1.4142135623, -0.7071067811, 2.7182818284):
        w, v = np.linalg.eig(a + c * b)
        order = sorted(range(n), key=lambda i: (abs(w[i].imag) > 1e-12, -w[i].real, -w[i].imag))
        cols, sizes = [], []
        for i in order:
            lam, vec = w[i], v[:, i]
            if abs(lam.imag) <= 1e-12:
                x = np.real(vec)
                k = int(np.argmax(np.abs(x)))
                x = x / np.linalg.norm(x) * (1 if x[k] > 0 else -1)
                cols.append(x)
                sizes.append(1)
            elif lam.imag > 0:
                vec = vec / np.linalg.norm(vec)
                k = int(np.argmax(np.abs(vec)))
                vec = vec * (abs(vec[k]) / vec[k])  # fix the complex phase
                cols.extend([np.real(vec), -np.imag(vec)])
                sizes.append(2)
        if sum(sizes) != n:
            last_err = "eigenvalue pairing failed"
            continue
        psi = np.column_stack(cols)
        if np.linalg.cond(psi) > 1 / tol:
            last_err = "eigenvectors are (numerically) dependent; input is defective"
            continue
        inv = np.linalg.inv(psi)
        res, values = [], []
        for M in (a, b):
            D = inv @ M @ psi
            res.append(_block_residual(D, sizes))
            vals, off = [], 0
            for sz in sizes:
                if sz == 1:
                    vals.append(complex(D[off, off]))
                else:
                    vals.append(complex((D[off, off] + D[off + 1, off + 1]) / 2,
                                        (D[off + 1, off] - D[off, off + 1]) / 2))
                off += sz
            values.append(vals)
        if max(res) <= tol:
            return psi, EigenBlocks(psi, sizes, values, res)
        last_err = f"block residual {max(res):.3e} exceeds {tol:.1e}"
    raise ValueError(f"no simultaneous eigenbasis: {last_err}")
