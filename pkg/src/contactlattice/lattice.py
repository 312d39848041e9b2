"""Lattice certificates, their verification, and the reciprocal-integer obstruction.

A certificate for ``G = N x_b T`` names a basis ``X`` of ``n`` and lattice
generators ``lambda_j`` of ``T`` such that ``db_s(lambda_j)`` is an integer
matrix and ``db_n(lambda_j)`` a rational one in the basis ``X``.

Exact certificates involve one transcendental ``tau`` (``t0`` with
``e^{t0}`` a quadratic unit, or ``pi``).  The basis is stored factored as
``X = B * diag(tau^k) * R`` with ``B`` over the scalar field and ``R``
rational, so that ``X^{-1}`` is available without dividing by polynomials
in ``tau``.  Generators are ``tau * c`` for rational vectors ``c``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from . import matrix as mx
from .algebra import derived_series, is_nilpotent
from .catalog import CatalogEntry
from .errors import (CertificateError, InvalidParameter, NotNilpotent, ObstructionInapplicable)
from .expoly import ExpPoly, exp_symbolic
from .linalg import char_poly, commute, exp_numeric, jordan_chevalley, simultaneous_eigenbasis
from .polynomial import PolynomialQ, root_bound, sturm_count
from .report import Report
from .scalars import (LaurentPoly, QuadraticNumber, cos_quarter_turn, is_integer, is_rational,
                      sin_quarter_turn, to_rational)

RATIONAL, QUADRATIC, QUARTER_TURN, NUMERIC = "rational", "quadratic", "quarter-turn", "numeric"


@dataclass
class LatticeCertificate:
    entry: str
    field: str
    basis: list                       # B, columns are basis vectors in n-coordinates
    tgens: list                       # rational coordinate vectors c_j, lambda_j = tau * c_j
    claims: list                      # integer matrices [db_s(lambda_j)]_X
    claims_n: list | None = None      # rational matrices [db_n(lambda_j)]_X, optional
    degrees: tuple = ()               # tau-power per column of B
    mix: list | None = None           # R; identity when None
    d: int | None = None              # quadratic field discriminant
    symbol: str | None = None         # "t0" or "pi"
    unit: QuadraticNumber | None = None  # value of e^{t0}
    pairings: dict = field(default_factory=dict)  # claimed omega values, e.g. ("X2","X3") -> 1
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        m = len(self.basis)
        if not self.degrees:
            self.degrees = (0,) * m
        if len(self.degrees) != m or any(len(r) != m for r in self.basis):
            raise CertificateError("basis must be square with one degree per column")
        if len(self.claims) != len(self.tgens):
            raise CertificateError("one claimed matrix per lattice generator")
        for C in self.claims:
            if len(C) != m or any(len(r) != m for r in C):
                raise CertificateError("claimed matrix has the wrong size")
            if self.field != NUMERIC and not all(is_integer(x) for r in C for x in r):
                raise CertificateError("claimed db_s matrix has non-integer entries")
        if self.claims_n is not None:
            if len(self.claims_n) != len(self.tgens):
                raise CertificateError("one claimed db_n matrix per lattice generator")
            if not all(is_rational(x) for C in self.claims_n for r in C for x in r):
                raise CertificateError("claimed db_n matrix has irrational entries")

    @property
    def m(self) -> int:
        return len(self.basis)

    def R(self):
        return self.mix if self.mix is not None else mx.identity(self.m)

    def columns(self) -> list:
        """Basis vectors ``X_j`` in n-coordinates (LaurentPoly entries when ``tau`` is used)."""
        if self.field == NUMERIC:
            return [list(c) for c in np.asarray(self.basis, float).T]
        BD = [[self._lp(self.basis[i][j], self.degrees[j]) for j in range(self.m)]
              for i in range(self.m)]
        return mx.columns(mx.matmul(BD, self.R()))

    def inverse_basis(self):
        Binv = mx.inverse(self.basis)
        DB = [[self._lp(Binv[i][j], -self.degrees[i]) for j in range(self.m)] for i in range(self.m)]
        return mx.matmul(mx.inverse(self.R()), DB)

    def _lp(self, c, k: int):
        if self.symbol is None:
            if k:
                raise CertificateError("tau-degrees need a transcendental symbol")
            return c
        return LaurentPoly.monomial(c, k, self.symbol)


def change_basis(cert: LatticeCertificate, P) -> LatticeCertificate:
    """Replace ``X`` by ``X P``; claims become ``P^{-1} C P``."""
    Pinv = mx.inverse(P)
    conj = lambda C: mx.matmul(mx.matmul(Pinv, C), P)
    if cert.field == NUMERIC:
        basis = (np.asarray(cert.basis, float) @ np.asarray(P, float)).tolist()
        return replace(cert, basis=basis, claims=[conj(C) for C in cert.claims],
                       meta=dict(cert.meta))
    return replace(cert, mix=mx.matmul(cert.R(), P), claims=[conj(C) for C in cert.claims],
                   claims_n=None if cert.claims_n is None else [conj(C) for C in cert.claims_n],
                   meta=dict(cert.meta))


# --- exact evaluation of db at tau * c ----------------------------------------------

def _exp_at_tau(M, cert: LatticeCertificate):
    E = [[x if isinstance(x, ExpPoly) else ExpPoly.constant(x) for x in r] for r in exp_symbolic(M)]
    if cert.symbol == "t0":
        return [[x.at_log_unit(1, cert.unit, "t0") for x in r] for r in E]
    if cert.symbol == "pi":
        return [[x.at_quarter_turn(2, "pi") for x in r] for r in E]
    return [[x.at_rational(1) for x in r] for r in E]


def _rational_matrix(M):
    """Exact rational matrix, or ``None`` if some entry involves ``tau`` or a surd."""
    if not all(is_rational(x) for r in M for x in r):
        return None
    return [[to_rational(x) for x in r] for r in M]


def _fmt_matrix(M) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in r) for r in M) + "]"


def _claim_sanity(rep: Report, tag: str, C) -> None:
    d = mx.det(C)
    rep.add(f"{tag}:det", d in (1, -1), f"det = {d}")
    rep.add(f"{tag}:charpoly_integral", char_poly(C).is_integral(), str(char_poly(C)))


def verify_nilpotent_qform(entry: CatalogEntry) -> bool:
    """Rational structure constants in the stored basis of a nilpotent entry."""
    if not is_nilpotent(entry.algebra):
        raise NotNilpotent(f"{entry.label} is not nilpotent")
    return all(isinstance(c, (int, Fraction)) for out in entry.algebra.structure.values()
               for c in out.values())


def verify_certificate(entry: CatalogEntry, cert: LatticeCertificate, tol: float = 1e-8) -> Report:
    rep = Report(entry.label)
    sp = entry.split
    if sp is None:
        raise CertificateError(f"{entry.label} has no split data")
    if cert.m != sp.m:
        rep.add("cert:size", False, f"basis of size {cert.m}, n has dimension {sp.m}")
        return rep
    for c in cert.tgens:
        if len(c) != sp.k:
            rep.add("cert:tgen_size", False, f"generator {c} has {len(c)} coordinates, T has {sp.k}")
            return rep
    if cert.field == NUMERIC:
        return _verify_numeric(entry, cert, rep, tol)

    detB, detR = mx.det(cert.basis), mx.det(cert.R())
    rep.add("cert:basis_invertible", detB != 0 and detR != 0)
    if not rep.ok:
        return rep
    if not cert.tgens:
        rep.add("cert:trivial_T", sp.k == 0, "T = 0, nothing to represent")
        return rep
    if len(cert.tgens) != sp.k:
        rep.add("cert:tgen_count", False, f"{len(cert.tgens)} generators for dim T = {sp.k}")
        return rep
    T = mx.from_columns([list(c) for c in cert.tgens])
    rep.add("cert:tgens_independent", mx.det(T) != 0)
    Xinv, X = cert.inverse_basis(), mx.from_columns(cert.columns())
    for j, c in enumerate(cert.tgens, start=1):
        tag = f"gen{j}"
        beta = sp.beta_of(c)
        jc = jordan_chevalley(beta)
        try:
            Es, En = _exp_at_tau(jc.S, cert), _exp_at_tau(jc.N, cert)
        except (ValueError, CertificateError) as exc:
            rep.add(f"{tag}:closed_form", False, str(exc))
            continue
        Cs = _rational_matrix(mx.matmul(mx.matmul(Xinv, Es), X))
        Cn = _rational_matrix(mx.matmul(mx.matmul(Xinv, En), X))
        rep.add(f"{tag}:db_n_rational", Cn is not None,
                "" if Cn is None else _fmt_matrix(Cn))
        if cert.claims_n is not None and Cn is not None:
            rep.add(f"{tag}:db_n_claim", mx.equal(Cn, cert.claims_n[j - 1]))
        ok_int = Cs is not None and all(x.denominator == 1 for r in Cs for x in r)
        rep.add(f"{tag}:db_s_integer", ok_int, "" if Cs is None else _fmt_matrix(Cs))
        claim = [[to_rational(x) for x in r] for r in cert.claims[j - 1]]
        rep.add(f"{tag}:db_s_claim", Cs is not None and mx.equal(Cs, claim),
                f"claimed {_fmt_matrix(claim)}")
        _claim_sanity(rep, tag, claim)
    return rep


# --- central extensions -------------------------------------------------------------

def _center_position(entry: CatalogEntry) -> int:
    ext = entry.extension
    z = entry.algebra.e(ext.center_label)
    for i, v in enumerate(entry.split.n_basis):
        if list(v) == list(z):
            return i
    raise CertificateError(f"center {ext.center_label} is not a basis vector of n")


def _to_full(entry: CatalogEntry, coords, basis) -> list:
    out = [Fraction(0)] * entry.dim
    for c, b in zip(coords, basis):
        if c != 0:
            out = [o + c * x for o, x in zip(out, b)]
    return out


def omega_pairings(entry: CatalogEntry, cert: LatticeCertificate) -> dict:
    """``omega`` on all pairs from the base part of ``X`` and the lattice generators."""
    ext = entry.extension
    L, base = entry.algebra, ext.base
    zi = _center_position(entry)
    named = []
    for j, col in enumerate(cert.columns()):
        if j != zi:
            named.append((f"X{j + 1}", _to_full(entry, col, entry.split.n_basis)))
    for j, c in enumerate(cert.tgens, start=1):
        coeffs = [cert._lp(x, 1) for x in c]
        named.append((f"lambda{j}", _to_full(entry, coeffs, entry.split.t_basis)))
    full_index = [L.index(lab) for lab in base.labels]

    def w(u, v):
        acc = 0
        for (i, j), c in ext.omega.coeffs.items():
            a, b = full_index[i], full_index[j]
            term = u[a] * v[b] - u[b] * v[a]
            if term != 0:
                acc = acc + c * term
        return acc

    out = {}
    for a in range(len(named)):
        for b in range(a + 1, len(named)):
            (na, u), (nb, v) = named[a], named[b]
            val = w(u, v)
            if val != 0:
                out[(na, nb)] = val
    return out


def base_block(M, drop: int) -> list:
    keep = [i for i in range(len(M)) if i != drop]
    return [[M[i][j] for j in keep] for i in keep]


def verify_central_extension_certificate(entry: CatalogEntry, cert: LatticeCertificate) -> Report:
    """Integer representation on the base nilradical plus rationality of ``omega``."""
    if entry.extension is None:
        raise CertificateError(f"{entry.label} is not stored as a central extension")
    rep = verify_certificate(entry, cert)
    zi = _center_position(entry)
    col = cert.columns()[zi]
    unit_col = [Fraction(int(i == zi)) for i in range(cert.m)]
    rep.add("ext:center_column", all(x == y for x, y in zip(col, unit_col)),
            f"X{zi + 1} is the center {entry.extension.center_label}")
    for j, C in enumerate(cert.claims, start=1):
        blk = base_block(C, zi)
        rep.add(f"ext:gen{j}:base_integer", all(is_integer(x) for r in blk for x in r),
                _fmt_matrix(blk))
        rep.add(f"ext:gen{j}:center_fixed",
                all(C[i][zi] == (1 if i == zi else 0) for i in range(cert.m)))
    pairs = omega_pairings(entry, cert)
    bad = {k: v for k, v in pairs.items() if not is_rational(v)}
    rep.add("ext:omega_rational", not bad,
            "; ".join(f"omega({a},{b}) = {v}" for (a, b), v in sorted(pairs.items())))
    for key, want in cert.pairings.items():
        got = pairs.get(tuple(key), Fraction(0))
        rep.add(f"ext:omega({key[0]},{key[1]})", is_rational(got) and to_rational(got) == want,
                f"{got} (claimed {want})")
    return rep


# --- builders -----------------------------------------------------------------------

def _entry(name: str, **params) -> CatalogEntry:
    from .catalog import get
    return get(name, params or None)


def build_d5_certificate(m0: int, q=1) -> LatticeCertificate:
    """``e^{t0} + e^{-t0} = m0``, basis ``X2 = r e2 + s e3``, ``X3 = r e^{-t0} e2 + s e^{t0} e3``.

    ``r = q`` and ``s = 1/sqrt(d)`` make ``omega(X2, X3) = q``; ``X4 = e4 / t0``
    absorbs the ``-t0`` of the unipotent part.
    """
    if int(m0) != m0 or m0 <= 2:
        raise InvalidParameter("m0 must be an integer >= 3")
    m0, q = int(m0), Fraction(q)
    if q <= 0:
        raise InvalidParameter("q must be positive")
    d = m0 * m0 - 4
    unit = QuadraticNumber(Fraction(m0, 2), Fraction(1, 2), d)
    s = QuadraticNumber(0, Fraction(1, d), d)
    r = q
    z = Fraction(0)
    B = mx.from_columns([[1, z, z, z], [z, r, s, z], [z, r * unit.inverse(), s * unit, z],
                         [z, z, z, 1]])
    claim = mx.block_diag([[1]], [[0, -1], [1, m0]], [[1]])
    claim_n = mx.identity(4)
    claim_n[0][3] = Fraction(-1)
    return LatticeCertificate("D5", QUADRATIC, B, [[Fraction(1)]], [claim], [claim_n],
                              degrees=(0, 0, 0, -1), d=d, symbol="t0", unit=unit,
                              pairings={("X2", "X3"): q, ("X4", "lambda1"): Fraction(1)},
                              meta={"m0": m0, "q": q})


def build_d11_certificate(k0: int, q0=1, eps: int = 1) -> LatticeCertificate:
    """``t0 = k0*pi/2`` and ``X4 = q0 * pi^{-1} * e4``; the rotation becomes a quarter turn."""
    if int(k0) != k0 or k0 <= 0:
        raise InvalidParameter("k0 must be a positive integer")
    k0, q0 = int(k0), Fraction(q0)
    if q0 <= 0:
        raise InvalidParameter("q0 must be positive")
    B = mx.identity(4)
    B[3][3] = q0
    c, s = cos_quarter_turn(k0), sin_quarter_turn(k0)
    claim = mx.block_diag([[1]], [[c, s], [-s, c]], [[1]])
    claim_n = mx.identity(4)
    claim_n[0][3] = -eps * Fraction(k0) * q0 / 2
    return LatticeCertificate("D11", QUARTER_TURN, B, [[Fraction(k0, 2)]], [claim], [claim_n],
                              degrees=(0, 0, 0, -1), symbol="pi",
                              pairings={("X2", "X3"): Fraction(1),
                                        ("X4", "lambda1"): eps * Fraction(k0) * q0 / 2},
                              meta={"k0": k0, "q0": q0, "eps": eps})


def identity_certificate(entry: CatalogEntry) -> LatticeCertificate:
    """The stored basis of a nilpotent entry; there is no ``T`` to represent."""
    m = entry.split.m
    return LatticeCertificate(entry.name, RATIONAL, mx.identity(m), [], [])


# --- commuting integer pairs (D18, D20) ---------------------------------------------

T1 = [[0, 0, 1], [1, 0, -5], [0, 1, 6]]
T2 = [[-4, -4, -3], [21, 16, 11], [-4, -3, -2]]
U1 = [[0, 0, 1], [1, 0, -2], [0, 1, 3]]
U2 = [[0, 1, 1], [-2, -2, -1], [1, 1, 1]]

_SHAPES = {"D18": (3, [1, 1, 1]), "D20": (1, [1, 2])}


@dataclass
class PairRequest:
    """A commuting integer pair to be turned into a certificate for ``entry``."""

    entry: str
    M1: list
    M2: list


def build_commuting_pair_certificate(entry: CatalogEntry, M1, M2, tol: float = 1e-8,
                                     min_det: float = 1e-6) -> tuple[LatticeCertificate, Report]:
    """Certificate whose claims are ``M1, M2`` themselves, in a numeric eigenbasis.

    Commutation, determinants, characteristic polynomials and real-root
    counts are exact; the eigenbasis and the log coordinates are floats.
    """
    if entry.name not in _SHAPES:
        raise CertificateError(f"commuting-pair certificates are for D18 and D20, not {entry.name}")
    n_real, sizes_expected = _SHAPES[entry.name]
    M1 = [[Fraction(x) for x in r] for r in M1]
    M2 = [[Fraction(x) for x in r] for r in M2]
    rep = Report(entry.label)
    for tag, M in (("M1", M1), ("M2", M2)):
        if not all(x.denominator == 1 for r in M for x in r):
            raise CertificateError(f"{tag} is not an integer matrix")
        if mx.det(M) != 1:
            raise CertificateError(f"det {tag} = {mx.det(M)}, expected 1")
        p = char_poly(M)
        if not p.is_squarefree():
            raise CertificateError(f"{tag} has a repeated eigenvalue")
        B = root_bound(p)
        total, positive = sturm_count(p, -B, B), sturm_count(p, 0, B)
        if total != n_real or positive != n_real:
            raise CertificateError(f"{tag}: {total} real roots ({positive} positive), "
                                   f"{entry.name} needs {n_real} positive")
        rep.add(f"{tag}:det", True, "1")
        rep.add(f"{tag}:charpoly", True, str(p))
        rep.add(f"{tag}:sturm", True, f"{total} real roots, all positive")
    if not commute(M1, M2):
        raise CertificateError("M1 and M2 do not commute")
    rep.add("pair:commute", True)

    psi, blocks = simultaneous_eigenbasis(M1, M2, tol=tol)
    if blocks.sizes != sizes_expected:
        raise CertificateError(f"eigen-block sizes {blocks.sizes}, expected {sizes_expected}")
    lams, meta = [], {"eigenvalues": blocks.values}
    if entry.name == "D18":
        for vals in blocks.values:
            x = [v.real for v in vals]
            lams.append((-math.log(x[0]), -math.log(x[1])))
        meta["logs"] = [[math.log(v.real) for v in vals] for vals in blocks.values]
    else:
        alphas, angles = [], []
        for vals in blocks.values:
            alpha = math.sqrt(vals[0].real)
            angle = math.atan2(vals[1].imag, vals[1].real)
            alphas.append(alpha)
            angles.append(angle)
            lams.append((math.log(alpha), angle))
        meta.update(alpha=alphas, angle=angles)
    D = float(np.linalg.det(np.array(lams)))
    meta["lambda"] = lams
    meta["independence"] = abs(D)
    if abs(D) <= min_det:
        raise CertificateError(f"lattice generators are dependent: |det| = {abs(D):.3e}")
    rep.add("pair:independent", True, f"|det(f1, f2)| = {abs(D):.6f}", residual=abs(D))
    cert = LatticeCertificate(entry.name, NUMERIC, np.linalg.inv(psi).tolist(),
                              [list(l) for l in lams], [M1, M2], meta=meta)
    rep.extend(verify_certificate(entry, cert, tol))
    return cert, rep


def _verify_numeric(entry: CatalogEntry, cert: LatticeCertificate, rep: Report, tol: float) -> Report:
    sp = entry.split
    X = np.asarray(cert.basis, float)
    if abs(np.linalg.det(X)) < 1e-12:
        rep.add("cert:basis_invertible", False)
        return rep
    Xinv = np.linalg.inv(X)
    lam = np.asarray(cert.tgens, float)
    rep.add("cert:tgens_independent", lam.shape[0] == sp.k and abs(np.linalg.det(lam)) > 1e-6)
    betas = [np.asarray([[float(x) for x in r] for r in b]) for b in sp.beta]
    for j, (c, C) in enumerate(zip(cert.tgens, cert.claims), start=1):
        tag = f"gen{j}"
        gen = sum(float(ci) * b for ci, b in zip(c, betas))
        E = exp_numeric(gen)
        res = float(np.max(np.abs(Xinv @ E @ X - np.asarray(C, float))))
        rep.add(f"{tag}:db_matches_claim", res <= tol, f"max residual {res:.3e}", residual=res)
        exact = [[Fraction(x) for x in r] for r in C]
        rep.add(f"{tag}:claim_integer", all(x.denominator == 1 for r in exact for x in r))
        _claim_sanity(rep, tag, exact)
    return rep


# --- obstruction --------------------------------------------------------------------

@dataclass
class ObstructionReport:
    entry: str
    params: dict
    stratum: list              # basis of [n, n] in n-coordinates
    stratum_labels: str
    stratum_trace: Fraction
    complement_trace: Fraction
    mu: Fraction
    stratum_charpoly: PolynomialQ
    complement_charpoly: PolynomialQ
    forced_integral: tuple = ("e^{mu t0}", "e^{-mu t0}")
    conclusion: str = ""

    def as_report(self) -> Report:
        rep = Report(self.entry)
        rep.add("obstruction:complement", self.complement_trace == -self.stratum_trace,
                f"stratum weight {self.stratum_trace}, complement {self.complement_trace}")
        rep.add("obstruction:mu_nonzero", self.mu != 0, f"mu = {self.mu}")
        return rep


def obstruction_reciprocal(entry: CatalogEntry) -> ObstructionReport:
    """Weight of ``beta_s`` on ``[n, n]`` versus the complementary weight.

    Under a lattice generator ``t0`` the determinants of ``db_s(t0)`` on the
    characteristic ideal ``[n, n]`` and on the quotient would both be
    integers with product one; they are ``e^{mu t0}`` and ``e^{-mu t0}``, so
    ``mu != 0`` forces ``t0 = 0``.
    """
    sp = entry.split
    if sp is None or sp.k != 1:
        raise ObstructionInapplicable(f"{entry.label}: the obstruction needs a one-dimensional T")
    S = jordan_chevalley(sp.beta[0]).S
    nalg = sp.n_algebra()
    series = derived_series(nalg)
    stratum = series[1] if len(series) > 1 else series[0]
    if stratum.is_zero():
        raise ObstructionInapplicable(f"{entry.label}: n is abelian, no stratum")
    V = stratum.basis
    A_cols = []
    for v in V:
        w = mx.matvec(S, v)
        coords = stratum.coordinates(w)
        if coords is None:
            raise ObstructionInapplicable(f"{entry.label}: [n, n] is not beta_s-invariant")
        A_cols.append(coords)
    A = mx.from_columns(A_cols)
    tr_s, tr_all = mx.trace(A), mx.trace(S)
    p_all, p_s = char_poly(S), char_poly(A)
    q, r = divmod(p_all, p_s)
    if r.degree >= 0:
        raise ObstructionInapplicable("characteristic polynomial of the stratum does not divide")
    mu = abs(tr_s)
    labels = ", ".join(sp.algebra.format_vector(sp.n_vector(v)) for v in V)
    if mu == 0:
        raise ObstructionInapplicable(f"{entry.label}: beta_s has weight 0 on [n, n] = <{labels}>")
    text = (f"db_s(t0) has determinant e^({tr_s} t0) on <{labels}> and e^({tr_all - tr_s} t0) "
            f"on the quotient; both integers with product 1 forces t0 = 0")
    return ObstructionReport(entry.label, dict(entry.params), V, labels, tr_s, tr_all - tr_s, mu,
                             p_s, q, conclusion=text)


# --- the SY family: integrality of the shifted characteristic polynomial -------------

def sy_lattice_check(a1: int, a2: int, m0: int) -> Report:
    """Integrality of ``prod_j (x^2 - c_{a_j} x + 1)`` with ``c_a = e^{a t0} + e^{-a t0}``."""
    if int(a1) != a1 or int(a2) != a2:
        raise InvalidParameter("a1 and a2 must be integers")
    if int(m0) != m0 or m0 < 3:
        raise InvalidParameter("m0 must be an integer >= 3")
    a1, a2, m0 = int(a1), int(a2), int(m0)
    weights = (a1, a2, a1 + a2)
    top = max(abs(a) for a in weights)
    c = [2, m0]
    for _ in range(2, top + 1):
        c.append(m0 * c[-1] - c[-2])
    f = PolynomialQ([1])
    for a in weights:
        f = f * PolynomialQ([1, -c[abs(a)], 1])
    rep = Report(f"SY(a1={a1},a2={a2})")
    rep.add("recurrence", True, ", ".join(f"c{abs(a)} = {c[abs(a)]}" for a in weights))
    rep.add("f_integral", f.is_integral(), f"f = {f}")
    rep.add("f_palindromic", f.coeffs == tuple(reversed(f.coeffs)))
    return rep


# --- dispatch -----------------------------------------------------------------------

@dataclass
class LatticeAssessment:
    entry: str
    status: str                # "exists", "none", "out-of-scope"
    report: Report
    certificate: LatticeCertificate | None = None
    obstruction: ObstructionReport | None = None


def shipped_certificate(entry: CatalogEntry) -> LatticeCertificate | None:
    from .certfile import load_shipped
    return load_shipped(entry)


def assess(entry: CatalogEntry, cert=None) -> LatticeAssessment:
    """Run a certificate or the obstruction, whichever the machinery finds."""
    name = entry.name
    if name == "SA":
        rep = Report(entry.label)
        rep.skip("lattice", "uniform lattices of R^n x| SL(n,R) are outside the verified scope")
        return LatticeAssessment(entry.label, "out-of-scope", rep)
    if name == "SY":
        a1, a2 = entry.params["a1"], entry.params["a2"]
        if a1.denominator == 1 and a2.denominator == 1:
            rep = sy_lattice_check(int(a1), int(a2), 3)
            return LatticeAssessment(entry.label, "exists" if rep.ok else "unknown", rep)
        rep = Report(entry.label)
        rep.skip("lattice", "non-integral weights")
        return LatticeAssessment(entry.label, "unknown", rep)
    if cert is None:
        cert = shipped_certificate(entry)
    if cert is None and is_nilpotent(entry.algebra):
        cert = identity_certificate(entry)
    if isinstance(cert, PairRequest):
        cert, rep = build_commuting_pair_certificate(entry, cert.M1, cert.M2)
        return LatticeAssessment(entry.label, "exists" if rep.ok else "unknown", rep, certificate=cert)
    if cert is not None:
        if cert.field == NUMERIC:
            rep = verify_certificate(entry, cert)
        elif entry.extension is not None:
            rep = verify_central_extension_certificate(entry, cert)
        else:
            rep = verify_certificate(entry, cert)
        if is_nilpotent(entry.algebra):
            rep.add("qform", verify_nilpotent_qform(entry), "rational structure constants")
        return LatticeAssessment(entry.label, "exists" if rep.ok else "unknown", rep, certificate=cert)
    try:
        obs = obstruction_reciprocal(entry)
    except ObstructionInapplicable as exc:
        rep = Report(entry.label)
        rep.add("obstruction", False, str(exc))
        return LatticeAssessment(entry.label, "unknown", rep)
    rep = obs.as_report()
    return LatticeAssessment(entry.label, "none" if rep.ok else "unknown", rep, obstruction=obs)
