"""Lie algebras given by exact structure constants.

Vectors are plain lists of exact scalars in the algebra's basis; indices are
0-based internally and labels (``"e1"``, ...) are what users see.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import matrix as mx
from .errors import (DecompositionError, DimensionMismatch, NotAbelian, NotADerivation,
                     NotAnIdeal, NotClosed)

Vector = list


def _clean(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


class LieAlgebra:
    """Finite-dimensional Lie algebra with sparse structure constants.

    ``brackets`` maps index pairs ``(i, j)`` to ``{k: c}`` meaning
    ``[e_i, e_j] = sum_k c e_k``.  Pairs may be given in either order; they
    are stored with ``i < j`` and antisymmetry is implied.
    """

    def __init__(self, labels: Sequence[str], brackets: Mapping | None = None,
                 name: str = ""):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.name = name
        self.dim = len(self.labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        table: dict[tuple[int, int], dict[int, object]] = {}
        for (i, j), out in (brackets or {}).items():
            i, j = self.index(i), self.index(j)
            if i == j:
                raise ValueError(f"[{self.labels[i]},{self.labels[i]}] must vanish")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            items = out.items() if isinstance(out, Mapping) else enumerate(out)
            cur = table.setdefault((i, j), {})
            for k, c in items:
                k = self.index(k)
                c = _clean(c)
                cur[k] = cur.get(k, 0) + sign * c
        self.structure = {key: {k: c for k, c in v.items() if c != 0}
                          for key, v in table.items()}
        self.structure = {key: v for key, v in self.structure.items() if v}

    @classmethod
    def abelian(cls, dim: int, prefix: str = "e", start: int = 1) -> LieAlgebra:
        return cls([f"{prefix}{i}" for i in range(start, start + dim)], {},
                   name=f"R^{dim}")

    def index(self, key) -> int:
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < self.dim:
                raise IndexError(key)
            return key
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"no basis vector {key!r} in {self.name or self.labels}") from None

    def e(self, key) -> Vector:
        """Basis vector by label or index."""
        v = [Fraction(0)] * self.dim
        v[self.index(key)] = Fraction(1)
        return v

    def vector(self, coeffs: Mapping) -> Vector:
        v = [Fraction(0)] * self.dim
        for k, c in coeffs.items():
            v[self.index(k)] += _clean(c)
        return v

    def zero(self) -> Vector:
        return [Fraction(0)] * self.dim

    def basis_bracket(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def constant(self, i, j, k):
        """Structure constant ``c_ij^k``."""
        return self.basis_bracket(self.index(i), self.index(j)).get(self.index(k), Fraction(0))

    def format_vector(self, v: Sequence) -> str:
        terms = [f"{c}*{lab}" if c != 1 else lab for c, lab in zip(v, self.labels) if c != 0]
        return " + ".join(terms) if terms else "0"

    def bracket_table(self) -> list[tuple[str, str, str]]:
        rows = []
        for (i, j), out in sorted(self.structure.items()):
            rows.append((self.labels[i], self.labels[j],
                         self.format_vector([out.get(k, 0) for k in range(self.dim)])))
        return rows

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.labels == other.labels and self.structure == other.structure

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        body = ", ".join(f"[{a},{b}]={c}" for a, b, c in self.bracket_table())
        return f"LieAlgebra({self.name or 'dim ' + str(self.dim)}: {body or 'abelian'})"


# --- elementary operations ----------------------------------------------------

def _check_dim(L: LieAlgebra, *vs):
    for v in vs:
        if len(v) != L.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a {L.dim}-dimensional algebra")


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear expansion of ``[x, y]`` over the structure constants."""
    _check_dim(L, x, y)
    out = [Fraction(0)] * L.dim
    xs = [(i, a) for i, a in enumerate(x) if a != 0]
    ys = [(j, b) for j, b in enumerate(y) if b != 0]
    for i, a in xs:
        for j, b in ys:
            if i == j:
                continue
            for k, c in L.basis_bracket(i, j).items():
                out[k] = out[k] + a * b * c
    return out


def check_jacobi(L: LieAlgebra) -> list[tuple[str, str, str]]:
    """Basis triples ``i<j<k`` violating the Jacobi identity (empty means pass)."""
    bad = []
    for i, j, k in combinations(range(L.dim), 3):
        ei, ej, ek = L.e(i), L.e(j), L.e(k)
        total = mx.add([bracket(L, bracket(L, ei, ej), ek)],
                       [bracket(L, bracket(L, ej, ek), ei)])
        total = mx.add(total, [bracket(L, bracket(L, ek, ei), ej)])[0]
        if any(c != 0 for c in total):
            bad.append((L.labels[i], L.labels[j], L.labels[k]))
    return bad


def ad(L: LieAlgebra, x: Sequence) -> mx.Matrix:
    """Matrix of ``y -> [x, y]``; column ``j`` is ``[x, e_j]``."""
    _check_dim(L, x)
    return mx.from_columns([bracket(L, x, L.e(j)) for j in range(L.dim)])


def is_unimodular(L: LieAlgebra) -> bool:
    return all(mx.trace(ad(L, L.e(i))) == 0 for i in range(L.dim))


# --- subspaces -------------------------------------------------------------------

class Subspace:
    """Span of vectors in ``L``, kept in reduced row echelon form."""

    def __init__(self, parent: LieAlgebra, vectors: Iterable[Sequence]):
        self.parent = parent
        vecs = [list(v) for v in vectors]
        _check_dim(parent, *vecs)
        if vecs:
            red, piv = mx.rref(vecs)
            self.basis = [red[i] for i in range(len(piv))]
        else:
            self.basis = []
        self.pivots = [next(c for c, x in enumerate(v) if x != 0) for v in self.basis]

    @classmethod
    def spanned_by(cls, L: LieAlgebra, labels: Iterable) -> Subspace:
        return cls(L, [L.e(lab) for lab in labels])

    @property
    def rank(self) -> int:
        return len(self.basis)

    dim = rank

    def is_zero(self) -> bool:
        return not self.basis

    def coordinates(self, v: Sequence):
        """Coordinates in the echelon basis, or ``None`` when ``v`` is outside."""
        coords = [v[p] for p in self.pivots]
        recon = [Fraction(0)] * self.parent.dim
        for c, b in zip(coords, self.basis):
            if c != 0:
                recon = [r + c * x for r, x in zip(recon, b)]
        if any(r != x for r, x in zip(recon, v)):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(tuple(tuple(v) for v in self.basis))

    def __repr__(self):
        if not self.basis:
            return "<0>"
        return "<" + ", ".join(self.parent.format_vector(v) for v in self.basis) + ">"


def subspace_bracket(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return Subspace(L, [bracket(L, x, y) for x in a.basis for y in b.basis])


def whole(L: LieAlgebra) -> Subspace:
    return Subspace(L, [L.e(i) for i in range(L.dim)])


def is_ideal(L: LieAlgebra, s: Subspace) -> bool:
    return all(s.contains(bracket(L, L.e(i), v)) for i in range(L.dim) for v in s.basis)


def is_subalgebra(L: LieAlgebra, s: Subspace) -> bool:
    return all(s.contains(bracket(L, x, y)) for x, y in combinations(s.basis, 2))


def _stabilize(start: Subspace, step) -> list[Subspace]:
    chain = [start]
    while True:
        nxt = step(chain[-1])
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)
        if nxt.is_zero():
            return chain


def derived_series(L: LieAlgebra, within: Subspace | None = None) -> list[Subspace]:
    """``g, [g,g], [[g,g],[g,g]], ...`` until it reaches 0 or stabilizes."""
    start = within if within is not None else whole(L)
    return _stabilize(start, lambda s: subspace_bracket(L, s, s))


def lower_central_series(L: LieAlgebra, within: Subspace | None = None) -> list[Subspace]:
    """``n_0 = n, n_j = [n_{j-1}, n]`` for ``n = within`` (default: all of ``L``)."""
    start = within if within is not None else whole(L)
    return _stabilize(start, lambda s: subspace_bracket(L, s, start))


def is_solvable(L: LieAlgebra, within: Subspace | None = None) -> bool:
    return derived_series(L, within)[-1].is_zero()


def is_nilpotent(L: LieAlgebra, within: Subspace | None = None) -> bool:
    return lower_central_series(L, within)[-1].is_zero()


def center(L: LieAlgebra) -> Subspace:
    """``{x : [x, e_i] = 0 for all i}`` by exact nullspace."""
    rows = []
    for i in range(L.dim):
        # coefficient matrix of x -> [x, e_i]
        rows.extend(mx.from_columns([bracket(L, L.e(j), L.e(i)) for j in range(L.dim)]))
    return Subspace(L, mx.nullspace(rows))


# --- nilradical ----------------------------------------------------------------

@dataclass
class NilradicalReport:
    candidate: Subspace
    checks: dict[str, bool]
    extendable_by: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def verify_nilradical(L: LieAlgebra, candidate: Subspace) -> NilradicalReport:
    """Check a candidate nilradical.

    (a) ideal, (b) nilpotent, (c) contains ``[g,g]``, (d) maximal against
    adjoining any single ambient basis vector.
    """
    ideal = is_ideal(L, candidate)
    nilpotent = ideal and is_nilpotent(L, candidate)
    derived = subspace_bracket(L, whole(L), whole(L))
    extendable = []
    for i in range(L.dim):
        if candidate.contains(L.e(i)):
            continue
        bigger = Subspace(L, candidate.basis + [L.e(i)])
        if is_ideal(L, bigger) and is_nilpotent(L, bigger):
            extendable.append(L.labels[i])
    checks = {
        "ideal": ideal,
        "nilpotent": nilpotent,
        "contains_derived": candidate.contains_subspace(derived),
        "maximal": not extendable,
    }
    return NilradicalReport(candidate, checks, extendable)


# --- semidirect structure -----------------------------------------------------------

@dataclass(frozen=True)
class SplitData:
    """``g = n +_beta T`` with ``beta(t_i)`` given on an ordered basis of ``n``."""

    algebra: LieAlgebra
    n_basis: tuple
    t_basis: tuple
    beta: tuple
    n_labels: tuple = ()
    t_labels: tuple = ()

    @property
    def nilradical(self) -> Subspace:
        return Subspace(self.algebra, self.n_basis)

    @property
    def m(self) -> int:
        return len(self.n_basis)

    @property
    def k(self) -> int:
        return len(self.t_basis)

    def n_vector(self, coords: Sequence) -> Vector:
        out = self.algebra.zero()
        for c, b in zip(coords, self.n_basis):
            if c != 0:
                out = [o + c * x for o, x in zip(out, b)]
        return out

    def n_coords(self, v: Sequence):
        coords = mx.coordinates(self.n_basis, v)
        if coords is None:
            raise NotAnIdeal(f"{self.algebra.format_vector(v)} is not in n")
        return coords

    def n_structure(self) -> dict:
        """Structure constants of ``n`` in the ordered ``n_basis``."""
        out = {}
        for i, j in combinations(range(self.m), 2):
            c = self.n_coords(bracket(self.algebra, self.n_basis[i], self.n_basis[j]))
            if any(x != 0 for x in c):
                out[(i, j)] = {k: x for k, x in enumerate(c) if x != 0}
        return out

    def n_algebra(self) -> LieAlgebra:
        labels = self.n_labels or tuple(f"n{i + 1}" for i in range(self.m))
        return LieAlgebra(labels, self.n_structure(), name=f"n({self.algebra.name})")

    def beta_of(self, coeffs: Sequence) -> mx.Matrix:
        """``beta(sum_i c_i t_i)``."""
        out = mx.zeros(self.m)
        for c, b in zip(coeffs, self.beta):
            out = mx.add(out, mx.scale(c, b))
        return out


def _resolve(L: LieAlgebra, items) -> list[Vector]:
    out = []
    for it in items:
        if isinstance(it, (str, int)):
            out.append(L.e(it))
        else:
            v = [_clean(x) for x in it]
            _check_dim(L, v)
            out.append(v)
    return out


def is_derivation(L: LieAlgebra, n_basis: Sequence, D: mx.Matrix) -> bool:
    """``D[x,y] = [Dx,y] + [x,Dy]`` on all basis pairs of the subalgebra ``n``."""
    def vec(coords):
        out = L.zero()
        for c, b in zip(coords, n_basis):
            if c != 0:
                out = [o + c * x for o, x in zip(out, b)]
        return out

    m = len(n_basis)
    images = [vec([D[r][j] for r in range(m)]) for j in range(m)]
    for i, j in combinations(range(m), 2):
        br = bracket(L, n_basis[i], n_basis[j])
        coords = mx.coordinates(n_basis, br)
        if coords is None:
            return False
        lhs = vec(mx.matvec(D, coords))
        rhs = mx.add([bracket(L, images[i], n_basis[j])], [bracket(L, n_basis[i], images[j])])[0]
        if any(a != b for a, b in zip(lhs, rhs)):
            return False
    return True


def semidirect_split(L: LieAlgebra, n_basis, t_basis, *, n_labels=None,
                     t_labels=None) -> SplitData:
    """Extract ``beta(t) = ad(t)|_n`` and verify the split exactly."""
    n_vecs = _resolve(L, n_basis)
    t_vecs = _resolve(L, t_basis)
    if mx.rank(n_vecs + t_vecs) != L.dim or len(n_vecs) + len(t_vecs) != L.dim:
        raise ValueError("n and T do not form a basis of the algebra")
    n_sub = Subspace(L, n_vecs)
    if not is_ideal(L, n_sub):
        raise NotAnIdeal("n is not an ideal")
    for a, b in combinations(t_vecs, 2):
        if any(c != 0 for c in bracket(L, a, b)):
            raise NotAbelian("T is not abelian")
    betas = []
    for t in t_vecs:
        cols = [mx.coordinates(n_vecs, bracket(L, t, x)) for x in n_vecs]
        beta = mx.from_columns(cols) if cols else []
        if not is_derivation(L, n_vecs, beta):
            raise NotADerivation("beta(t) is not a derivation of n")
        betas.append(tuple(tuple(r) for r in beta))

    def lab(v):
        nz = [i for i, c in enumerate(v) if c != 0]
        return L.labels[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else L.format_vector(v)

    return SplitData(L, tuple(tuple(v) for v in n_vecs), tuple(tuple(v) for v in t_vecs),
                     tuple(betas),
                     tuple(n_labels or (lab(v) for v in n_vecs)),
                     tuple(t_labels or (lab(v) for v in t_vecs)))


# --- constructions -----------------------------------------------------------------

def central_extend(base: LieAlgebra, omega, center_label: str = "z",
                   position: int | None = None, name: str = "") -> LieAlgebra:
    """``base x_omega R z``: ``[x,y] = [x,y]_base + omega(x,y) z`` with ``z`` central."""
    from .exterior import KForm, ce_differential

    if not isinstance(omega, KForm) or omega.degree != 2:
        raise ValueError("omega must be a 2-form")
    if omega.dim != base.dim:
        raise DimensionMismatch("omega lives on a different algebra")
    if not ce_differential(base, omega).is_zero():
        raise NotClosed("d omega != 0, the extension would violate Jacobi")
    pos = base.dim if position is None else position
    labels = list(base.labels)
    labels.insert(pos, center_label)
    new = {i: i if i < pos else i + 1 for i in range(base.dim)}
    brackets: dict = {}
    for (i, j), out in base.structure.items():
        brackets[(new[i], new[j])] = {new[k]: c for k, c in out.items()}
    for (i, j), c in omega.coeffs.items():
        key = (new[i], new[j])
        cur = dict(brackets.get(key, {}))
        cur[pos] = cur.get(pos, 0) + c
        brackets[key] = cur
    return LieAlgebra(labels, brackets, name=name or f"{base.name} x_w R")


def quotient(L: LieAlgebra, drop: Iterable) -> LieAlgebra:
    """Quotient by an ideal spanned by basis vectors; the other labels survive."""
    drop_idx = sorted({L.index(d) for d in drop})
    if not is_ideal(L, Subspace(L, [L.e(i) for i in drop_idx])):
        raise NotAnIdeal("dropped basis vectors do not span an ideal")
    keep = [i for i in range(L.dim) if i not in drop_idx]
    pos = {old: new for new, old in enumerate(keep)}
    brackets = {}
    for (i, j), out in L.structure.items():
        if i in pos and j in pos:
            img = {pos[k]: c for k, c in out.items() if k in pos}
            if img:
                brackets[(pos[i], pos[j])] = img
    return LieAlgebra([L.labels[i] for i in keep], brackets, name=f"{L.name}/ideal")


def maltsev_splitting(s: SplitData, beta_s: Sequence, beta_n: Sequence) -> SplitData:
    """``M(G) = (n x_{beta_n} T) x_phi T`` with ``phi`` acting by ``beta_s`` on ``n``.

    Basis order: ``n`` (as in ``s.n_basis``), the inner copy of ``T``
    (labels ``<t>_u``), then the outer copy (labels ``<t>_s``).
    """
    if len(beta_s) != s.k or len(beta_n) != s.k:
        raise DecompositionError("need one semisimple and one nilpotent part per T generator")
    for b, bs, bn in zip(s.beta, beta_s, beta_n):
        if not mx.equal(mx.add(bs, bn), [list(r) for r in b]):
            raise DecompositionError("beta_s + beta_n != beta")
        if not mx.is_zero(mx.commutator(bs, bn)):
            raise DecompositionError("beta_s and beta_n do not commute")
    m, k = s.m, s.k
    n_lab = list(s.n_labels or (f"n{i + 1}" for i in range(m)))
    t_lab = list(s.t_labels or (f"t{i + 1}" for i in range(k)))
    labels = n_lab + [f"{t}_u" for t in t_lab] + [f"{t}_s" for t in t_lab]
    brackets: dict = {key: dict(v) for key, v in s.n_structure().items()}
    for g in range(k):
        inner, outer = m + g, m + k + g
        for j in range(m):
            col_n = {r: beta_n[g][r][j] for r in range(m) if beta_n[g][r][j] != 0}
            col_s = {r: beta_s[g][r][j] for r in range(m) if beta_s[g][r][j] != 0}
            # [t, x] = beta(t) x, stored as (x, t) with the opposite sign
            if col_n:
                brackets[(j, inner)] = {r: -c for r, c in col_n.items()}
            if col_s:
                brackets[(j, outer)] = {r: -c for r, c in col_s.items()}
    M = LieAlgebra(labels, brackets, name=f"M({s.algebra.name})")
    n_basis = [M.e(i) for i in range(m + k)]
    t_basis = [M.e(m + k + g) for g in range(k)]
    return semidirect_split(M, n_basis, t_basis)
