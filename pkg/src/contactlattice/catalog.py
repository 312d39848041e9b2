"""The algebra zoo: five-dimensional unimodular solvable contact algebras and friends.

Every entry is built from literal structure constants and then checked by
the generic machinery (Jacobi, split data, contact form) before it is
handed out.  Closed forms ``db(t) = exp(t beta)`` are stored as
:class:`~.expoly.ExpPoly` matrices; where the literature's printed form
differs from ``exp(t beta)`` the printed version is kept alongside in
``printed_db`` with a note.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from . import matrix as mx
from .algebra import (LieAlgebra, SplitData, Subspace, center, central_extend, check_jacobi,
                      derived_series, is_derivation, is_nilpotent, is_solvable, is_unimodular,
                      semidirect_split, verify_nilradical)
from .errors import InvalidParameter, SpectralShapeError, UnknownEntry
from .expoly import ExpPoly, evaluate_matrix, exp_symbolic, poly_in_t
from .exterior import KForm, is_contact
from .linalg import exp_nilpotent, exp_numeric, is_nilpotent_matrix, jordan_chevalley
from .report import Report
from .scalars import LaurentPoly, as_fraction, cos_quarter_turn, sin_quarter_turn

D_NAMES = ("D1", "D2", "D3", "D4", "D5", "D8", "D10", "D11", "D13", "D15", "D18", "D20")
LATTICE_EXISTS = ("D1", "D2", "D3", "D5", "D11", "D18", "D20")
LATTICE_NONE = ("D4", "D8", "D10", "D13", "D15")
FAMILIES = ("H", "HR", "SA", "SY")
DEFAULTS = {"D4": {"p": Fraction(2)}, "D10": {"p": Fraction(1)}, "D11": {"eps": Fraction(1)},
            "H": {"n": Fraction(1)}, "HR": {"n": Fraction(1)}, "SA": {"n": Fraction(2)},
            "SY": {"a1": Fraction(1), "a2": Fraction(1)}}


@dataclass(frozen=True)
class Extension:
    """``g = base x_omega R z``: the central-extension description of an entry."""

    base: LieAlgebra
    omega: KForm
    center_label: str


@dataclass
class CatalogEntry:
    name: str
    params: dict
    algebra: LieAlgebra
    eta: KForm | None = None
    omega: KForm | None = None
    split: SplitData | None = None
    df_split: SplitData | None = None
    db: tuple = ()
    df: tuple = ()
    printed_db: tuple = ()
    extension: Extension | None = None
    flags: dict = field(default_factory=dict)
    lattice_status: str = "unknown"
    notes: tuple = ()

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"


# --- small builders --------------------------------------------------------------

def _F(x) -> Fraction:
    return as_fraction(x)


def _algebra(name: str, dim: int, table: Mapping, labels=None) -> LieAlgebra:
    labels = labels or [f"e{i}" for i in range(1, dim + 1)]
    brackets = {}
    for (a, b), out in table.items():
        brackets[(labels[a - 1], labels[b - 1])] = {labels[k - 1]: _F(c) for k, c in out.items()}
    return LieAlgebra(labels, brackets, name=name)


def _form(L: LieAlgebra, coeffs: Mapping, degree: int = 1) -> KForm:
    return KForm(L, degree, {tuple(L.labels[i - 1] for i in (k if isinstance(k, tuple) else (k,))): _F(c)
                             for k, c in coeffs.items()})


def _E(c=1, k=0, a=0, b=0, kind="cos") -> ExpPoly:
    return ExpPoly.term(_F(c), k, _F(a), _F(b), kind)


def _diag_db(weights) -> tuple:
    n = len(weights)
    return tuple(tuple(_E(1, a=weights[i]) if i == j else ExpPoly() for j in range(n))
                 for i in range(n))


def _freeze(M) -> tuple:
    return tuple(tuple(r) for r in M)


def _split(L: LieAlgebra, n_idx, t_idx) -> SplitData:
    return semidirect_split(L, [L.labels[i - 1] for i in n_idx], [L.labels[i - 1] for i in t_idx])


# --- the D-list --------------------------------------------------------------------

def _d1(params):
    L = _algebra("D1", 5, {(2, 4): {1: 1}, (3, 5): {1: 1}})
    return CatalogEntry("D1", params, L, eta=_form(L, {1: 1}), split=_split(L, range(1, 6), ()),
                        lattice_status="exists")


def _d2_d3(name: str, params):
    if name == "D2":
        base_table = {(3, 5): {2: 1}}
    else:
        base_table = {(3, 5): {2: 1}, (4, 5): {3: 1}}
    labels = ["e2", "e3", "e4", "e5"]
    base = LieAlgebra(labels, {(labels[a - 2], labels[b - 2]): {labels[k - 2]: _F(c) for k, c in out.items()}
                               for (a, b), out in base_table.items()}, name=f"b({name})")
    omega = KForm(base, 2, {("e3", "e4"): 1, ("e2", "e5"): 1})
    L = central_extend(base, omega, center_label="e1", position=0, name=name)
    t = poly_in_t
    if name == "D2":
        df = ((_E(), t([0, 0, Fraction(1, 2)]), ExpPoly(), t([0, -1])),
              (ExpPoly(), _E(), ExpPoly(), ExpPoly()),
              (ExpPoly(), ExpPoly(), _E(), ExpPoly()),
              (ExpPoly(), t([0, -1]), ExpPoly(), _E()))
        printed, notes = (), ()
    else:
        df = ((_E(), t([0, 0, Fraction(1, 2)]), t([0, 0, 0, Fraction(-1, 6)]), t([0, -1])),
              (ExpPoly(), _E(), t([0, -1]), ExpPoly()),
              (ExpPoly(), ExpPoly(), _E(), ExpPoly()),
              (ExpPoly(), t([0, -1]), t([0, 0, Fraction(1, 2)]), _E()))
        printed = tuple(tuple(x if (i, j) != (3, 2) else ExpPoly() for j, x in enumerate(r))
                        for i, r in enumerate(df))
        notes = ("printed df(t e5) omits the (4,3) entry t^2/2 of exp(t ad e5); the stored "
                 "closed form includes it",)
    entry = CatalogEntry(name, params, L, eta=_form(L, {1: 1}),
                         split=_split(L, range(1, 6), ()),
                         df_split=_split(L, (1, 3, 4, 2), (5,)), df=(df,),
                         printed_db=(printed,) if printed else (),
                         extension=Extension(base, omega, "e1"), lattice_status="exists",
                         notes=notes)
    return entry


def _d4(params):
    p = params["p"]
    if p == -1:
        raise InvalidParameter("D4 requires p != -1")
    L = _algebra("D4", 5, {(2, 3): {1: 1}, (1, 5): {1: 1 + p}, (2, 5): {2: 1}, (3, 5): {3: p},
                           (4, 5): {4: -2 * (p + 1)}})
    w = (-(p + 1), -1, -p, 2 * (p + 1))
    return CatalogEntry("D4", params, L, eta=_form(L, {1: 1, 4: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(_diag_db(w),), lattice_status="none")


def _d5(params):
    labels = ["e2", "e3", "e4", "e5"]
    base = LieAlgebra(labels, {("e2", "e5"): {"e2": 1}, ("e3", "e5"): {"e3": -1}}, name="b(D5)")
    omega = KForm(base, 2, {("e2", "e3"): 1, ("e4", "e5"): 1})
    L = central_extend(base, omega, center_label="e1", position=0, name="D5")
    db = ((_E(), ExpPoly(), ExpPoly(), poly_in_t([0, -1])),
          (ExpPoly(), _E(a=-1), ExpPoly(), ExpPoly()),
          (ExpPoly(), ExpPoly(), _E(a=1), ExpPoly()),
          (ExpPoly(), ExpPoly(), ExpPoly(), _E()))
    return CatalogEntry("D5", params, L, eta=_form(L, {1: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(db,), extension=Extension(base, omega, "e1"), lattice_status="exists")


def _d8(params):
    L = _algebra("D8", 5, {(2, 3): {1: 1}, (1, 5): {1: 2}, (2, 5): {2: 1, 3: 1}, (3, 5): {3: 1},
                           (4, 5): {4: -4}})
    db = [list(r) for r in _diag_db((-2, -1, -1, 4))]
    db[2][1] = _E(-1, k=1, a=-1)
    return CatalogEntry("D8", params, L, eta=_form(L, {1: 1, 4: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(_freeze(db),), lattice_status="none")


def _d10(params):
    p = params["p"]
    if p == 0:
        raise InvalidParameter("D10 requires p != 0")
    L = _algebra("D10", 5, {(2, 3): {1: 1}, (1, 5): {1: 2 * p}, (2, 5): {2: p, 3: 1},
                            (3, 5): {2: -1, 3: p}, (4, 5): {4: -4 * p}})
    db = [list(r) for r in _diag_db((-2 * p, 0, 0, 4 * p))]
    db[1][1] = _E(1, a=-p, b=1, kind="cos")
    db[1][2] = _E(1, a=-p, b=1, kind="sin")
    db[2][1] = _E(-1, a=-p, b=1, kind="sin")
    db[2][2] = _E(1, a=-p, b=1, kind="cos")
    return CatalogEntry("D10", params, L, eta=_form(L, {1: 1, 4: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(_freeze(db),), lattice_status="none")


def _d11(params):
    eps = params["eps"]
    if eps not in (1, -1):
        raise InvalidParameter("D11 requires eps = +1 or -1")
    labels = ["e2", "e3", "e4", "e5"]
    base = LieAlgebra(labels, {("e2", "e5"): {"e3": 1}, ("e3", "e5"): {"e2": -1}}, name="b(D11)")
    omega = KForm(base, 2, {("e2", "e3"): 1, ("e4", "e5"): eps})
    L = central_extend(base, omega, center_label="e1", position=0, name="D11")
    cos, sin = _E(1, b=1, kind="cos"), _E(1, b=1, kind="sin")
    db = ((_E(), ExpPoly(), ExpPoly(), poly_in_t([0, -eps])),
          (ExpPoly(), cos, sin, ExpPoly()),
          (ExpPoly(), -sin, cos, ExpPoly()),
          (ExpPoly(), ExpPoly(), ExpPoly(), _E()))
    printed = ((_E(), ExpPoly(), ExpPoly(), poly_in_t([0, eps])),
               (ExpPoly(), cos, -sin, ExpPoly()),
               (ExpPoly(), sin, cos, ExpPoly()),
               (ExpPoly(), ExpPoly(), ExpPoly(), _E()))
    notes = ("printed db(t e5) rotates the <e2,e3> plane the opposite way from exp(t beta) for the "
             "printed beta; the stored closed form is exp(t beta)",
             "the (1,4) entry of exp(t beta) is -eps*t because [e5,e4] = -eps*e1",
             "the base 2-form is e2*^e3* + eps*e4*^e5* so that [e4,e5] = eps*e1")
    return CatalogEntry("D11", params, L, eta=_form(L, {1: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(db,), printed_db=(printed,), extension=Extension(base, omega, "e1"),
                        lattice_status="exists", notes=notes)


def _d13(params):
    h = Fraction(1, 2)
    L = _algebra("D13", 5, {(2, 3): {1: 1}, (1, 5): {1: -h}, (2, 5): {2: -3 * h},
                            (3, 5): {3: 1, 4: 1}, (4, 5): {4: 1}})
    db = [list(r) for r in _diag_db((h, 3 * h, -1, -1))]
    db[3][2] = _E(-1, k=1, a=-1)
    return CatalogEntry("D13", params, L, eta=_form(L, {1: 1, 4: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(_freeze(db),), lattice_status="none")


def _d15(params):
    t = Fraction(1, 3)
    L = _algebra("D15", 5, {(2, 4): {1: 1}, (3, 4): {2: 1}, (1, 5): {1: 2 * t}, (2, 5): {2: -t},
                            (3, 5): {3: -4 * t}, (4, 5): {4: 1}})
    notes = ("[e2,e5] = -e2/3 (weights -2/3, 1/3, 4/3, -1 of beta(e5)); the +e2/3 variant "
             "violates Jacobi and unimodularity",
             "[e3,e5] = -4/3 e3 without the stray parameter p",
             "contact form e1* + e3* (the listed 'e1* + e3' is read as a covector)")
    return CatalogEntry("D15", params, L, eta=_form(L, {1: 1, 3: 1}), split=_split(L, (1, 2, 3, 4), (5,)),
                        db=(_diag_db((-2 * t, t, 4 * t, -1)),), lattice_status="none", notes=notes)


def _d18(params):
    L = _algebra("D18", 5, {(1, 4): {1: 1}, (3, 4): {3: -1}, (2, 5): {2: 1}, (3, 5): {3: -1}})
    return CatalogEntry("D18", params, L, eta=_form(L, {1: 1, 2: 1, 3: 1}),
                        split=_split(L, (1, 2, 3), (4, 5)),
                        db=(_diag_db((-1, 0, 1)), _diag_db((0, -1, 1))), lattice_status="exists")


D20_ETA = {1: 1, 2: 1}


def _d20(params):
    L = _algebra("D20", 5, {(1, 4): {1: -2}, (2, 4): {2: 1}, (3, 4): {3: 1}, (2, 5): {3: -1},
                            (3, 5): {2: 1}})
    rot = ((_E(), ExpPoly(), ExpPoly()),
           (ExpPoly(), _E(1, b=1), _E(-1, b=1, kind="sin")),
           (ExpPoly(), _E(1, b=1, kind="sin"), _E(1, b=1)))
    notes = ("no contact form is listed; e1* + e2* is used and verified contact",)
    return CatalogEntry("D20", params, L, eta=_form(L, D20_ETA), split=_split(L, (1, 2, 3), (4, 5)),
                        db=(_diag_db((2, -1, -1)), rot), lattice_status="exists", notes=notes)


# --- families ----------------------------------------------------------------------

def heisenberg_algebra(n: int) -> LieAlgebra:
    """``H_{2n+1}``: ``[e_k, e_{n+k}] = e1`` for ``k = 2..n+1``."""
    if n < 1:
        raise InvalidParameter("Heisenberg algebras need n >= 1")
    return _algebra(f"H{2 * n + 1}", 2 * n + 1, {(k, n + k): {1: 1} for k in range(2, n + 2)})


def _h(params):
    n = int(params["n"])
    L = heisenberg_algebra(n)
    L.name = f"H({n})"
    return CatalogEntry("H", params, L, eta=_form(L, {1: 1}), split=_split(L, range(1, 2 * n + 2), ()),
                        lattice_status="exists")


def _hr(params):
    n = int(params["n"])
    H = heisenberg_algebra(n)
    labels = list(H.labels) + [f"e{2 * n + 2}"]
    L = LieAlgebra(labels, {(H.labels[i], H.labels[j]): {H.labels[k]: c for k, c in out.items()}
                            for (i, j), out in H.structure.items()}, name=f"HR({n})")
    omega = None
    if n == 1:
        omega = KForm(L, 2, {("e1", "e3"): 1, ("e4", "e2"): 1})
    return CatalogEntry("HR", params, L, omega=omega, split=_split(L, range(1, 2 * n + 3), ()),
                        lattice_status="exists")


def sa_labels(n: int) -> tuple[list[str], list]:
    """Basis of ``R^n x| sl(n)`` inside ``(n+1) x (n+1)`` matrices."""
    sep = "_" if n + 1 >= 10 else ""
    labels, mats = [], []

    def unit(i, j):
        m = mx.zeros(n + 1)
        m[i][j] = Fraction(1)
        return m

    for i in range(n):
        for j in range(n):
            if i != j:
                labels.append(f"e{i + 1}{sep}{j + 1}")
                mats.append(unit(i, j))
    for i in range(n - 1):
        labels.append(f"h{i + 1}")
        mats.append(mx.sub(unit(i, i), unit(i + 1, i + 1)))
    for i in range(n):
        labels.append(f"e{i + 1}{sep}{n + 1}")
        mats.append(unit(i, n))
    return labels, mats


def _sa_coords(n: int, labels, M) -> dict:
    sep = "_" if n + 1 >= 10 else ""
    out = {}
    acc = Fraction(0)
    for i in range(n):
        for j in range(n + 1):
            if i != j and M[i][j] != 0:
                out[f"e{i + 1}{sep}{j + 1}"] = M[i][j]
        if i < n - 1:
            acc += M[i][i]
            if acc != 0:
                out[f"h{i + 1}"] = acc
    return out


def sa_algebra(n: int) -> CatalogEntry:
    """``R^n x| sl(n, R)`` with ``eta = sum_i e*_{i,i+1}``; not solvable."""
    n = int(n)
    if n < 2:
        raise InvalidParameter("SA(n) needs n >= 2")
    labels, mats = sa_labels(n)
    brackets = {}
    for a, b in combinations(range(len(labels)), 2):
        c = _sa_coords(n, labels, mx.commutator(mats[a], mats[b]))
        if c:
            brackets[(labels[a], labels[b])] = c
    L = LieAlgebra(labels, brackets, name=f"SA({n})")
    sep = "_" if n + 1 >= 10 else ""
    eta = KForm(L, 1, {(f"e{i}{sep}{i + 1}",): 1 for i in range(1, n + 1)})
    return CatalogEntry("SA", {"n": Fraction(n)}, L, eta=eta, lattice_status="out-of-scope")


def sy_algebra(a1, a2) -> CatalogEntry:
    """``(H3 + H3) x|_beta R`` with weights ``a1, a2, a3 = a1 + a2``."""
    a1, a2 = _F(a1), _F(a2)
    a3 = a1 + a2
    labels = ["X1", "X2", "X3", "Z1", "Z2", "Z3", "A"]
    brackets = {("X1", "X2"): {"X3": 1}, ("Z1", "Z2"): {"Z3": 1}}
    for j, a in enumerate((a1, a2, a3), start=1):
        brackets[("A", f"X{j}")] = {f"X{j}": a}
        brackets[("A", f"Z{j}")] = {f"Z{j}": -a}
    L = LieAlgebra(labels, brackets, name=f"SY({a1},{a2})")
    split = semidirect_split(L, labels[:6], ["A"])
    status = "exists" if a1.denominator == 1 and a2.denominator == 1 else "unknown"
    return CatalogEntry("SY", {"a1": a1, "a2": a2}, L, split=split,
                        db=(_diag_db((a1, a2, a3, -a1, -a2, -a3)),), lattice_status=status)


_BUILDERS = {"D1": _d1, "D2": lambda p: _d2_d3("D2", p), "D3": lambda p: _d2_d3("D3", p),
             "D4": _d4, "D5": _d5, "D8": _d8, "D10": _d10, "D11": _d11, "D13": _d13,
             "D15": _d15, "D18": _d18, "D20": _d20, "H": _h, "HR": _hr,
             "SA": lambda p: sa_algebra(p["n"]), "SY": lambda p: sy_algebra(p["a1"], p["a2"])}

_NAME_RE = re.compile(r"^\s*([A-Za-z]+\d*)\s*(?:\((.*)\))?\s*$")


def parse_name(spec: str) -> tuple[str, dict]:
    """``"D4(p=3)"`` -> ``("D4", {"p": 3})``; ``"H(2)"`` -> ``("H", {"n": 2})``."""
    m = _NAME_RE.match(spec)
    if not m:
        raise UnknownEntry(spec)
    name, inner = m.group(1).upper(), m.group(2)
    params = {}
    if inner:
        for part in inner.split(","):
            if "=" in part:
                k, v = part.split("=", 1)
                params[k.strip()] = _F(v)
            else:
                params["n"] = _F(part)
    return name, params


def _normalize(name: str, params: Mapping | None) -> tuple[str, tuple]:
    if name not in _BUILDERS:
        base, extra = parse_name(name)
        if base not in _BUILDERS:
            raise UnknownEntry(f"unknown catalog entry {name!r}")
        name, params = base, {**extra, **(params or {})}
    merged = dict(DEFAULTS.get(name, {}))
    for k, v in (params or {}).items():
        if k not in merged:
            raise InvalidParameter(f"{name} takes no parameter {k!r}")
        merged[k] = _F(v)
    return name, tuple(sorted(merged.items()))


@lru_cache(maxsize=None)
def _get(name: str, params: tuple) -> CatalogEntry:
    entry = _BUILDERS[name](dict(params))
    if not entry.params and params:
        entry.params = dict(params)
    entry.flags = expected_flags(entry)
    return entry


def get(name: str, params: Mapping | None = None) -> CatalogEntry:
    """Catalog entry by name, e.g. ``get("D4", {"p": 3})`` or ``get("H(2)")``."""
    key, frozen = _normalize(name, params)
    if key == "SA" and dict(frozen)["n"] < 2:
        raise InvalidParameter("SA(n) needs n >= 2")
    return _get(key, frozen)


def d_list() -> list[CatalogEntry]:
    return [get(n) for n in D_NAMES]


def expected_flags(entry: CatalogEntry) -> dict:
    """Flags recorded with each entry (independently of the generic checks)."""
    name = entry.name
    nilpotent = name in ("D1", "D2", "D3", "H", "HR") or (
        name == "SY" and entry.params["a1"] == 0 and entry.params["a2"] == 0)
    return {
        "unimodular": True,
        "solvable": name != "SA",
        "nilpotent": nilpotent,
        "contact": entry.eta is not None,
    }


def derived_flags(entry: CatalogEntry) -> dict:
    L = entry.algebra
    return {
        "unimodular": is_unimodular(L),
        "solvable": is_solvable(L),
        "nilpotent": is_nilpotent(L),
        "contact": entry.eta is not None and L.dim % 2 == 1 and is_contact(L, entry.eta),
    }


# --- Appendix-style consistency ---------------------------------------------------

def _is_diagonal(M) -> bool:
    return all(M[i][j] == 0 for i in range(len(M)) for j in range(len(M)) if i != j)


def exp_at_quarter_turn(beta, j: int, symbol: str = "pi"):
    """Exact ``exp(t beta)`` at ``t = j*pi/2`` when the semisimple part has ``S^3 = -S``.

    ``exp(tS) = I + sin(t) S + (1 - cos(t)) S^2``; the nilpotent factor is a
    finite series in ``t``, a Laurent polynomial in ``pi``.
    """
    jc = jordan_chevalley(beta)
    S = [list(r) for r in jc.S]
    N = [list(r) for r in jc.N]
    n = len(S)
    S2 = mx.matmul(S, S)
    if not mx.equal(mx.matmul(S2, S), mx.scale(-1, S)):
        raise SpectralShapeError("semisimple part does not satisfy S^3 = -S")
    s, c = sin_quarter_turn(j), cos_quarter_turn(j)
    es = mx.add(mx.add(mx.identity(n), mx.scale(s, S)), mx.scale(1 - c, S2))
    t = LaurentPoly({1: Fraction(j, 2)}, symbol)
    en = exp_nilpotent([[t * x for x in r] for r in N])
    return mx.matmul([[LaurentPoly.constant(x, symbol) for x in r] for r in es], en)


def _closed_forms(entry: CatalogEntry):
    if entry.db:
        return entry.split, entry.db
    if entry.df:
        return entry.df_split, entry.df
    return entry.split, ()


def _max_rel(a, b) -> float:
    worst = 0.0
    for r, s in zip(a, b):
        for x, y in zip(r, s):
            worst = max(worst, abs(x - y) / max(1.0, abs(y)))
    return worst


def _split_parts_match(beta, C) -> bool:
    """Closed form equals ``exp(t S) exp(t N)`` for diagonal ``S``; the ``N`` factor is checked exactly."""
    S, N = jordan_chevalley(beta).as_lists()
    m = len(beta)
    powers = [mx.identity(m)]
    for _ in range(m):
        powers.append(mx.matmul(powers[-1], N))
    fact = [1]
    for j in range(1, m + 1):
        fact.append(fact[-1] * j)
    P = [[poly_in_t([powers[k][i][j] / fact[k] for k in range(m + 1)]) for j in range(m)] for i in range(m)]
    for t in (1, 2):
        ex = exp_nilpotent(mx.scale(Fraction(t), N))
        if any(P[i][j].at_rational(t) != ex[i][j] for i in range(m) for j in range(m)):
            return False
    return all(ExpPoly() + C[i][j] == _E(1, a=S[i][i]) * P[i][j] for i in range(m) for j in range(m))


def appendix_consistency(entry: CatalogEntry, closed=None, tol: float = 1e-10) -> Report:
    """Check ``db(t) = exp(t beta)`` for every T generator of the entry.

    Exact where the closed form allows it (polynomial entries at ``t = 1, 2``,
    quarter turns, and the symbolic identity); numeric at ``t = 1/2, 1, 2``.
    """
    rep = Report(entry.label)
    split, forms = _closed_forms(entry)
    if closed is not None:
        forms = closed
    if split is None or split.k == 0:
        rep.skip("appendix", "no abelian complement")
        return rep
    if not forms:
        rep.skip("appendix", "no closed form stored")
        return rep
    for g, (beta, C) in enumerate(zip(split.beta, forms)):
        gen = split.t_labels[g]
        beta = [list(r) for r in beta]
        rep.add(f"{gen}:derivation", is_derivation(split.algebra, split.n_basis, beta))
        C = [list(r) for r in C]
        try:
            sym = exp_symbolic(beta)
            same = all(ExpPoly() + x == ExpPoly() + y for r, s in zip(sym, C) for x, y in zip(r, s))
            rep.add(f"{gen}:symbolic", same, "exp(t beta) as exponential polynomials")
        except SpectralShapeError as exc:
            rep.skip(f"{gen}:symbolic", str(exc))
        if is_nilpotent_matrix(beta):
            for t in (1, 2):
                ex = exp_nilpotent(mx.scale(Fraction(t), beta))
                ok = all((ExpPoly() + y).at_rational(t) == x for r, s in zip(ex, C) for x, y in zip(r, s))
                rep.add(f"{gen}:exact_t={t}", ok)
        elif _is_diagonal(beta):
            ok = all((ExpPoly() + C[i][j]) == (_E(1, a=beta[i][i]) if i == j else ExpPoly())
                     for i in range(len(C)) for j in range(len(C)))
            rep.add(f"{gen}:exact_diagonal", ok, "entries e^{w t} with rational w")
        elif _is_diagonal(jordan_chevalley(beta).S):
            rep.add(f"{gen}:exact_jordan", _split_parts_match(beta, C),
                    "diag(e^{w t}) * exp(t beta_n), exp(t beta_n) exact at t = 1, 2")
        else:
            try:
                for j in (1, 2):
                    ex = exp_at_quarter_turn(beta, j)
                    ok = all((ExpPoly() + y).at_quarter_turn(j) == x
                             for r, s in zip(ex, C) for x, y in zip(r, s))
                    rep.add(f"{gen}:exact_t={j}pi/2", ok)
            except (SpectralShapeError, ValueError):
                pass
        for t in (0.5, 1.0, 2.0):
            num = exp_numeric([[float(x) * t for x in r] for r in beta], tol=tol)
            closed_val = evaluate_matrix(C, t)
            err = _max_rel(closed_val, num.tolist())
            rep.add(f"{gen}:numeric_t={t}", err <= tol, residual=err)
    return rep


# --- entry-level verification ----------------------------------------------------------

def verify_entry(entry: CatalogEntry, tol: float = 1e-10) -> Report:
    """Jacobi, flags, contact, nilradical and closed forms of one entry."""
    rep = Report(entry.label)
    L = entry.algebra
    bad = check_jacobi(L)
    rep.add("jacobi", not bad, f"violations at {bad}" if bad else "")
    derived = derived_flags(entry)
    for key, want in entry.flags.items():
        rep.add(f"flag:{key}", derived[key] == want, f"expected {want}, derived {derived[key]}")
    if entry.eta is not None:
        rep.add("contact", is_contact(L, entry.eta))
    for which in ("split", "df_split"):
        sp = getattr(entry, which)
        if sp is None:
            continue
        if which == "split":
            nr = verify_nilradical(L, sp.nilradical)
            rep.add("nilradical", nr.ok, ", ".join(nr.failures()))
    rep.extend(appendix_consistency(entry, tol=tol))
    return rep


def center_of(entry: CatalogEntry) -> Subspace:
    return center(entry.algebra)


def derived_length(entry: CatalogEntry) -> int:
    return len(derived_series(entry.algebra)) - 1
