"""Line-oriented text format for catalog entries.

::

    # comment
    algebra D4 dim=5
    labels e1 e2 e3 e4 e5
    bracket 2 3 -> 1:1/1
    contact 1:1/1 4:1/1
    omega 1 3 1/1
    split n=1,2,3,4 t=5
    beta 5 1 1 -3/1
    flag lattice=none
    end

Indices are 1-based positions in ``labels``.  ``beta <gen> <row> <col>``
gives an entry of ``beta(e_gen)`` on the ordered ``n`` basis of the most
recent ``split`` line; ``split kind=df`` introduces the secondary split.
Only exact rationals appear; a float anywhere is a parse error.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import matrix as mx
from .algebra import (LieAlgebra, SplitData, check_jacobi, is_nilpotent, is_solvable,
                      is_unimodular, semidirect_split)
from .errors import ContactLatticeError, ParseError
from .exterior import KForm, is_contact
from .report import Report

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rat(tok: str, line: int, path) -> Fraction:
    if not _RAT.match(tok):
        raise ParseError(f"expected an exact rational num/den, got {tok!r}", line, path)
    q = Fraction(tok)
    return q


def _fmt(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass
class SplitRecord:
    kind: str
    n: list[int]
    t: list[int]
    beta: dict = field(default_factory=dict)  # gen -> {(row, col): value}
    line: int = 0


@dataclass
class ParsedEntry:
    name: str
    dim: int
    labels: list[str]
    brackets: dict = field(default_factory=dict)  # (i, j) -> {k: c}, 0-based
    bracket_lines: dict = field(default_factory=dict)
    contact: dict | None = None
    omega: dict | None = None
    splits: list[SplitRecord] = field(default_factory=list)
    flags: dict = field(default_factory=dict)
    line: int = 0

    def algebra(self) -> LieAlgebra:
        return LieAlgebra(self.labels, self.brackets, name=self.name)

    def eta(self, L: LieAlgebra | None = None) -> KForm | None:
        if self.contact is None:
            return None
        L = L or self.algebra()
        return KForm(L, 1, {(i,): c for i, c in self.contact.items()})

    def omega_form(self, L: LieAlgebra | None = None) -> KForm | None:
        if self.omega is None:
            return None
        L = L or self.algebra()
        return KForm(L, 2, dict(self.omega))

    def split_data(self, kind: str = "nilradical", L: LieAlgebra | None = None) -> SplitData | None:
        L = L or self.algebra()
        for s in self.splits:
            if s.kind == kind:
                return semidirect_split(L, s.n, s.t)
        return None

    def beta_matrices(self, kind: str = "nilradical") -> list | None:
        for s in self.splits:
            if s.kind == kind:
                m = len(s.n)
                out = []
                for g in s.t:
                    M = mx.zeros(m)
                    for (r, c), v in s.beta.get(g, {}).items():
                        M[r][c] = v
                    out.append(M)
                return out
        return None


def parse_catalog(text: str, path: str | None = None) -> list[ParsedEntry]:
    entries: list[ParsedEntry] = []
    cur: ParsedEntry | None = None
    split: SplitRecord | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        head = toks[0]
        if head == "algebra":
            if cur is not None:
                raise ParseError("missing 'end' before new 'algebra'", lineno, path)
            if len(toks) != 3 or not toks[2].startswith("dim="):
                raise ParseError("expected 'algebra <name> dim=<n>'", lineno, path)
            try:
                dim = int(toks[2][4:])
            except ValueError:
                raise ParseError(f"bad dimension {toks[2]!r}", lineno, path) from None
            if dim <= 0:
                raise ParseError("dimension must be positive", lineno, path)
            cur = ParsedEntry(toks[1], dim, [f"e{i}" for i in range(1, dim + 1)], line=lineno)
            split = None
            continue
        if cur is None:
            raise ParseError(f"{head!r} outside an algebra record", lineno, path)

        def idx(tok: str) -> int:
            try:
                i = int(tok)
            except ValueError:
                raise ParseError(f"expected a basis index, got {tok!r}", lineno, path) from None
            if not 1 <= i <= cur.dim:
                raise ParseError(f"index {i} out of range 1..{cur.dim}", lineno, path)
            return i - 1

        def pairs(tokens):
            out = {}
            for tok in tokens:
                if ":" not in tok:
                    raise ParseError(f"expected <index>:<num>/<den>, got {tok!r}", lineno, path)
                a, b = tok.split(":", 1)
                out[idx(a)] = out.get(idx(a), Fraction(0)) + _rat(b, lineno, path)
            return out

        if head == "labels":
            if len(toks) - 1 != cur.dim or len(set(toks[1:])) != cur.dim:
                raise ParseError("labels must list dim distinct names", lineno, path)
            cur.labels = toks[1:]
        elif head == "bracket":
            if len(toks) < 5 or toks[3] != "->":
                raise ParseError("expected 'bracket <i> <j> -> <k>:<q> ...'", lineno, path)
            i, j = idx(toks[1]), idx(toks[2])
            if i == j:
                raise ParseError("bracket of a basis vector with itself", lineno, path)
            key = (i, j)
            if key in cur.brackets or (j, i) in cur.brackets:
                raise ParseError(f"duplicate bracket {toks[1]} {toks[2]}", lineno, path)
            cur.brackets[key] = pairs(toks[4:])
            cur.bracket_lines[(min(i, j), max(i, j))] = lineno
        elif head == "contact":
            cur.contact = pairs(toks[1:])
        elif head == "omega":
            if len(toks) != 4:
                raise ParseError("expected 'omega <i> <j> <num>/<den>'", lineno, path)
            cur.omega = cur.omega or {}
            cur.omega[(idx(toks[1]), idx(toks[2]))] = _rat(toks[3], lineno, path)
        elif head == "split":
            kw = {}
            for tok in toks[1:]:
                if "=" not in tok:
                    raise ParseError(f"expected key=value, got {tok!r}", lineno, path)
                k, v = tok.split("=", 1)
                kw[k] = v
            if "n" not in kw or "t" not in kw:
                raise ParseError("split needs n= and t=", lineno, path)
            ns = [idx(v) for v in kw["n"].split(",") if v]
            ts = [idx(v) for v in kw["t"].split(",") if v]
            split = SplitRecord(kw.get("kind", "nilradical"), ns, ts, line=lineno)
            cur.splits.append(split)
        elif head == "beta":
            if split is None:
                raise ParseError("beta before any split", lineno, path)
            if len(toks) != 5:
                raise ParseError("expected 'beta <gen> <row> <col> <num>/<den>'", lineno, path)
            g = idx(toks[1])
            if g not in split.t:
                raise ParseError(f"e{g + 1} is not a generator of the split", lineno, path)
            r, c = int(toks[2]) - 1, int(toks[3]) - 1
            if not (0 <= r < len(split.n) and 0 <= c < len(split.n)):
                raise ParseError("beta entry outside the n block", lineno, path)
            split.beta.setdefault(g, {})[(r, c)] = _rat(toks[4], lineno, path)
        elif head == "flag":
            if len(toks) != 2 or "=" not in toks[1]:
                raise ParseError("expected 'flag <key>=<value>'", lineno, path)
            k, v = toks[1].split("=", 1)
            cur.flags[k] = v
        elif head == "end":
            entries.append(cur)
            cur, split = None, None
        else:
            raise ParseError(f"unknown record {head!r}", lineno, path)
    if cur is not None:
        raise ParseError("missing 'end' at end of file", len(text.splitlines()), path)
    return entries


def load_catalog(path) -> list[ParsedEntry]:
    p = Path(path)
    return parse_catalog(p.read_text(encoding="utf-8"), str(p))


def dump_entry(entry) -> str:
    """Serialize a :class:`~.catalog.CatalogEntry`."""
    L = entry.algebra
    out = [f"algebra {entry.label.replace(' ', '')} dim={L.dim}", "labels " + " ".join(L.labels)]
    for (i, j), img in sorted(L.structure.items()):
        rhs = " ".join(f"{k + 1}:{_fmt(c)}" for k, c in sorted(img.items()))
        out.append(f"bracket {i + 1} {j + 1} -> {rhs}")
    if entry.eta is not None:
        out.append("contact " + " ".join(f"{i + 1}:{_fmt(c)}" for (i,), c in sorted(entry.eta.coeffs.items())))
    if entry.omega is not None:
        for (i, j), c in sorted(entry.omega.coeffs.items()):
            out.append(f"omega {i + 1} {j + 1} {_fmt(c)}")
    for kind, sp in (("nilradical", entry.split), ("df", entry.df_split)):
        if sp is None:
            continue
        n_idx = [v.index(1) + 1 for v in sp.n_basis]
        t_idx = [v.index(1) + 1 for v in sp.t_basis]
        head = f"split n={','.join(map(str, n_idx))} t={','.join(map(str, t_idx))}"
        out.append(head if kind == "nilradical" else f"split kind=df {head[6:]}")
        for g, beta in zip(t_idx, sp.beta):
            for r, row in enumerate(beta):
                for c, v in enumerate(row):
                    if v != 0:
                        out.append(f"beta {g} {r + 1} {c + 1} {_fmt(v)}")
    for k, v in sorted(entry.flags.items()):
        out.append(f"flag {k}={str(v).lower()}")
    out.append(f"flag lattice={entry.lattice_status}")
    out.append("end")
    return "\n".join(out)


def dump_catalog(entries) -> str:
    return "# contactlattice catalog, exact rationals only\n\n" + "\n\n".join(
        dump_entry(e) for e in entries) + "\n"


def verify_parsed(p: ParsedEntry, path: str | None = None) -> Report:
    """Generic checks on a record read from a file, citing line numbers on failure."""
    where = f"{path or '<catalog>'}:"
    rep = Report(p.name)
    L = p.algebra()
    bad = check_jacobi(L)
    details = []
    for a, b, c in bad:
        i, j, k = L.index(a), L.index(b), L.index(c)
        lines = sorted({p.bracket_lines[q] for q in ((i, j), (j, k), (i, k)) if q in p.bracket_lines})
        details.append(f"({a},{b},{c}) brackets at {where}" + ",".join(map(str, lines)))
    rep.add("jacobi", not bad, "; ".join(details))
    derived = {"unimodular": is_unimodular(L), "solvable": is_solvable(L),
               "nilpotent": is_nilpotent(L)}
    eta = p.eta(L)
    if eta is not None:
        ok = L.dim % 2 == 1 and is_contact(L, eta)
        derived["contact"] = ok
        rep.add("contact", ok, "" if ok else f"contact line of record at {where}{p.line}")
    for key, value in sorted(p.flags.items()):
        if key in derived:
            want = value.lower() == "true"
            rep.add(f"flag:{key}", derived[key] == want,
                    f"file says {value}, derived {str(derived[key]).lower()}")
    for s in p.splits:
        try:
            sd = semidirect_split(L, [L.e(i) for i in s.n], [L.e(i) for i in s.t])
        except ContactLatticeError as exc:
            rep.add(f"split:{s.kind}", False, f"{where}{s.line}: {exc}")
            continue
        rep.add(f"split:{s.kind}", True)
        if s.beta or s.t:
            stored = p.beta_matrices(s.kind)
            same = all([list(r) for r in a] == [list(r) for r in b] for a, b in zip(stored, sd.beta))
            rep.add(f"split:{s.kind}:beta", same,
                    "" if same else f"beta lines after {where}{s.line} disagree with the brackets")
    return rep


def data_path() -> Path:
    return Path(__file__).with_name("data") / "catalog.txt"
