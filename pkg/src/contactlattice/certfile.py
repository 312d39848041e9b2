"""Text format for lattice certificates.

::

    cert D5 field=5 symbol=t0 unit=3/2+1/2r
    basiscol 2 deg=0 2:1/1 3:0+1/5r
    tgen 1/1
    claim 1 2 3 -1
    claimn 1 1 4 -1/1
    pair X2 X3 1/1
    end

``field`` is ``rational``, ``quarter-turn``, ``numeric`` or the integer
``d`` of ``Q(sqrt d)``; ``<a>+<b>r`` stands for ``a + b*sqrt(d)``.  Columns
and matrix entries are 1-based; unlisted entries are zero.  A ``numeric``
record only lists the two integer matrices of a commuting pair.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from . import matrix as mx
from .errors import ParseError
from .lattice import (NUMERIC, QUADRATIC, QUARTER_TURN, RATIONAL, LatticeCertificate, PairRequest,
                      build_d11_certificate)
from .scalars import QuadraticNumber

_Q = r"[+-]?\d+(?:/\d+)?"
_SURD = re.compile(rf"^({_Q})(?:([+-]\d+(?:/\d+)?)r)?$")


def _rat(tok: str, line: int, path) -> Fraction:
    if not re.fullmatch(_Q, tok):
        raise ParseError(f"expected an exact rational, got {tok!r}", line, path)
    return Fraction(tok)


def _scalar(tok: str, d: int | None, line: int, path):
    m = _SURD.match(tok)
    if not m:
        raise ParseError(f"expected <a> or <a>+<b>r, got {tok!r}", line, path)
    a = Fraction(m.group(1))
    if m.group(2) is None:
        return a
    if d is None:
        raise ParseError("surd coefficient in a field without sqrt(d)", line, path)
    return QuadraticNumber(a, Fraction(m.group(2)), d)


def _fmt_q(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _fmt_scalar(x) -> str:
    if isinstance(x, QuadraticNumber):
        if x.b == 0:
            return _fmt_q(x.a)
        sign = "+" if x.b >= 0 else "-"
        return f"{_fmt_q(x.a)}{sign}{_fmt_q(abs(x.b))}r"
    return _fmt_q(x)


def parse_certificate(text: str, path: str | None = None):
    """Return ``(entry_name, LatticeCertificate | PairRequest)`` for the single record."""
    head = None
    cols, degs, tgens, claims, claims_n, pairs, mix = {}, {}, [], {}, {}, {}, {}
    done = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if done:
            raise ParseError("content after 'end'", lineno, path)
        toks = line.split()
        kw = toks[0]
        if kw == "cert":
            if head is not None:
                raise ParseError("one certificate per file", lineno, path)
            if len(toks) < 3:
                raise ParseError("expected 'cert <entry> field=<...>'", lineno, path)
            opts = {}
            for t in toks[2:]:
                if "=" not in t:
                    raise ParseError(f"expected key=value, got {t!r}", lineno, path)
                k, v = t.split("=", 1)
                opts[k] = v
            if "field" not in opts:
                raise ParseError("missing field=", lineno, path)
            f = opts["field"]
            d = None
            if f not in (RATIONAL, QUARTER_TURN, NUMERIC):
                try:
                    d = int(f)
                except ValueError:
                    raise ParseError(f"unknown field {f!r}", lineno, path) from None
            head = {"entry": toks[1], "field": f, "d": d, "symbol": opts.get("symbol"),
                    "unit": opts.get("unit"), "line": lineno}
            if head["unit"] is not None:
                head["unit"] = _scalar(head["unit"], d, lineno, path)
            continue
        if head is None:
            raise ParseError(f"{kw!r} before 'cert'", lineno, path)
        d = head["d"]
        try:
            if kw == "basiscol":
                j = int(toks[1])
                rest = toks[2:]
                if rest and rest[0].startswith("deg="):
                    degs[j] = int(rest[0][4:])
                    rest = rest[1:]
                entries = {}
                for t in rest:
                    i, v = t.split(":", 1)
                    entries[int(i)] = _scalar(v, d, lineno, path)
                cols[j] = entries
            elif kw == "tgen":
                tgens.append([_rat(t, lineno, path) for t in toks[1].split(",")])
            elif kw in ("claim", "claimn"):
                if len(toks) != 5:
                    raise ParseError(f"expected '{kw} <gen> <row> <col> <value>'", lineno, path)
                g, r, c = int(toks[1]), int(toks[2]), int(toks[3])
                if kw == "claim":
                    if not re.fullmatch(r"[+-]?\d+", toks[4]):
                        raise ParseError(f"claim entries are integers, got {toks[4]!r}", lineno, path)
                    claims.setdefault(g, {})[(r, c)] = Fraction(int(toks[4]))
                else:
                    claims_n.setdefault(g, {})[(r, c)] = _rat(toks[4], lineno, path)
            elif kw == "pair":
                pairs[(toks[1], toks[2])] = _rat(toks[3], lineno, path)
            elif kw == "mix":
                mix[(int(toks[1]), int(toks[2]))] = _rat(toks[3], lineno, path)
            elif kw == "end":
                done = True
            else:
                raise ParseError(f"unknown record {kw!r}", lineno, path)
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed {kw!r} line: {exc}", lineno, path) from None
    if head is None:
        raise ParseError("no 'cert' record", 1, path)
    if not done:
        raise ParseError("missing 'end'", len(text.splitlines()), path)

    def dense(sparse: dict, m: int, where: str):
        M = mx.zeros(m)
        for (r, c), v in sparse.items():
            if not (1 <= r <= m and 1 <= c <= m):
                raise ParseError(f"{where} entry ({r},{c}) outside {m}x{m}", head["line"], path)
            M[r - 1][c - 1] = v
        return M

    if head["field"] == NUMERIC:
        if sorted(claims) != [1, 2]:
            raise ParseError("a numeric certificate lists claims for generators 1 and 2", head["line"], path)
        m = max(max(r, c) for g in claims.values() for r, c in g)
        return head["entry"], PairRequest(head["entry"], dense(claims[1], m, "claim"),
                                          dense(claims[2], m, "claim"))
    m = len(cols)
    if sorted(cols) != list(range(1, m + 1)):
        raise ParseError("basiscol lines must cover columns 1..m", head["line"], path)
    B = mx.zeros(m)
    for j, entries in cols.items():
        for i, v in entries.items():
            if not 1 <= i <= m:
                raise ParseError(f"basis row {i} outside 1..{m}", head["line"], path)
            B[i - 1][j - 1] = v
    k = len(tgens)
    if sorted(claims) != list(range(1, k + 1)):
        raise ParseError("need one claim block per tgen", head["line"], path)
    field = QUADRATIC if head["d"] is not None else head["field"]
    return head["entry"], LatticeCertificate(
        head["entry"], field, B, tgens,
        [dense(claims[g], m, "claim") for g in range(1, k + 1)],
        [dense(claims_n.get(g, {}), m, "claimn") for g in range(1, k + 1)] if claims_n else None,
        degrees=tuple(degs.get(j, 0) for j in range(1, m + 1)),
        mix=dense(mix, m, "mix") if mix else None, d=head["d"], symbol=head["symbol"],
        unit=head["unit"], pairings=pairs)


def load_certificate(path):
    p = Path(path)
    return parse_certificate(p.read_text(encoding="utf-8"), str(p))


def dump_certificate(cert) -> str:
    if isinstance(cert, PairRequest):
        out = [f"cert {cert.entry} field=numeric"]
        for g, M in enumerate((cert.M1, cert.M2), start=1):
            for r, row in enumerate(M, start=1):
                for c, v in enumerate(row, start=1):
                    if v != 0:
                        out.append(f"claim {g} {r} {c} {int(v)}")
        return "\n".join(out + ["end"]) + "\n"
    if cert.field == NUMERIC:
        return dump_certificate(PairRequest(cert.entry, cert.claims[0], cert.claims[1]))
    f = str(cert.d) if cert.field == QUADRATIC else cert.field
    head = f"cert {cert.entry} field={f}"
    if cert.symbol:
        head += f" symbol={cert.symbol}"
    if cert.unit is not None:
        head += f" unit={_fmt_scalar(cert.unit)}"
    out = [head]
    for j in range(cert.m):
        cells = [f"{i + 1}:{_fmt_scalar(cert.basis[i][j])}" for i in range(cert.m) if cert.basis[i][j] != 0]
        out.append(f"basiscol {j + 1} deg={cert.degrees[j]} " + " ".join(cells))
    if cert.mix is not None:
        for i, row in enumerate(cert.mix, start=1):
            for j, v in enumerate(row, start=1):
                if v != 0:
                    out.append(f"mix {i} {j} {_fmt_q(v)}")
    for c in cert.tgens:
        out.append("tgen " + ",".join(_fmt_q(x) for x in c))
    for g, C in enumerate(cert.claims, start=1):
        for r, row in enumerate(C, start=1):
            for c, v in enumerate(row, start=1):
                if v != 0:
                    out.append(f"claim {g} {r} {c} {int(v)}")
    for g, C in enumerate(cert.claims_n or [], start=1):
        for r, row in enumerate(C, start=1):
            for c, v in enumerate(row, start=1):
                if v != 0:
                    out.append(f"claimn {g} {r} {c} {_fmt_q(v)}")
    for (a, b), v in cert.pairings.items():
        out.append(f"pair {a} {b} {_fmt_q(v)}")
    return "\n".join(out + ["end"]) + "\n"


def cert_dir() -> Path:
    return Path(__file__).with_name("data") / "certs"


def load_shipped(entry):
    """The certificate shipped for ``entry``, or ``None``."""
    if entry.name == "D11" and entry.params.get("eps", 1) != 1:
        return build_d11_certificate(1, 1, eps=int(entry.params["eps"]))
    path = cert_dir() / f"{entry.name}.cert"
    if not path.exists():
        return None
    return load_certificate(path)[1]
