"""``contactlattice`` command line: catalog listing, verification, lattices, boundaries."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from . import boundary as bd
from . import catalog as cat
from . import catalog_io as cio
from . import lattice as lat
from .certfile import load_certificate
from .errors import ContactLatticeError, InvalidParameter, ParseError, UnknownEntry
from .matrix import format_matrix
from .report import SKIP, Report

ENTRY_PARAMS = {"p", "eps", "a1", "a2", "n"}
LATTICE_PARAMS = {"m0", "k0", "q", "q0"}
BOUNDARY_EXTRA = (("H", {"n": 1}), ("H", {"n": 3}))


class Outcome:
    """Merged result of one command."""

    def __init__(self, command: str):
        self.command = command
        self.entries: list[str] = []
        self.checks = []
        self.lines: list[str] = []

    def add(self, rep: Report, entry: str | None = None):
        if entry and entry not in self.entries:
            self.entries.append(entry)
        self.checks.extend(rep.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self) -> dict:
        return {"command": self.command, "version": __version__, "entries": self.entries,
                "checks": [c.as_dict() for c in self.checks], "status": "pass" if self.ok else "fail"}

    def text(self) -> str:
        out = list(self.lines)
        for c in self.checks:
            res = "" if c.residual is None else f"  [residual {c.residual:.3e}]"
            det = f"  {c.detail}" if c.detail else ""
            out.append(f"{c.status.upper():4}  {c.name}{det}{res}")
        n_fail = sum(1 for c in self.checks if not c.ok)
        n_skip = sum(1 for c in self.checks if c.status == SKIP)
        out.append(f"{self.command}: {len(self.checks)} checks, {n_fail} failed, {n_skip} skipped")
        return "\n".join(out)


def _parse_params(items) -> tuple[dict, dict]:
    entry_p, lattice_p = {}, {}
    for item in items or []:
        for part in item.split(","):
            if not part:
                continue
            if "=" not in part:
                raise InvalidParameter(f"--param expects key=value, got {part!r}")
            k, v = (x.strip() for x in part.split("=", 1))
            try:
                val = Fraction(v)
            except ValueError:
                raise InvalidParameter(f"parameter {k} needs an exact rational, got {v!r}") from None
            if k in ENTRY_PARAMS:
                entry_p[k] = val
            elif k in LATTICE_PARAMS:
                lattice_p[k] = val
            else:
                raise InvalidParameter(f"unknown parameter {k!r}")
    return entry_p, lattice_p


def _entry(name: str, params: dict) -> cat.CatalogEntry:
    base, inline = cat.parse_name(name)
    merged = {**inline, **params}
    if base in cat.DEFAULTS:
        merged = {k: v for k, v in merged.items() if k in cat.DEFAULTS[base]}
    elif base in ("H", "HR", "SA"):
        merged = {"n": merged.get("n", 1 if base != "SA" else 2)}
    elif base == "SY":
        merged = {"a1": merged.get("a1", 1), "a2": merged.get("a2", 1)}
    else:
        merged = {}
    return cat.get(base, merged)


def _families() -> list:
    return ([cat.get("H", {"n": n}) for n in (1, 2, 3)] + [cat.get("HR", {"n": 1})]
            + [cat.get("SA", {"n": 2}), cat.get("SY", {"a1": 1, "a2": 1})])


def cmd_catalog_list(args=None) -> Outcome:
    out = Outcome("catalog-list")
    entries = cat.d_list() + _families()
    out.lines.append(f"{'entry':16} {'dim':>3}  unimod solv nilp contact  lattice")
    for e in entries:
        f = cat.derived_flags(e)
        out.lines.append(f"{e.label:16} {e.dim:>3}  {_yn(f['unimodular']):6} {_yn(f['solvable']):4} "
                         f"{_yn(f['nilpotent']):4} {_yn(f['contact']):7}  {e.lattice_status}")
        rep = Report(e.label)
        for k, want in e.flags.items():
            rep.add(f"flag:{k}", f[k] == want)
        out.add(rep, e.label)
    summary = Report("")
    five = [e for e in entries if e.name in cat.D_NAMES and e.dim == 5
            and cat.derived_flags(e)["unimodular"] and cat.derived_flags(e)["solvable"]]
    summary.add("unimodular_solvable_5d", len(five) == 12, f"{len(five)} entries")
    exists = [e.label for e in five if e.lattice_status == "exists"]
    summary.add("lattice_exists_count", len(exists) == 7, ", ".join(exists))
    h = sorted(int(e.params["n"]) for e in entries if e.name == "H")
    summary.add("heisenberg_family", h == [1, 2, 3], f"H(n) for n = {h}")
    out.add(summary)
    return out


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_verify(args) -> Outcome:
    out = Outcome("verify")
    if args.catalog:
        parsed = cio.load_catalog(args.catalog)
        for p in parsed:
            if args.entry and p.name != args.entry:
                continue
            out.add(cio.verify_parsed(p, args.catalog), p.name)
        if args.entry and not out.entries:
            raise UnknownEntry(f"{args.entry} not in {args.catalog}")
        return out
    entries = [_entry(args.entry, args.entry_params)] if args.entry else cat.d_list() + _families()
    for e in entries:
        out.add(cat.verify_entry(e, tol=args.tol), e.label)
    return out


def _lattice_one(entry: cat.CatalogEntry, args) -> tuple[Report, list[str]]:
    lp = args.lattice_params
    cert = None
    if args.cert:
        name, cert = load_certificate(args.cert)
        if cat.parse_name(name)[0] != entry.name:
            raise InvalidParameter(f"certificate is for {name}, not {entry.label}")
    elif entry.name == "D5" and ("m0" in lp or "q" in lp):
        cert = lat.build_d5_certificate(int(lp.get("m0", 3)), lp.get("q", 1))
    elif entry.name == "D11" and ("k0" in lp or "q0" in lp):
        cert = lat.build_d11_certificate(int(lp.get("k0", 1)), lp.get("q0", 1),
                                         eps=int(entry.params["eps"]))
    elif entry.name == "SY" and "m0" in lp:
        rep = lat.sy_lattice_check(int(entry.params["a1"]), int(entry.params["a2"]), int(lp["m0"]))
        return rep, [f"{entry.label}: lattice exists (m0 = {lp['m0']})"]
    a = lat.assess(entry, cert)
    lines = [f"{entry.label}: lattice status {a.status} (expected {entry.lattice_status})"]
    if a.certificate is not None:
        for j, C in enumerate(a.certificate.claims, start=1):
            lines.append(f"  [db_s(lambda{j})]_X =")
            lines.extend("    " + r for r in format_matrix(C).splitlines())
    if a.obstruction is not None:
        o = a.obstruction
        lines.append(f"  stratum <{o.stratum_labels}>: weight {o.stratum_trace}, complement "
                     f"{o.complement_trace}, mu = {o.mu}")
    rep = a.report
    rep.add("lattice:status", a.status == entry.lattice_status, f"{a.status}")
    return rep, lines


def cmd_lattice(args) -> Outcome:
    out = Outcome("lattice")
    entries = [_entry(args.entry, args.entry_params)] if args.entry else cat.d_list()
    for e in entries:
        rep, lines = _lattice_one(e, args)
        out.lines.extend(lines)
        out.add(rep, e.label)
    return out


def _boundary_targets():
    return [cat.get(n) for n in cat.LATTICE_EXISTS] + [cat.get(n, p) for n, p in BOUNDARY_EXTRA]


def cmd_boundary(args) -> Outcome:
    out = Outcome("boundary")
    entries = [_entry(args.entry, args.entry_params)] if args.entry else _boundary_targets()
    for e in entries:
        out.add(bd.boundary_report(e), e.label)
    return out


def _all_for(entry: cat.CatalogEntry, args) -> tuple[Report, list[str]]:
    rep = cat.verify_entry(entry, tol=args.tol)
    lines: list[str] = []
    if entry.name in cat.D_NAMES:
        lrep, lines = _lattice_one(entry, args)
        rep.extend(lrep)
        if entry.name in cat.LATTICE_EXISTS:
            rep.extend(bd.boundary_report(entry))
    return rep, lines


def cmd_all(args) -> Outcome:
    out = Outcome("all")
    if args.catalog:
        parsed = cio.load_catalog(args.catalog)
        for p in parsed:
            out.add(cio.verify_parsed(p, args.catalog), p.name)
    entries = cat.d_list() + _families()
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(lambda e: _all_for(e, args), entries))
    for e, (rep, lines) in sorted(zip(entries, results), key=lambda t: t[0].label):
        out.lines.extend(lines)
        out.add(rep, e.label)
    for n, p in BOUNDARY_EXTRA:
        e = cat.get(n, p)
        out.add(bd.boundary_report(e), e.label)
    sy = Report("SY")
    for a1, a2 in ((1, 1), (1, 2), (2, 3)):
        for m0 in (3, 4, 5):
            r = lat.sy_lattice_check(a1, a2, m0)
            sy.add(f"a=({a1},{a2}),m0={m0}", r.ok, r.checks[1].detail)
    out.add(sy, "SY")
    return out


COMMANDS = {"catalog-list": cmd_catalog_list, "verify": cmd_verify, "lattice": cmd_lattice,
            "boundary": cmd_boundary, "all": cmd_all}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--tol", type=float, default=1e-10, help="tolerance for numeric layers")
    common.add_argument("--param", action="append", metavar="K=V",
                        help="p, eps, a1, a2, n (entry) or m0, k0, q, q0 (certificate builders)")
    common.add_argument("--entry", help="entry name, e.g. D4 or D4(p=3) or H(2)")
    common.add_argument("--cert", help="certificate file for 'lattice'")
    common.add_argument("--catalog", help="catalog text file for 'verify' and 'all'")
    common.add_argument("--jobs", type=int, default=4, help="worker threads for 'all'")
    parser = argparse.ArgumentParser(prog="contactlattice",
                                     description="Exact checks of contact structures and lattices "
                                                 "on low-dimensional solvable Lie groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("target", nargs="?", help="entry name (same as --entry)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.target and not args.entry:
        args.entry = args.target
    try:
        args.entry_params, args.lattice_params = _parse_params(args.param)
        outcome = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ContactLatticeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(outcome.as_dict(), indent=2, sort_keys=True))
    else:
        print(outcome.text())
    return 0 if outcome.ok else 1


if __name__ == "__main__":
    sys.exit(main())
