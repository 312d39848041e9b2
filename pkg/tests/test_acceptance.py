"""Acceptance criteria 1-9; each test prints one PASS/FAIL line."""
from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from contactlattice import catalog as cat
from contactlattice import lattice as lat
from contactlattice import matrix as mx
from contactlattice.algebra import check_jacobi, is_unimodular
from contactlattice.boundary import liouville_check, verify_nondegenerate
from contactlattice.certfile import load_shipped
from contactlattice.exterior import ce_differential, is_contact
from contactlattice.heisenberg import (HeisenbergPoint, heisenberg_exp, heisenberg_ln,
                                       integer_lattice_check)
from contactlattice.linalg import char_poly, check_jordan_chevalley, jordan_chevalley
from contactlattice.polynomial import PolynomialQ, real_roots, root_bound, sturm_count
from contactlattice.scalars import is_rational, to_rational

from helpers import random_form, random_jordan_matrix, random_rational, random_unimodular


@pytest.fixture
def verdict(capsys):
    """Print one line per criterion straight to the terminal."""
    def emit(number: int, checks: dict):
        bad = [k for k, ok in checks.items() if not ok]
        status = "PASS" if not bad else "FAIL"
        tail = f"{len(checks)} checks" if not bad else "failed: " + ", ".join(bad)
        with capsys.disabled():
            print(f"\nCRITERION {number}: {status} ({tail})")
        assert not bad, f"criterion {number}: " + ", ".join(bad)
    return emit


def test_criterion_1_catalog_soundness(verdict):
    entries = cat.d_list()
    checks = {"twelve_entries": len(entries) == 12}
    for e in entries:
        L = e.algebra
        checks[f"{e.label}:jacobi"] = check_jacobi(L) == []
        checks[f"{e.label}:unimodular"] = is_unimodular(L)
        checks[f"{e.label}:contact"] = e.eta is not None and is_contact(L, e.eta)
    verdict(1, checks)


def test_criterion_2_appendix_consistency(verdict):
    checks = {}
    exact_tags = ("exact_t=", "exact_diagonal", "symbolic")
    for e in cat.d_list():
        if e.split is None or e.split.k == 0:
            continue
        rep = cat.appendix_consistency(e, tol=1e-10)
        checks[f"{e.label}:all"] = rep.ok
        names = [c.name for c in rep.checks if c.status == "pass"]
        checks[f"{e.label}:numeric_three_times"] = sum("numeric_t=" in n for n in names) >= 3 * e.split.k
        checks[f"{e.label}:has_exact_layer"] = any(t in n for n in names for t in exact_tags)
    for name in ("D2", "D3", "D13"):
        rep = cat.appendix_consistency(cat.get(name))
        checks[f"{name}:exact_rational_t"] = any("exact_" in c.name and c.ok for c in rep.checks)
    d11 = cat.appendix_consistency(cat.get("D11"))
    checks["D11:quarter_turn_exact"] = any("pi/2" in c.name and c.ok for c in d11.checks)
    verdict(2, checks)


def test_criterion_3_partition(verdict):
    rng = random.Random(3)
    accepted, obstructed = set(), set()
    for e in cat.d_list():
        a = lat.assess(e)
        if a.status == "exists" and a.report.ok:
            accepted.add(e.name)
        elif a.status == "none" and a.obstruction is not None and a.obstruction.mu != 0:
            obstructed.add(e.name)
    checks = {"accepted": accepted == {"D1", "D2", "D3", "D5", "D11", "D18", "D20"},
              "obstructed": obstructed == {"D4", "D8", "D10", "D13", "D15"}}
    for name, bad in (("D4", Fraction(-1)), ("D10", Fraction(0))):
        ok = 0
        seen = set()
        while len(seen) < 20:
            p = random_rational(rng, 9, 7)
            if p == bad or p in seen:
                continue
            seen.add(p)
            a = lat.assess(cat.get(name, {"p": p}))
            ok += a.status == "none" and a.obstruction.mu != 0
        checks[f"{name}:random_p"] = ok == 20
    verdict(3, checks)


def test_criterion_4_d5_d11_golden(verdict):
    d5 = cat.get("D5")
    cert = lat.build_d5_certificate(3)
    want = mx.from_rows([[0, -1, 0], [1, 3, 0], [0, 0, 1]])
    block = [row[1:] for row in cert.claims[0][1:]]
    pairs = lat.omega_pairings(d5, cert)
    w23 = pairs[("X2", "X3")]
    rep = lat.verify_central_extension_certificate(d5, cert)
    d11 = cat.get("D11")
    c11 = lat.build_d11_certificate(1, 1)
    z = to_rational(lat.omega_pairings(d11, c11)[("X4", "lambda1")])
    checks = {
        "D5:matrix": mx.equal(block, want),
        "D5:field": cert.d == 5,
        "D5:omega_rational": is_rational(w23) and to_rational(w23) == 1,
        "D5:certificate": rep.ok,
        "D11:zeta_half": z == Fraction(1, 2),
        "D11:certificate": lat.verify_central_extension_certificate(d11, c11).ok,
    }
    verdict(4, checks)


def _close(values, targets, tol=5e-4) -> bool:
    return len(values) == len(targets) and all(abs(v - t) < tol for v, t in zip(sorted(values), sorted(targets)))


def test_criterion_5_d18_d20_golden(verdict):
    X = PolynomialQ.x()
    p1, p2 = char_poly(lat.T1), char_poly(lat.T2)
    checks = {
        "T1:charpoly": p1 == X ** 3 - 6 * X ** 2 + 5 * X - 1,
        "T2:charpoly": p2 == X ** 3 - 10 * X ** 2 + 17 * X - 1,
        "T1:sturm": sturm_count(p1, -root_bound(p1), root_bound(p1)) == 3,
        "T2:sturm": sturm_count(p2, -root_bound(p2), root_bound(p2)) == 3,
        "T1:roots": _close([r for r, _ in real_roots(p1)], [0.3080, 0.6431, 5.0489]),
        "T2:roots": _close([r for r, _ in real_roots(p2)], [0.0610, 2.0882, 7.8509]),
    }
    _, rep18 = lat.build_commuting_pair_certificate(cat.get("D18"), lat.T1, lat.T2)
    checks["D18:accepted"] = rep18.ok
    u1, u2 = char_poly(lat.U1), char_poly(lat.U2)
    checks["U1:real_root"] = _close([r for r, _ in real_roots(u1)], [2.3247])
    checks["U2:real_root"] = _close([r for r, _ in real_roots(u2)], [0.7549])
    cert, rep20 = lat.build_commuting_pair_certificate(cat.get("D20"), lat.U1, lat.U2)
    checks["D20:accepted"] = rep20.ok
    a1, a2 = cert.meta["alpha"]
    b1, b2 = cert.meta["angle"]
    checks["D20:log_ratio"] = abs(math.log(a1) / math.log(a2) + 3.0) <= 1e-3
    checks[f"D20:angle_ratio (computed {b1 / b2:.4f})"] = abs(b1 / b2 - 1.4589) <= 1e-3
    checks["D20:independence"] = cert.meta["independence"] > 1e-6
    verdict(5, checks)


def test_criterion_6_boundary(verdict):
    checks = {}
    targets = [cat.get(n) for n in cat.LATTICE_EXISTS] + [cat.get("H", {"n": 1}), cat.get("H", {"n": 3})]
    for e in targets:
        nd = verify_nondegenerate(e)
        lv = liouville_check(e)
        checks[f"{e.label}:power_formula"] = any(c.name.endswith("boundary:power_formula") and c.ok for c in nd.checks)
        checks[f"{e.label}:lie_derivative"] = any(c.name.endswith("boundary:lie_derivative") and c.ok for c in lv.checks)
        checks[f"{e.label}:all"] = nd.ok and lv.ok
    verdict(6, checks)


def test_criterion_7_heisenberg(verdict):
    rng = random.Random(7)
    checks = {}
    for n in (1, 2):
        good = 0
        for _ in range(100):
            x = [random_rational(rng) for _ in range(n)]
            y = [random_rational(rng) for _ in range(n)]
            p = HeisenbergPoint.make(x, y, random_rational(rng))
            good += heisenberg_exp(heisenberg_ln(p)) == p
        checks[f"H{2 * n + 1}:exp_ln"] = good == 100
        checks[f"H{2 * n + 1}:integer_points"] = integer_lattice_check(n).ok
    verdict(7, checks)


def test_criterion_8_sy_family(verdict):
    checks = {}
    for a1, a2 in ((1, 1), (1, 2), (2, 3)):
        for m0 in (3, 4, 5):
            checks[f"a=({a1},{a2}),m0={m0}"] = lat.sy_lattice_check(a1, a2, m0).ok
    verdict(8, checks)


def test_criterion_9_properties(verdict):
    rng = random.Random(9)
    entries = cat.d_list() + [cat.get("H", {"n": 2}), cat.get("SA", {"n": 2})]
    dd = 0
    for i in range(120):
        e = entries[i % len(entries)]
        k = rng.randint(0, e.dim - 2)
        a = random_form(rng, e.algebra, k)
        dd += ce_differential(e.algebra, ce_differential(e.algebra, a)).is_zero()
    ch = 0
    for _ in range(120):
        n = rng.randint(1, 5)
        M = [[random_rational(rng, 6, 3) for _ in range(n)] for _ in range(n)]
        ch += mx.is_zero(char_poly(M)(M))
    jc = 0
    for i in range(120):
        n = rng.randint(2, 5)
        M = random_jordan_matrix(rng, n) if i % 2 else [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                                                        for _ in range(n)]
        jc += all(check_jordan_chevalley(jordan_chevalley(M)).values())
    inv = 0
    for i in range(120):
        e = cat.get("D5" if i % 2 else "D11")
        cert = load_shipped(e)
        inv += lat.verify_certificate(e, lat.change_basis(cert, random_unimodular(rng, 4))).ok
    verdict(9, {f"d_squared ({dd}/120)": dd == 120, f"cayley_hamilton ({ch}/120)": ch == 120,
                f"jordan_chevalley ({jc}/120)": jc == 120, f"basis_change ({inv}/120)": inv == 120})
