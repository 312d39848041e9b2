from fractions import Fraction

import pytest

from contactlattice import catalog as cat
from contactlattice import lattice as lat
from contactlattice.certfile import (cert_dir, dump_certificate, load_certificate, load_shipped,
                                     parse_certificate)
from contactlattice.errors import ParseError


@pytest.mark.parametrize("cert", [
    lat.build_d5_certificate(3),
    lat.build_d5_certificate(7, q=Fraction(5, 2)),
    lat.build_d11_certificate(1),
    lat.build_d11_certificate(3, Fraction(2, 7)),
], ids=["d5", "d5_m7", "d11", "d11_k3"])
def test_round_trip_exact_certificates(cert):
    text = dump_certificate(cert)
    name, back = parse_certificate(text)
    assert name == cert.entry
    assert dump_certificate(back) == text
    assert back.basis == cert.basis and back.claims == cert.claims
    assert back.degrees == cert.degrees and back.unit == cert.unit
    entry = cat.get(name)
    assert lat.verify_central_extension_certificate(entry, back).ok


def test_round_trip_pair_request():
    req = lat.PairRequest("D18", lat.T1, lat.T2)
    name, back = parse_certificate(dump_certificate(req))
    assert name == "D18" and isinstance(back, lat.PairRequest)
    assert back.M1 == lat.T1 and back.M2 == lat.T2


@pytest.mark.parametrize("name", ["D5", "D11", "D18", "D20"])
def test_shipped_certificates_load(name):
    path = cert_dir() / f"{name}.cert"
    parsed_name, cert = load_certificate(path)
    assert parsed_name == name
    body = [ln for ln in path.read_text(encoding="utf-8").splitlines() if not ln.startswith("#")]
    assert body == dump_certificate(cert).splitlines()
    assert lat.assess(cat.get(name), cert).status == "exists"


def test_shipped_match_builders():
    assert dump_certificate(load_shipped(cat.get("D5"))) == dump_certificate(lat.build_d5_certificate(3))
    assert dump_certificate(load_shipped(cat.get("D11"))) == dump_certificate(lat.build_d11_certificate(1))
    minus = load_shipped(cat.get("D11", {"eps": -1}))
    assert minus.meta["eps"] == -1
    assert load_shipped(cat.get("D1")) is None


@pytest.mark.parametrize("text,line", [
    ("basiscol 1 1:1/1\nend\n", 1),
    ("cert D5 field=5\nbasiscol 1 1:0.5\nend\n", 2),
    ("cert D5 field=rational\ntgen 1/1\nclaim 1 1 1 1/2\nend\n", 3),
    ("cert D5 field=rational\nbasiscol 1 1:1+1r\nend\n", 2),
    ("cert D5 field=bogus\nend\n", 1),
    ("cert D5 field=5\nbasiscol 1 1:1\nwhatever\nend\n", 3),
    ("cert D5 field=5\nbasiscol 1 1:1\nend\nclaim 1 1 1 1\n", 4),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_certificate(text, "c.cert")
    assert info.value.line == line
