import pytest

from contactlattice import catalog as cat
from contactlattice.catalog_io import (data_path, dump_catalog, dump_entry, load_catalog,
                                       parse_catalog, verify_parsed)
from contactlattice.errors import ParseError

SHIPPED = [cat.get(n) for n in cat.D_NAMES] + [
    cat.get("H", {"n": 1}), cat.get("H", {"n": 2}), cat.get("HR", {"n": 1}),
    cat.get("SA", {"n": 2}), cat.get("SY", {"a1": 1, "a2": 1})]


def test_shipped_file_is_the_dump_of_the_catalog():
    assert data_path().read_text(encoding="utf-8") == dump_catalog(SHIPPED)


def test_round_trip_preserves_structure():
    for e in SHIPPED:
        (p,) = parse_catalog(dump_entry(e))
        L = p.algebra()
        assert L.labels == e.algebra.labels
        assert L.structure == e.algebra.structure
        if e.eta is not None:
            assert p.eta(L).coeffs == e.eta.coeffs
        if e.split is not None and e.split.k:
            assert [[list(r) for r in b] for b in p.beta_matrices()] == \
                   [[list(r) for r in b] for b in e.split.beta]


def test_shipped_records_verify():
    for p in load_catalog(data_path()):
        rep = verify_parsed(p, "catalog.txt")
        assert rep.ok, (p.name, [c.detail for c in rep.failures()])


def _d1_text(bracket_line="bracket 2 4 -> 1:1/1"):
    return "\n".join(["# D1 with edits", "algebra D1 dim=5", "labels e1 e2 e3 e4 e5",
                      bracket_line, "bracket 3 5 -> 1:1/1", "bracket 2 3 -> 2:1/1",
                      "contact 1:1/1", "end", ""])


def test_jacobi_failure_cites_bracket_lines():
    (p,) = parse_catalog(_d1_text(), "bad.txt")
    rep = verify_parsed(p, "bad.txt")
    (jac,) = [c for c in rep.checks if c.name.endswith("jacobi")]
    assert not jac.ok
    assert "(e2,e3,e4)" in jac.detail and "bad.txt:" in jac.detail
    assert "4" in jac.detail.split("bad.txt:")[1]


def test_wrong_beta_line_is_reported():
    text = data_path().read_text(encoding="utf-8")
    start = text.index("algebra D4(p=2)")
    block = text[start:text.index("end", start) + 3]
    bad = block.replace("beta 5 1 1 -3/1", "beta 5 1 1 -2/1")
    assert bad != block
    (p,) = parse_catalog(bad)
    rep = verify_parsed(p)
    assert any(c.name.endswith("split:nilradical:beta") and not c.ok for c in rep.checks)


@pytest.mark.parametrize("text,line", [
    ("algebra X dim=3\nbracket 1 2 -> 3:0.5\nend\n", 2),
    ("algebra X dim=3\nbracket 1 4 -> 3:1\nend\n", 2),
    ("algebra X dim=3\n\nfrobnicate 1\nend\n", 3),
    ("labels a b\n", 1),
    ("algebra X dim=3\nbracket 1 2 -> 3:1\n", 2),
    ("algebra X dim=3\nbracket 1 2 -> 3:1\nbracket 2 1 -> 3:1\nend\n", 3),
    ("algebra X dim=3\ncontact 1:1e-3\nend\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_catalog(text, "f.txt")
    assert info.value.line == line
    assert f"f.txt:{line}:" in str(info.value)
