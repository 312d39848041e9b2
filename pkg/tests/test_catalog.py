from fractions import Fraction

import pytest

from contactlattice import catalog as cat
from contactlattice.errors import InvalidParameter, UnknownEntry
from contactlattice.expoly import ExpPoly
from contactlattice.exterior import ce_differential


def test_d_list_names_and_dimensions():
    entries = cat.d_list()
    assert [e.name for e in entries] == list(cat.D_NAMES)
    assert all(e.dim == 5 for e in entries)
    assert set(cat.LATTICE_EXISTS) | set(cat.LATTICE_NONE) == set(cat.D_NAMES)


@pytest.mark.parametrize("name", cat.D_NAMES + ("H", "HR", "SA", "SY"))
def test_recorded_flags_match_derived(name):
    e = cat.get(name)
    derived = cat.derived_flags(e)
    for k, v in e.flags.items():
        assert derived[k] == v, (e.label, k)


def test_verify_entry_passes_everywhere():
    for e in cat.d_list() + [cat.get("H", {"n": n}) for n in (1, 2, 3)]:
        rep = cat.verify_entry(e)
        assert rep.ok, [c.name for c in rep.failures()]


def test_nilpotent_entries():
    nil = {e.name for e in cat.d_list() if cat.derived_flags(e)["nilpotent"]}
    assert nil == {"D1", "D2", "D3"}


def test_sa_is_not_solvable_but_contact():
    e = cat.get("SA", {"n": 2})
    f = cat.derived_flags(e)
    assert not f["solvable"] and f["unimodular"] and f["contact"]


def test_parse_name_forms():
    assert cat.parse_name("D4(p=3)") == ("D4", {"p": Fraction(3)})
    assert cat.parse_name("H(2)") == ("H", {"n": Fraction(2)})
    assert cat.get("D4(p=1/2)").params["p"] == Fraction(1, 2)
    assert cat.get("H(3)").dim == 7


def test_bad_names_and_parameters():
    with pytest.raises(UnknownEntry):
        cat.get("D99")
    with pytest.raises(InvalidParameter):
        cat.get("D4", {"p": -1})
    with pytest.raises(InvalidParameter):
        cat.get("D10", {"p": 0})
    with pytest.raises(InvalidParameter):
        cat.get("D1", {"p": 2})


def test_d4_weights_follow_parameter():
    for p in (Fraction(2), Fraction(-3, 5), Fraction(7, 2)):
        beta = cat.get("D4", {"p": p}).split.beta[0]
        assert [beta[i][i] for i in range(4)] == [-(p + 1), -1, -p, 2 * (p + 1)]


def test_d13_and_d15_beta_diagonals():
    b13 = cat.get("D13").split.beta[0]
    assert [b13[i][i] for i in range(4)] == [Fraction(1, 2), Fraction(3, 2), -1, -1]
    b15 = cat.get("D15").split.beta[0]
    assert [b15[i][i] for i in range(4)] == [Fraction(-2, 3), Fraction(1, 3), Fraction(4, 3), -1]


def test_d11_sign_parameter():
    for eps in (1, -1):
        e = cat.get("D11", {"eps": eps})
        assert cat.verify_entry(e).ok
        beta = e.split.beta[0]
        assert beta[1][2] == -beta[2][1] != 0


def test_printed_closed_forms_are_rejected():
    for name in ("D3", "D11"):
        e = cat.get(name)
        rep = cat.appendix_consistency(e, closed=e.printed_db)
        assert not rep.ok
        assert cat.appendix_consistency(e).ok


def test_perturbed_closed_form_fails_exact_layers():
    e = cat.get("D13")
    db = [list(r) for r in e.db[0]]
    db[3][2] = ExpPoly() + db[3][2] + ExpPoly.term(Fraction(1, 1000), k=1, a=-1)
    rep = cat.appendix_consistency(e, closed=(db,))
    failed = {c.name.split(":")[-1] for c in rep.failures()}
    assert {"symbolic", "exact_jordan"} <= failed


def test_d1_contact_differential():
    e = cat.get("D1")
    de = ce_differential(e.algebra, e.eta)
    assert de.coefficient("e2", "e4") == -1
    assert de.coefficient("e3", "e5") == -1


def test_center_and_derived_length():
    assert cat.center_of(cat.get("D5")).rank == 1
    assert cat.derived_length(cat.get("H", {"n": 1})) == 2
