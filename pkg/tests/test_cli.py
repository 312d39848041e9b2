import json
import subprocess
import sys

import pytest

from contactlattice import lattice as lat
from contactlattice.catalog_io import data_path
from contactlattice.certfile import dump_certificate
from contactlattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_all_is_green_and_json_is_stable(capsys):
    code, out, _ = run(capsys, "all", "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "version", "entries", "checks", "status"}
    assert doc["status"] == "pass" and doc["command"] == "all"
    assert all(set(c) >= {"name", "status", "detail", "residual"} for c in doc["checks"])
    assert {"D1", "D20", "SY"} <= set(doc["entries"])
    code2, out2, _ = run(capsys, "all", "--json", "--jobs", "1")
    assert code2 == 0 and out2 == out


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog-list")
    assert code == 0
    assert "SA(n=2)" in out and "H(n=3)" in out
    assert "12 entries" in out


@pytest.mark.parametrize("target", ["D1", "D20", "D4(p=5/2)", "H(2)"])
def test_verify_entries(capsys, target):
    code, out, _ = run(capsys, "verify", target)
    assert code == 0, out


def _corrupt(tmp_path, old, new):
    text = data_path().read_text(encoding="utf-8")
    assert old in text
    path = tmp_path / "catalog.txt"
    path.write_text(text.replace(old, new, 1), encoding="utf-8")
    return path, text


def test_corrupted_catalog_exits_one_with_line(capsys, tmp_path):
    path, text = _corrupt(tmp_path, "bracket 2 4 -> 1:1/1", "bracket 2 4 -> 1:1/1 3:1/1")
    lineno = text.splitlines().index("bracket 2 4 -> 1:1/1") + 1
    code, out, _ = run(capsys, "verify", "--catalog", str(path), "--entry", "D1")
    assert code == 1
    assert f"catalog.txt:{lineno}" in out
    code, _, _ = run(capsys, "all", "--catalog", str(path))
    assert code == 1


def test_float_in_catalog_is_a_parse_error(capsys, tmp_path):
    path, _ = _corrupt(tmp_path, "contact 1:1/1", "contact 1:1.0")
    code, _, err = run(capsys, "verify", "--catalog", str(path))
    assert code == 2
    assert "parse error" in err


def test_lattice_outputs(capsys):
    code, out, _ = run(capsys, "lattice", "D13")
    assert code == 0 and "mu = 1/2" in out
    code, out, _ = run(capsys, "lattice", "D5", "--param", "m0=4")
    assert code == 0
    assert "[ 0  1  4  0]" in out
    code, out, _ = run(capsys, "lattice", "D11", "--param", "k0=2,q0=1/3")
    assert code == 0


def test_lattice_with_user_certificate(capsys, tmp_path):
    path = tmp_path / "pair.cert"
    path.write_text(dump_certificate(lat.PairRequest("D18", lat.T1, lat.T2)), encoding="utf-8")
    code, out, _ = run(capsys, "lattice", "D18", "--cert", str(path))
    assert code == 0, out
    path.write_text(dump_certificate(lat.build_d5_certificate(3)), encoding="utf-8")
    code, _, err = run(capsys, "lattice", "D18", "--cert", str(path))
    assert code == 2 and "not D18" in err


def test_boundary(capsys):
    code, out, _ = run(capsys, "boundary")
    assert code == 0
    assert "H(n=3):boundary:lie_derivative" in out
    code, _, err = run(capsys, "boundary", "HR")
    assert code == 2 and "even dimension" in err


@pytest.mark.parametrize("argv", [["verify", "D99"], ["lattice", "D4", "--param", "p=half"],
                                  ["lattice", "D4", "--param", "zz=1"], ["lattice", "D5", "--param", "m0=2"]])
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "contactlattice.cli", "lattice", "D15", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["entries"] == ["D15"]
