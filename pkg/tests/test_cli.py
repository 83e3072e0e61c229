import io
import json
import shutil

import pytest

from codegree import catalog
from codegree.cli import run

TABLES = catalog.data_dir() / "tables"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_arith_reports_q27():
    code, out, _ = call("verify", "arith", "--p-max", "1000", "--f-max", "64")
    assert code == 1
    assert "equality: f^3 < q [p=3, f=3, q=27]: 27 vs 27" in out


def test_verify_arith_allow_equalities():
    code, out, _ = call("verify", "arith", "--allow-equalities")
    assert code == 0 and "equality (allowed)" in out


def test_sharpness_json():
    code, out, _ = call("sharpness", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["argmax"] == ["ON"] and doc["unique"]
    assert doc["maximum"] == "1663488/584815" == doc["a"]
    assert doc["fi22_exceeds_a"]


def test_table_check_a5():
    code, out, _ = call("table", "check", str(TABLES / "a5.json"), "--k", "1663488/584815")
    assert code == 1
    assert "violation: chi2 degree 3" in out
    assert "consistent with theorem: True" in out


def test_table_check_s4_fails_hypothesis_but_is_consistent():
    code, out, _ = call("table", "check", str(TABLES / "s4.json"), "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc["solvable"] is True and doc["consistent_with_theorem"] is True and not doc["holds"]


def test_table_check_abelian_passes(tmp_path):
    path = tmp_path / "c2.json"
    chars = [{"label": "chi1", "degree": 1, "values": [1, 1]}, {"label": "chi2", "degree": 1, "values": [1, -1]}]
    path.write_text(json.dumps({"name": "C2", "order": 2, "class_sizes": [1, 1], "characters": chars}))
    code, out, _ = call("table", "check", str(path))
    assert code == 0 and "hypothesis holds: True" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "bogus"],
        ["frobnicate"],
        ["verify", "arith", "--q-max", "zero"],
        ["verify", "arith", "--k", "2.5"],
        ["verify", "arith", "--k", "-1"],
        ["table", "check", "/nonexistent/file.json"],
        ["group", "An", "--n", "1", "--q", "6"],
        ["group", "Sporadic"],
        ["group", "G2", "--m", "1"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_malformed_table_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "order": 2, "class_sizes": [1], "characters": []}')
    code, _, err = call("table", "check", str(bad))
    assert code == 2 and "sizes sum" in err


def test_group_outputs():
    code, out, _ = call("group", "G2", "--q", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["order_value"] == "4245696" and doc["steinberg_degree"] == 729 and doc["out_bound"] == 2
    code, out, _ = call("group", "2B2", "--m", "1", "--json")
    assert json.loads(out)["theta1_degree"] == 14
    code, out, _ = call("group", "Sporadic", "--name", "O'N", "--json")
    doc = json.loads(out)
    assert doc["degree"] == 10944 and doc["order"] == "2^9*3^4*5*7^3*11*19*31"


def test_cyclotomic_command():
    code, out, _ = call("cyclotomic", "12", "--at", "2")
    assert code == 0
    assert out == "Phi_12(x) = x^4 - x^2 + 1\nPhi_12(2) = 13\n"


def test_header_shows_k_and_a():
    _, out, _ = call("verify", "simple", "--k", "3")
    assert out.splitlines()[:2] == ["k = 3 (~3.000000)", "a = 1663488/584815 (~2.844468)"]


def test_verify_all_fails_because_of_boundary_cases():
    code, out, _ = call("verify", "all")
    assert code == 1
    assert "FAIL arith" in out and "PASS cases" in out


def test_output_is_deterministic():
    runs = [call("verify", "all", "--json", "--q-max", "50", "--n-max", "6") for _ in range(2)]
    assert runs[0] == runs[1]


def test_json_round_trip():
    _, out, _ = call("verify", "cases", "--json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, sort_keys=True, indent=2)) == doc
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == out


def test_k_one_makes_cases_fail():
    code, out, _ = call("verify", "cases", "--k", "1")
    assert code == 1 and "failure: (2b)" in out


def test_data_dir_override(tmp_path, monkeypatch):
    shutil.copytree(catalog.data_dir(), tmp_path / "data")
    monkeypatch.setenv("CODEGREE_DATA_DIR", str(tmp_path / "data"))
    code, _, _ = call("sharpness")
    assert code == 0
    shutil.copytree(tmp_path / "data", tmp_path / "bad")
    text = (tmp_path / "bad" / "sporadic.toml").read_text().replace("degree = 10944", "degree = 10945")
    (tmp_path / "bad" / "sporadic.toml").write_text(text)
    monkeypatch.setenv("CODEGREE_DATA_DIR", str(tmp_path / "bad"))
    code, _, err = call("sharpness")
    assert code == 2 and "ON" in err
