"""End-to-end exercises of the command line, through run() directly."""

import json

import pytest

from neargroup.associators import data_from_obj, data_to_obj, example_data
from neargroup.cli import run
from neargroup.cyclotomic import root_of_unity


def test_no_arguments_is_a_usage_error(capsys):
    assert run([]) == 2
    capsys.readouterr()


def test_search_pi_text(capsys):
    assert run(["search-pi", "--group", "Z4"]) == 0
    out = capsys.readouterr().out
    assert "Z4: 2 structures" in out
    assert "(omega = g2)" in out


def test_search_pi_json(capsys):
    assert run(["search-pi", "--group", "Z4", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "pi-list@1"
    assert doc["count"] == 2
    assert len(doc["structures"]) == 2


def test_search_pi_empty(capsys):
    assert run(["search-pi", "--group", "Z5"]) == 1
    assert "0 structures" in capsys.readouterr().out


def test_search_pi_bad_group(capsys):
    assert run(["search-pi", "--group", "Q8"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_build_field_from_field(capsys):
    assert run(["build-field", "--field", "5"]) == 0
    out = capsys.readouterr().out
    assert "F5 reconstructed" in out
    assert "isomorphic to the standard field of order 5: yes" in out


def test_build_field_json(capsys):
    assert run(["build-field", "--group", "Z4", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "field-table@1"
    assert doc["q"] == 5
    assert doc["standard"] is True
    assert len(doc["add"]) == 5 and len(doc["mul"]) == 5


def test_build_field_no_structure(capsys):
    assert run(["build-field", "--group", "Z2xZ2"]) == 1
    assert "admits no compatible permutation" in capsys.readouterr().out


def test_construct_verify_round_trip(tmp_path, capsys):
    path = tmp_path / "z4.json"
    assert run(["construct", "--field", "5", "--out", str(path)]) == 0
    out = capsys.readouterr().out
    assert "constructed (Z4, 3)" in out
    assert "delta = +1" in out

    data = data_from_obj(json.loads(path.read_text()))
    assert data.k == 3

    assert run(["verify", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("overall: pass")

    assert run(["verify", "--input", str(path), "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "pentagon oracle: 3125 word/channel pairs, 0 disagreements" in out


def test_verify_flags_broken_data(tmp_path, capsys):
    path = tmp_path / "bad.json"
    obj = data_to_obj(example_data("Z2k1"))
    obj["xi"] = [root_of_unity(5, 1).to_obj()]
    path.write_text(json.dumps(obj))
    assert run(["verify", "--input", str(path)]) == 1
    assert "overall: FAIL" in capsys.readouterr().out


def test_verify_bad_inputs(tmp_path, capsys):
    garbage = tmp_path / "garbage.json"
    garbage.write_text("not json at all")
    assert run(["verify", "--input", str(garbage)]) == 2

    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"schema": "something-else@1"}))
    assert run(["verify", "--input", str(wrong)]) == 2

    assert run(["verify", "--input", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_braidings_unique(tmp_path, capsys):
    path = tmp_path / "z4.json"
    assert run(["construct", "--field", "5", "--out", str(path)]) == 0
    capsys.readouterr()
    assert run(["braidings", "--input", str(path)]) == 0
    out = capsys.readouterr().out
    assert "1 braiding" in out
    assert "symmetric, balanced" in out
    # a low cap escalates rather than dropping the solution
    assert run(["braidings", "--input", str(path), "--root-bound", "1"]) == 0
    capsys.readouterr()


def test_braidings_empty(tmp_path, capsys):
    path = tmp_path / "z2-zeta3.json"
    path.write_text(json.dumps(data_to_obj(example_data("Z2k1", "zeta3"))))
    assert run(["braidings", "--input", str(path), "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "braiding-list@1"
    assert doc["count"] == 0
    assert doc["braidings"] == []


def test_classify(capsys):
    assert run(["classify", "--family", "Z4k3"]) == 0
    out = capsys.readouterr().out
    assert "unique monoidal structure / unique braiding / balanced / symmetric" in out

    assert run(["classify", "--family", "Z2k1:zeta3"]) == 0
    capsys.readouterr()

    assert run(["classify", "--family", "Z9k8"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_classify_json(capsys):
    assert run(["classify", "--family", "Z3k2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "classification@1"
    assert doc["monoidal_structures"] == 2
    assert len(doc["braidings"]) == 4


def test_obstruction(capsys):
    assert run(["obstruction", "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert "OBSTRUCTED" in out
    assert "(det lambda)^4 = -1" in out

    assert run(["obstruction", "--k", "4"]) == 0
    out = capsys.readouterr().out
    assert "consistent" in out
    assert "admissible determinant angles" in out


def test_obstruction_json(capsys):
    assert run(["obstruction", "--k", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "obstruction@1"
    assert doc["obstructed"] is True
    assert doc["determinant_angles"] == []
    assert run(["obstruction", "--k", "0"]) == 2
    capsys.readouterr()


def test_fixtures(capsys):
    assert run(["fixtures"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 6
    assert all(line.endswith("pass") for line in lines)
    assert any(line.startswith("Z2k1:zeta3") for line in lines)
    assert any(line.startswith("Z4k3") for line in lines)


def test_fixtures_json(capsys):
    assert run(["fixtures", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "fixture-report@1"
    assert len(doc["fixtures"]) == 6
    assert all(entry["passed"] for entry in doc["fixtures"])


def test_out_file_written(tmp_path, capsys):
    path = tmp_path / "pis.json"
    assert run(["search-pi", "--group", "Z4", "--out", str(path)]) == 0
    capsys.readouterr()
    doc = json.loads(path.read_text())
    assert doc["schema"] == "pi-list@1"


def test_out_bad_parent(tmp_path, capsys):
    target = tmp_path / "no" / "such" / "dir" / "x.json"
    assert run(["construct", "--field", "3", "--out", str(target)]) == 2
    assert capsys.readouterr().err.startswith("error:")
