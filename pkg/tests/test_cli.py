import json

import pytest

from nrspaces.cli import main
from nrspaces.normal_forms import lorentz_a1, neutral_a1
from nrspaces.serialization import matrix_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def loren2_file(tmp_path, capsys):
    path = tmp_path / "loren2_c1_a1_b0_d2.json"
    assert run(capsys, "catalog", "make", "loren2", "c=1", "alpha=1", "beta=0", "delta=2", "--out", str(path))[0] == 0
    return path


def test_analyze_catalog_output(capsys, loren2_file):
    code, out, _ = run(capsys, "analyze", str(loren2_file))
    rep = json.loads(out)
    assert code == 0
    assert rep["valid"] and rep["holonomy_dim"] == 2 and rep["decomposable"] == "indecomposable"
    assert rep["flat"] is False and rep["locally_symmetric"] is False
    assert set(rep["curvature_tags"]) <= {"1,2", "1,3", "1,4", "2,3", "2,4", "3,4"}


def test_output_is_deterministic(capsys, loren2_file):
    first = run(capsys, "analyze", str(loren2_file))[1]
    assert run(capsys, "analyze", str(loren2_file))[1] == first


def test_validate(capsys, loren2_file, tmp_path):
    code, out, _ = run(capsys, "validate", str(loren2_file))
    assert code == 0 and json.loads(out)["valid"]
    doc = json.loads(loren2_file.read_text())
    doc["torsion"]["1,2"] = {"1": "1"}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert not json.loads(out)["checks"]["naturally_reductive"]["ok"]
    code, out, _ = run(capsys, "analyze", str(bad))
    assert code == 1 and "holonomy_dim" not in json.loads(out)


def test_malformed(capsys, tmp_path):
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{ not json")
    code, out, err = run(capsys, "validate", str(garbage))
    assert code == 2 and out == "" and "line 1" in err
    field = tmp_path / "field.json"
    field.write_text(json.dumps({"metric": {"gram": [["1", "0"], ["0", "zero"]]}}))
    code, _, err = run(capsys, "validate", str(field))
    assert code == 2 and "metric.gram[1][1]" in err
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_classify_op(capsys, tmp_path):
    path = tmp_path / "A1.json"
    path.write_text(json.dumps(matrix_to_json(lorentz_a1())))
    code, out, _ = run(capsys, "classify-op", "--signature", "lorentz", "--matrix", str(path))
    assert code == 0 and json.loads(out)["family"] == "Lor_a"
    code, _, err = run(capsys, "classify-op", "--signature", "neutral", "--matrix", str(path))
    assert code == 1 and "skew" in err
    path.write_text(json.dumps({"matrix": matrix_to_json(neutral_a1())}))
    code, out, _ = run(capsys, "classify-op", "--signature", "neutral", "--matrix", str(path))
    tag = json.loads(out)
    assert tag["family"] == "Neu_a1" and set(tag) >= {"family", "parameters", "char_poly"}


def test_constraints(capsys, tmp_path):
    path = tmp_path / "op.json"
    path.write_text(json.dumps({"op": matrix_to_json(neutral_a1())}))
    code, out, _ = run(capsys, "constraints", "--op", str(path), "--family", "neutral-orthonormal")
    rep = json.loads(out)
    assert code == 0 and rep["dimension"] == 2
    assert rep["basis"] == [["0", "1", "-1", "0"], ["0", "0", "0", "1"]]


def test_catalog(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and len(json.loads(out)) == 8
    code, out, _ = run(capsys, "catalog", "make", "sl_neutral", "--param", "b=1", "--param", "eta=-1",
                       "--param", "alpha=2", "--format", "algebra")
    doc = json.loads(out)
    assert code == 0 and doc["h"] == [5] and doc["h_labels"] == ["A"]
    assert doc["algebra"]["labels"] == ["X1", "X2", "X3", "X4", "A"]
    code, _, err = run(capsys, "catalog", "make", "sl_neutral", "b=0", "eta=1", "alpha=1")
    assert code == 2 and "b must be nonzero" in err
    assert run(capsys, "catalog", "make", "loren2", "c")[0] == 2


def test_batch_with_jobs(capsys, loren2_file, tmp_path):
    other = tmp_path / "osc.json"
    run(capsys, "catalog", "make", "oscillator", "eps=1/2", "--out", str(other))
    serial = run(capsys, "analyze", str(loren2_file), str(other))[1]
    code, parallel, err = run(capsys, "--verbose", "analyze", "--jobs", "2", str(loren2_file), str(other))
    assert code == 0 and parallel == serial
    assert "holonomy_dim=2" in err
    reports = json.loads(serial)
    assert [r["report"]["decomposable"] for r in reports] == ["indecomposable", "decomposable"]
