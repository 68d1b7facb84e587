import json

import pytest
from hypothesis import given

from conftest import seeds
from wvo import Cone
from wvo import io as wio
from wvo.cli import main, parse_matrix_arg
from wvo.errors import SchemaError
from wvo.golden import example_problem
from wvo.random_instances import random_instance
from wvo.sampling import make_rng

EX_DOC = {
    "schema_version": 1,
    "dims": {"n": 1, "m": 2, "p": 1},
    "cones": {"K": {"dim": 2, "facets": [[1, 0], [0, 1]]}, "S": {"dim": 1, "facets": [[1]]}},
    "maps": {"F": {"matrix": [[0], [0]], "offset": [0, 0]}, "G": {"matrix": [[-1]], "offset": [0]}},
}


def test_parse_example_document():
    prob = wio.parse_problem(json.dumps(EX_DOC))
    assert prob.K.same_set(Cone.orthant(2)) and prob.S.same_set(Cone.orthant(1))
    assert prob.F((5,)) == (0, 0) and prob.G((2,)) == (-2,)


def test_empty_C_rejected():
    doc = dict(EX_DOC, C={"dim": 1, "rows": [{"a": [1], "b": -1}, {"a": [-1], "b": -1}]})
    with pytest.raises(SchemaError, match="infeasible constraint set"):
        wio.parse_problem(json.dumps(doc))


def test_float_rejected_with_line():
    text = json.dumps(EX_DOC, indent=1).replace('"offset": [\n    0\n   ]', '"offset": [\n    0.5\n   ]')
    assert "0.5" in text
    with pytest.raises(SchemaError, match=r"0\.5.*line \d+"):
        wio.parse_problem(text)
    prob = wio.parse_problem(text, approx=True)
    assert prob.G.offset == (pytest.approx(0.5),) and str(prob.G.offset[0]) == "1/2"


def test_field_paths_in_errors():
    doc = json.loads(json.dumps(EX_DOC))
    del doc["maps"]["G"]
    with pytest.raises(SchemaError, match="maps.G"):
        wio.problem_from_dict(doc)
    doc = json.loads(json.dumps(EX_DOC))
    doc["cones"]["K"]["facets"] = [[0, 1]]
    with pytest.raises(SchemaError, match="cones.K"):
        wio.problem_from_dict(doc)
    with pytest.raises(SchemaError, match="schema_version"):
        wio.problem_from_dict(dict(EX_DOC, schema_version=7))


def test_malformed_json():
    with pytest.raises(SchemaError, match="line 1"):
        wio.loads("{nope")


@given(seeds)
def test_round_trip(seed):
    prob = random_instance(make_rng(seed))
    again = wio.parse_problem(wio.dump_problem(prob))
    assert wio.problem_to_dict(again) == wio.problem_to_dict(prob)


def test_matrix_arg_forms():
    assert parse_matrix_arg("1,0;0,1") == ((1, 0), (0, 1))
    assert parse_matrix_arg("[[1, \"1/2\"]]")[0][1] * 2 == 1


# -- command line -----------------------------------------------------------


@pytest.fixture
def ex_file(tmp_path):
    path = tmp_path / "ex.json"
    path.write_text(wio.dump_problem(example_problem()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_validate(capsys, ex_file):
    code, out, _ = run(capsys, "validate", ex_file)
    d = json.loads(out)
    assert code == 0 and d["qualification"]["verdict"]


def test_cli_epi_with_negative_values(capsys, ex_file):
    code, out, _ = run(capsys, "epi", ex_file, "--L", "1;0", "--y", "0,-1")
    assert code == 0 and json.loads(out)[0]["member"] is False
    code, out, _ = run(capsys, "epi", ex_file, "--L", "1;0", "--y", "0,-1", "--T", "-1;0")
    assert json.loads(out)[0]["member"] is True
    code, out, _ = run(capsys, "epi", ex_file, "--L", "1;0", "--y", "0,-1", "--T=-1;0", "--shifted")
    assert json.loads(out)[0]["member"] is False


def test_cli_certify_and_verify(capsys, ex_file, tmp_path):
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "certify", ex_file, "--point", "0", "--out", str(cert))
    assert code == 0 and cert.exists()
    code, out, _ = run(capsys, "verify", ex_file, str(cert))
    assert code == 0 and json.loads(out)["ok"]


def test_cli_certify_non_minimal_fails(capsys, tmp_path):
    doc = json.loads(json.dumps(EX_DOC))
    doc["maps"]["F"] = {"matrix": [[1], [1]], "offset": [0, 0]}
    path = tmp_path / "diag.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "certify", str(path), "--point", "1")
    d = json.loads(out)
    assert code == 1 and not d["certified"] and "weak solution" in d["reason"]


def test_cli_farkas_queries_file(capsys, ex_file, tmp_path):
    qf = tmp_path / "q.json"
    qf.write_text(json.dumps([{"L": [[0], [0]], "y": [0, 0]}, {"L": [[1], [0]], "y": [0, -1]}]))
    code, out, _ = run(capsys, "farkas", ex_file, "--queries", str(qf))
    d = json.loads(out)
    assert code == 0 and d["violations"] == 0
    assert [r["b1"] for r in d["audits"]] == [True, False]


def test_cli_parallel_matches_serial(capsys, ex_file, tmp_path):
    qf = tmp_path / "q.json"
    qs = [{"L": [[a], [b]], "y": [1, -1]} for a in (-1, 0, 1) for b in (-1, 0, 1)]
    qf.write_text(json.dumps(qs))
    _, serial, _ = run(capsys, "epi", ex_file, "--queries", str(qf))
    _, par, _ = run(capsys, "epi", ex_file, "--queries", str(qf), "--jobs", "2")
    assert serial == par


def test_cli_duality_and_examples(capsys, ex_file):
    code, out, _ = run(capsys, "duality", ex_file, "--point", "2", "--samples", "10", "--seed", "1")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "examples", "1")
    assert code == 0 and json.loads(out)[0]["disagreements"] == []


def test_cli_order_and_classify(capsys):
    code, out, _ = run(capsys, "order", "wmax", "--points", "[[0,0],[1,-1],[-1,1],[-1,-1]]")
    assert code == 0 and len(json.loads(out)["wmax"]) == 3
    code, out, _ = run(capsys, "classify", "--T", "1;-1")
    assert json.loads(out) == {"in_dom": True, "in_dom_M": False, "smax_zero": False}


def test_cli_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema_version": 1, "dims": {"n": 1, "m": 2, "p": 1}, "x": 0.5}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "float" in err
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, err = run(capsys, "order", "wmax", "--points", "[[0,0,0]]", "--plot", "csv")
    assert code == 1 and "plot data unavailable" in err
