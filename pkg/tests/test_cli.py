import json
import subprocess
import sys

import pytest

from globcoalg import chain_to_json, globular_coalgebra, representable, rp2
from globcoalg.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def rp2_file(tmp_path):
    path = tmp_path / "rp2.json"
    path.write_text(json.dumps(rp2().to_json()))
    return str(path)


def test_orientals_json(capsys):
    code, out = call(capsys, "orientals", "--n", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 8 and len(doc["elements"]) == 8
    assert sum(e["generator"] for e in doc["elements"]) == 7


def test_compare_atoms_passes(capsys):
    code, out = call(capsys, "compare-atoms", "--n", "3")
    assert code == 0 and out.startswith("compare-atoms: PASS")


def test_sq_on_rp2(capsys, rp2_file):
    code, out = call(capsys, "sq", "--complex", rp2_file, "--k", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["ranks"] == [1, 1, 1]
    (deg1,) = [r for r in doc["squares"] if r["degree"] == 1]
    assert deg1["nonzero"] and deg1["class"] == [1]


def test_output_is_byte_identical(capsys, rp2_file):
    for argv in (["orientals", "--n", "3", "--format", "json"], ["sq", "--complex", rp2_file, "--k", "1"]):
        first = call(capsys, *argv)
        second = call(capsys, *argv)
        assert first == second


def test_validation_failure_exits_one(capsys, tmp_path):
    X = representable(2)
    doc = X.to_json()
    doc["t"]["t1"] = "s0"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out = call(capsys, "validate-globular", "--globular", str(path), "--format", "json")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_validators_pass(capsys):
    assert call(capsys, "validate-globular", "--n", "3", "--ring", "f2")[0] == 0
    assert call(capsys, "validate-coalgebra", "--n", "4")[0] == 0
    assert call(capsys, "validate-sadc", "--n", "4")[0] == 0


def test_parse_errors_exit_two(capsys, tmp_path):
    assert run(["orientals", "--n", "2", "--bogus"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["orientals", "--n", "2", "--bounds", "lots"]) == 2
    assert run(["orientals", "--n", "2", "--ring", "q"]) == 2
    garbage = tmp_path / "g.json"
    garbage.write_text("{not json")
    assert run(["sq", "--complex", str(garbage), "--k", "1"]) == 2
    assert run(["sq", "--complex", str(tmp_path / "missing.json"), "--k", "1"]) == 2
    capsys.readouterr()


def test_bound_exceeded_exits_three(capsys):
    assert run(["orientals", "--n", "3", "--bounds", "10,64"]) == 3
    assert "max_elements" in capsys.readouterr().err


def test_reconstruct_from_files(capsys, tmp_path):
    X = representable(2)
    Y = representable(2, truncation=3)
    K = globular_coalgebra(Y).complex
    assignment = {"s0": "s0", "t0": "t0", "s1": "t1", "t1": "t1"}
    doc = {
        "target": Y.to_json(),
        "assignment": {a: chain_to_json(K.basis_chain(b), K) for a, b in assignment.items()},
    }
    (tmp_path / "x.json").write_text(json.dumps(X.to_json()))
    (tmp_path / "f.json").write_text(json.dumps(doc))
    code, out = call(capsys, "reconstruct", "--globular", str(tmp_path / "x.json"),
                     "--map", str(tmp_path / "f.json"), "--format", "json")
    assert code == 0
    maps = json.loads(out)["maps"]
    assert maps[2]["x"] == "i(t1)"


def test_reconstruct_rejects_a_non_coalgebra_map(capsys, tmp_path):
    X = representable(1)
    K = globular_coalgebra(X).complex
    doc = {"target": X.to_json(), "assignment": {"s0": chain_to_json(K.basis_chain("t0"), K),
                                                 "t0": chain_to_json(K.basis_chain("t0"), K),
                                                 "x": chain_to_json(K.basis_chain("x"), K)}}
    (tmp_path / "x.json").write_text(json.dumps(X.to_json()))
    (tmp_path / "f.json").write_text(json.dumps(doc))
    assert run(["reconstruct", "--globular", str(tmp_path / "x.json"), "--map", str(tmp_path / "f.json")]) == 1
    capsys.readouterr()


def test_cup_i_single_cell(capsys):
    code, out = call(capsys, "cup-i", "--n", "2", "--k", "1", "--cell", "[0,1,2]")
    assert code == 0
    assert out.strip() == "[0,1,2]  [0,1]⊗[0,1,2] + [1,2]⊗[0,1,2] + [0,1,2]⊗[0,2]"


def test_xi_of_the_triangle(capsys):
    code, out = call(capsys, "xi", "--n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 8


def test_selftest_subset(capsys):
    code, out = call(capsys, "selftest", "--only", "2,6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [c["criterion"] for c in doc["criteria"]] == [2, 6]
    assert run(["selftest", "--only", "11"]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "globcoalg", "compare-atoms", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("compare-atoms: PASS")
