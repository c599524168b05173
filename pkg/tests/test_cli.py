import json
import os
import subprocess
import sys

import pytest

from tropalg.cli import EXIT_COMPUTE, EXIT_FAIL, EXIT_OK, EXIT_USAGE, run

FIX_A = {"semiring": "smax", "entries": [["3", "2o"], ["1", "1"]]}
FIX_A_RMAX = {"semiring": "rmax", "entries": [["3", "2"], ["1", "1"]]}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, doc in {"a": FIX_A, "r": FIX_A_RMAX,
                      "pos": {"semiring": "rmax", "entries": [["1"]]},
                      "b": {"semiring": "smax", "entries": [["0", "~0", "-inf"], ["0", "0", "~0"], ["0", "0", "0"]]}
                      }.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(doc))
        out[name] = str(p)
    return out


def ok(argv):
    code, out, err = run(argv)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_det_per(files):
    assert ok(["det", files["a"]]) == {"semiring": "smax", "value": "4"}
    assert ok(["per", files["r"]]) == {"semiring": "rmax", "value": "4"}


def test_qinv_and_adjoint(files):
    assert ok(["qinv", files["a"]]) == {"semiring": "smax", "entries": [["-3", "-2o"], ["~-3", "-1"]]}
    assert ok(["adjoint", files["a"]]) == {"semiring": "smax", "entries": [["1", "2o"], ["~1", "3"]]}


def test_compound(files):
    doc = ok(["compound", "--k", "2", files["b"]])
    assert doc["entries"] == [["0", "~0", "0"], ["0", "0", "~0"], ["0o", "0", "0"]]
    assert doc["index"] == [[1, 2], [1, 3], [2, 3]]
    code, _, err = run(["compound", "--k", "4", files["b"]])
    assert code == EXIT_USAGE


def test_charpoly_and_eigen(files):
    assert ok(["charpoly", files["a"]]) == {"semiring": "smax", "coeffs": ["4", "~3", "0"]}
    assert ok(["eigen", files["a"]])["roots"] == [{"value": "3"}, {"value": "1"}]
    assert ok(["eigen", files["r"]])["roots"] == [{"value": "3", "multiplicity": 1}, {"value": "1", "multiplicity": 1}]


def test_semiring_lift(files):
    assert ok(["charpoly", "--semiring", "supertropical", files["r"]])["semiring"] == "supertropical"
    code, _, err = run(["det", "--semiring", "rmax", files["a"]])
    assert code == EXIT_USAGE and json.loads(err)["error"] == "KindMismatch"


def test_definite_form_and_star(files):
    doc = ok(["definite-form", files["r"]])
    assert doc["definite"]["entries"] == [["0", "-1"], ["0", "0"]]
    assert doc["normalizer"]["entries"] == [["3", "-inf"], ["-inf", "1"]]
    code, _, err = run(["star", files["pos"]])
    assert code == EXIT_COMPUTE and json.loads(err)["error"] == "Divergent"


def test_check(files):
    doc = ok(["check", "--id", "JACOBI", files["a"]])
    assert doc["status"] == "pass"
    assert ok(["check", "--id", "SIGN_LEMMAS", "--n", "3", "--semiring", "smax"])["passed"] is True
    assert ok(["check", "--id", "CHARPOLY_REL", "--m", "2", files["a"]])["status"] == "pass"
    code, _, _ = run(["check", "--id", "DET_AB", files["a"]])
    assert code == EXIT_USAGE
    code, _, _ = run(["check", "--id", "NOPE", files["a"]])
    assert code == EXIT_USAGE


def test_check_failure_exit_code(files, monkeypatch):
    import tropalg.identities as ids
    real = ids.quasi_inverse

    def broken(A):
        Q = real(A)
        mag = Q.mag.copy()
        mag[0, 0] += Q.den
        return type(Q)(Q.kind, mag, Q.tag, Q.den)

    monkeypatch.setattr(ids, "quasi_inverse", broken)
    code, out, _ = run(["check", "--id", "QUASI_IDENTITY", files["a"]])
    assert code == EXIT_FAIL
    assert json.loads(out)["witness"]


def test_usage_errors(files, tmp_path):
    assert run([])[0] == EXIT_USAGE
    assert run(["bogus"])[0] == EXIT_USAGE
    assert run(["det", str(tmp_path / "missing.json")])[0] == EXIT_USAGE
    bad = tmp_path / "bad.json"
    bad.write_text('{"semiring":"smax","entries":[["5v"]]}')
    code, _, err = run(["det", str(bad)])
    assert code == EXIT_USAGE
    assert json.loads(err) == {"error": "ParseError", "message": json.loads(err)["message"], "line": 1, "column": 1}


def test_suite_verb_is_byte_identical(monkeypatch):
    argv = ["suite", "--sizes", "2", "--trials", "3", "--no-grid", "--ids", "DET_AB,JACOBI"]
    a = run(argv)
    b = run(argv)
    assert a == b and a[0] == EXIT_OK
    lines = a[1].splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["ok"] and summary["seed"] == 1
    monkeypatch.setenv("TROPALG_SEED", "9")
    assert json.loads(run(argv)[1].splitlines()[-1])["summary"]["seed"] == 9
    monkeypatch.setenv("TROPALG_SEED", "x")
    assert run(argv)[0] == EXIT_USAGE


def test_console_script_stdin():
    env = dict(os.environ)
    p = subprocess.run([sys.executable, "-m", "tropalg.cli", "det"], input=json.dumps(FIX_A),
                       capture_output=True, text=True, env=env)
    assert p.returncode == 0
    assert json.loads(p.stdout) == {"semiring": "smax", "value": "4"}
    q = subprocess.run([sys.executable, "-m", "tropalg.cli", "det"], input=json.dumps(FIX_A),
                       capture_output=True, text=True, env=env)
    assert p.stdout == q.stdout
