import io
import json
import pathlib

import pytest

from gradmod.cli import SWEEP_CAP, main

DATA = pathlib.Path(__file__).resolve().parent / "data"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        code = main([str(a) for a in argv], out, err)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, doc, name="spec.json"):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc), encoding="utf-8")
    return path


def load(name):
    return json.loads((DATA / f"{name}.json").read_text())


def test_validate_ok():
    code, out, _ = run("validate", DATA / "b_inner.json")
    assert code == 0 and json.loads(out) == {"command": "validate", "valid": True, "violations": []}


def test_broken_chain_names_relation(tmp_path):
    doc = load("b_inner")
    doc["g0"] = [1, 0]
    code, out, _ = run("validate", write(tmp_path, doc))
    report = json.loads(out)
    assert code == 2 and not report["valid"]
    assert any("relation" in v for v in report["violations"])
    code, out, _ = run("invariant", write(tmp_path, doc), "--lambda", "1,0")
    assert code == 2


def test_parse_errors(tmp_path):
    code, out, err = run("validate", write(tmp_path, '{"group": [2,\n'))
    assert code == 1 and out == "" and "line 2 column" in err
    doc = load("b_inner")
    doc["colour"] = "red"
    code, _, err = run("validate", write(tmp_path, doc))
    assert code == 1 and "colour" in err
    code, _, err = run("validate", tmp_path / "missing.json")
    assert code == 1 and "cannot read" in err


def test_usage_errors():
    spec = DATA / "b_inner.json"
    assert run("frobnicate", spec)[0] == 1
    assert run("sweep", spec, "--bound", SWEEP_CAP + 1)[0] == 1
    assert run("sweep", spec, "--bound", -1)[0] == 1
    assert run("invariant", spec, "--lambda", "1,x")[0] == 1
    assert run("invariant", spec, "--lambda", "1,0,0")[0] == 1
    assert run("classify", spec, "--lambda", "1,0", "--shift", "0")[0] == 1


def test_invariant_and_defaults():
    code, out, _ = run("invariant", DATA / "a_inner_pauli.json", "--lambda", "1")
    rep = json.loads(out)
    assert code == 0 and rep["schur_index"] == 2 and rep["admits_grading"] is False
    # lambda falls back to the document
    code, out, _ = run("invariant", DATA / "a_inner_pauli.json")
    assert code == 0 and json.loads(out)["lambda"] == [3]


def test_classify():
    code, out, _ = run("classify", DATA / "a_inner_pauli.json", "--lambda", "2", "--shift", "1,0")
    assert code == 0 and json.loads(out)["command"] == "classify"
    code, text, _ = run("classify", DATA / "a_inner_pauli.json", "--lambda", "1", "--format", "text")
    assert code == 0 and "W(1)" in text


def test_flipped_orientation_is_informational():
    code, out, _ = run("check", DATA / "d_inner_flipped.json")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    entry = next(c for c in rep["checks"] if c["name"] == "half-spin assignment")
    assert entry["status"] == "info" and "swaps" in entry["detail"]


def test_cap_exceeded_skips():
    code, out, _ = run("check", DATA / "b_inner.json", "--max-dim", 4)
    rep = json.loads(out)
    assert code == 0
    assert any(c["status"] == "skip" for c in rep["checks"])


def test_text_format():
    code, text, _ = run("sweep", DATA / "b_inner.json", "--format", "text")
    assert code == 0 and text.splitlines()[-1] == "graded-simple modules with weight sum <= 2: 18"
    code, text, _ = run("check", DATA / "d_outer.json", "--format", "text")
    assert code == 0 and text.rstrip().endswith("all checks agree")


@pytest.mark.parametrize("verb", ["validate", "invariant", "sweep", "check"])
def test_deterministic(verb):
    first = run(verb, DATA / "d_inner.json")
    assert run(verb, DATA / "d_inner.json") == first
