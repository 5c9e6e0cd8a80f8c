"""Rewrite the CLI golden files.  Run from the repository root:

    python3 tests/golden/regenerate.py

Only do this after confirming that a change in output is intended.
"""
import io
import pathlib

from gradmod.cli import main

HERE = pathlib.Path(__file__).resolve().parent
DATA = HERE.parent / "data"
REFERENCE = ["a_inner_pauli", "a_outer", "b_inner", "c_inner", "d_inner", "d_outer"]
VERBS = ["validate", "invariant", "sweep", "check"]


def run(verb, name, fmt):
    out, err = io.StringIO(), io.StringIO()
    code = main([verb, str(DATA / f"{name}.json"), "--format", fmt], out, err)
    return code, out.getvalue()


def golden_path(verb, name, fmt):
    return HERE / f"{name}.{verb}.{'json' if fmt == 'json' else 'txt'}"


if __name__ == "__main__":
    for name in REFERENCE:
        for verb in VERBS:
            for fmt in ("json", "text"):
                code, text = run(verb, name, fmt)
                assert code == 0, (name, verb, code)
                golden_path(verb, name, fmt).write_text(text, encoding="utf-8")
