import json

import pytest

from gradmod.corpus import standard_corpus
from gradmod.io import (SpecParseError, dumps, load_spec, loads_document, save_spec,
                        spec_from_dict, spec_to_dict)

PAULI_DOC = {
    "schema_version": "1", "group": [2, 2], "series": "A", "variant": "inner", "rank": 1,
    "brauer": {"basis": [[1, 0], [0, 1]], "beta": [["0/1", "1/2"], ["1/2", "0/1"]]},
    "xi": [[0, 0]],
}


@pytest.mark.parametrize("name,spec", standard_corpus(seed=0, size="small"))
def test_round_trip(name, spec):
    doc = spec_to_dict(spec)
    assert spec_from_dict(json.loads(dumps(doc))) == spec
    assert spec_to_dict(spec_from_dict(doc)) == doc


def test_save_and_load(tmp_path):
    spec = spec_from_dict(PAULI_DOC)
    path = tmp_path / "pauli.json"
    save_spec(spec, path)
    assert load_spec(path) == spec
    assert path.read_text().endswith("}\n")


def test_optional_keys_accepted():
    spec, doc = loads_document(json.dumps({**PAULI_DOC, "lambda": [1], "name": "x"}))
    assert spec.rank == 1 and doc["lambda"] == [1]


@pytest.mark.parametrize("patch,where", [
    ({"colour": 1}, "$"),
    ({"schema_version": "2"}, "schema_version"),
    ({"series": "E"}, "series"),
    ({"group": []}, "group"),
    ({"group": [1, 2]}, "group"),
    ({"rank": "1"}, "rank"),
    ({"xi": [[0, 2]]}, "xi[0]"),
    ({"xi": [[0]]}, "xi[0]"),
    ({"xi": [[0, True]]}, "xi[0][1]"),
])
def test_rejections(patch, where):
    with pytest.raises(SpecParseError) as info:
        spec_from_dict({**PAULI_DOC, **patch})
    assert info.value.where == where


def test_missing_key():
    doc = dict(PAULI_DOC)
    del doc["xi"]
    with pytest.raises(SpecParseError, match="missing keys"):
        spec_from_dict(doc)


def test_bad_qz():
    doc = {**PAULI_DOC, "brauer": {"basis": [[1, 0], [0, 1]], "beta": [["0", 0.5], ["1/2", "0"]]}}
    with pytest.raises(SpecParseError) as info:
        spec_from_dict(doc)
    assert info.value.where == "brauer.beta[0][1]"


def test_json_error_position():
    with pytest.raises(SpecParseError) as info:
        loads_document('{\n  "group": [2,\n}')
    assert info.value.where.startswith("line 3 column")
    with pytest.raises(SpecParseError, match="JSON object"):
        loads_document("[1, 2]")
