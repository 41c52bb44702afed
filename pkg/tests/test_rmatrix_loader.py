import json

import pytest
import yaml

from qhecke.arithmetic import Arithmetic
from qhecke.exceptions import NotHecke, ParseError
from qhecke.rmatrix import rank_of
from qhecke.scalar import q
from qhecke.utils.rmatrix_loader import (
    SymmetryLoader,
    load_symmetry,
    resolve_symmetry,
    save_symmetry,
    validate_rmatrix_document,
)

Q_ENTRY = {"num": {"low": 2, "coeffs": ["1"]}, "den": {"low": 0, "coeffs": ["1"]}}


def _write(path, content):
    path.write_text(json.dumps(content))
    return str(path)


def test_builtin_names():
    assert SymmetryLoader.builtin("builtin:dj3").d == 3
    assert SymmetryLoader.builtin("builtin:super1_1").name == "builtin:super1_1"
    with pytest.raises(ParseError):
        SymmetryLoader.builtin("builtin:so3")


def test_save_and_load(tmp_path, dj2):
    path = save_symmetry(dj2, str(tmp_path / "dj2.json"))
    loaded = load_symmetry(path)
    assert loaded.R == dj2.R
    assert loaded.name == "builtin:dj2"


def test_rank_one_document(tmp_path):
    path = _write(tmp_path / "line.json", {"d": 1, "entries": [{"k": 1, "l": 1, "i": 1, "j": 1, "c": Q_ENTRY}]})
    sym = load_symmetry(path)
    assert sym.R.entry((0, 0), (0, 0)) == q
    assert rank_of(sym).rank == 1


def test_yaml_documents_are_accepted(tmp_path):
    path = tmp_path / "line.yaml"
    path.write_text(yaml.safe_dump({"d": 1, "entries": [{"k": 1, "l": 1, "i": 1, "j": 1, "c": Q_ENTRY}]}))
    assert SymmetryLoader.load_file(str(path)).d == 1


def test_numeric_entries(tmp_path):
    numeric = Arithmetic.numeric()
    path = _write(tmp_path / "line.json", {"d": 1, "entries": [{"k": 1, "l": 1, "i": 1, "j": 1, "c": "9/4"}]})
    sym = resolve_symmetry(path, numeric)
    assert sym.R.trace() == numeric.q


def test_uncertified_resolution(tmp_path):
    path = _write(tmp_path / "one.json", {"d": 1, "entries": [{"k": 1, "l": 1, "i": 1, "j": 1, "c": 1}]})
    assert SymmetryLoader.resolve(path, check=False).d == 1
    with pytest.raises(NotHecke):
        SymmetryLoader.resolve(path)


def test_schema_errors():
    assert validate_rmatrix_document({"d": 2, "entries": []}) == []
    errors = validate_rmatrix_document({"entries": [{"k": 0, "l": 1, "i": 1, "j": 1, "c": 1}]})
    assert any("'d' is a required property" in error for error in errors)
    assert any(error.startswith("entries/0/k") for error in errors)


def test_invalid_documents(tmp_path):
    with pytest.raises(ParseError):
        SymmetryLoader.load_file(str(tmp_path / "missing.json"))
    with pytest.raises(ParseError):
        SymmetryLoader.load_file(_write(tmp_path / "list.json", [1, 2]))
    with pytest.raises(ParseError):
        SymmetryLoader.from_document({"d": 1, "entries": [{"k": 2, "l": 1, "i": 1, "j": 1, "c": 1}]}, "big")
    duplicate = {"k": 1, "l": 1, "i": 1, "j": 1, "c": 1}
    with pytest.raises(ParseError):
        SymmetryLoader.from_document({"d": 1, "entries": [duplicate, dict(duplicate)]}, "twice")
    with pytest.raises(ParseError):
        SymmetryLoader.from_document({"d": 1, "entries": [{"k": 1, "l": 1, "i": 1, "j": 1, "c": "q"}]}, "symbolic")
