"""Utilities for resolving, loading and saving R-matrices."""

import logging
import os
import re
from typing import Any, Dict, List

import jsonschema
import yaml

from ..arithmetic import EXACT, Arithmetic
from ..exceptions import IndexOutOfRange, ParseError, QHeckeError
from ..rmatrix import HeckeSymmetry, certify, drinfeld_jimbo, super_symmetry
from ..tensor import TensorOperator
from .serialization import dumps, value_from_json, value_to_json

logger = logging.getLogger(__name__)

_POLY_SCHEMA = {
    "type": "object",
    "required": ["low", "coeffs"],
    "properties": {
        "low": {"type": "integer"},
        "coeffs": {"type": "array", "items": {"type": ["string", "integer"]}},
    },
}

RMATRIX_SCHEMA = {
    "type": "object",
    "required": ["d", "entries"],
    "properties": {
        "d": {"type": "integer", "minimum": 1, "description": "Dimension of V"},
        "name": {"type": "string"},
        "entries": {
            "type": "array",
            "items": {"$ref": "#/definitions/entry"},
            "description": "Nonzero entries R^{kl}_{ij}, 1-based",
        },
    },
    "definitions": {
        "entry": {
            "type": "object",
            "required": ["k", "l", "i", "j", "c"],
            "properties": {
                "k": {"type": "integer", "minimum": 1},
                "l": {"type": "integer", "minimum": 1},
                "i": {"type": "integer", "minimum": 1},
                "j": {"type": "integer", "minimum": 1},
                "c": {
                    "oneOf": [
                        {"type": "string"},
                        {"type": "integer"},
                        {
                            "type": "object",
                            "required": ["num", "den"],
                            "properties": {"num": _POLY_SCHEMA, "den": _POLY_SCHEMA},
                        },
                    ]
                },
            },
        }
    },
}

_DJ_NAME = re.compile(r"^builtin:dj(\d+)$")
_SUPER_NAME = re.compile(r"^builtin:super(\d+)_(\d+)$")


def validate_rmatrix_document(content: Any) -> List[str]:
    """Schema errors of an R-matrix document; empty when valid."""
    validator = jsonschema.Draft7Validator(RMATRIX_SCHEMA)
    return [f"{'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}" for e in validator.iter_errors(content)]


class SymmetryLoader:
    """Resolve ``builtin:*`` names and R-matrix files into certified Hecke symmetries."""

    @classmethod
    def builtin(cls, name: str, arithmetic: Arithmetic = EXACT) -> HeckeSymmetry:
        """Build ``builtin:djN`` or ``builtin:superM_N``.

        Raises:
            ParseError: If the name is not a known family.
        """
        match = _DJ_NAME.match(name)
        if match:
            return drinfeld_jimbo(int(match.group(1)), arithmetic)
        match = _SUPER_NAME.match(name)
        if match:
            return super_symmetry(int(match.group(1)), int(match.group(2)), arithmetic)
        raise ParseError(f"unknown builtin R-matrix {name!r}; expected builtin:djN or builtin:superM_N")

    @classmethod
    def from_document(cls, content: Dict[str, Any], name: str, arithmetic: Arithmetic = EXACT) -> HeckeSymmetry:
        """Build an uncertified symmetry from a parsed document.

        Raises:
            ParseError: If the document does not match the schema or an index exceeds d.
        """
        errors = validate_rmatrix_document(content)
        if errors:
            raise ParseError(f"invalid R-matrix document {name}: {'; '.join(errors)}")
        d = content["d"]
        entries = {}
        for entry in content["entries"]:
            indices = (entry["k"], entry["l"], entry["i"], entry["j"])
            if max(indices) > d:
                raise ParseError(f"entry {indices} exceeds d={d} in {name}")
            k, l, i, j = (x - 1 for x in indices)
            key = ((k, l), (i, j))
            if key in entries:
                raise ParseError(f"duplicate entry {indices} in {name}")
            entries[key] = value_from_json(entry["c"], arithmetic)
        try:
            R = TensorOperator.from_entries(d, 2, entries, arithmetic)
        except IndexOutOfRange as e:
            raise ParseError(f"invalid R-matrix {name}: {str(e)}")
        return HeckeSymmetry(name=content.get("name", name), d=d, R=R, arithmetic=arithmetic)

    @classmethod
    def load_file(cls, path: str, arithmetic: Arithmetic = EXACT) -> HeckeSymmetry:
        """Load a JSON (or YAML) R-matrix file without certifying it.

        Raises:
            ParseError: If the file is missing, unreadable or invalid.
        """
        if not os.path.exists(path):
            raise ParseError(f"R-matrix file not found: {path}")
        try:
            with open(path) as f:
                content = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as e:
            raise ParseError(f"Error loading R-matrix file {path}: {str(e)}")
        if not isinstance(content, dict):
            raise ParseError(f"R-matrix file {path} does not hold a mapping")
        logger.debug(f"Loaded R-matrix document from {path}")
        return cls.from_document(content, os.path.basename(path), arithmetic)

    @classmethod
    def resolve(cls, source: str, arithmetic: Arithmetic = EXACT, check: bool = True) -> HeckeSymmetry:
        """Resolve a builtin name or a file path, certifying the result unless ``check`` is False.

        Raises:
            ParseError: For unknown names or invalid files.
            NotYangBaxter, NotHecke, NotClosed: If certification fails.
        """
        if source.startswith("builtin:"):
            sym = cls.builtin(source, arithmetic)
        else:
            sym = cls.load_file(source, arithmetic)
        if check:
            certify(sym)
        return sym


def resolve_symmetry(source: str, arithmetic: Arithmetic = EXACT, check: bool = True) -> HeckeSymmetry:
    return SymmetryLoader.resolve(source, arithmetic, check)


def load_symmetry(path: str, arithmetic: Arithmetic = EXACT) -> HeckeSymmetry:
    """Load and certify an R-matrix file."""
    return certify(SymmetryLoader.load_file(path, arithmetic))


def symmetry_to_json(sym: HeckeSymmetry) -> Dict[str, Any]:
    entries = []
    for ((k, l), (i, j)), c in sym.R.sorted_entries():
        entries.append({"k": k + 1, "l": l + 1, "i": i + 1, "j": j + 1, "c": value_to_json(c)})
    return {"name": sym.name, "d": sym.d, "entries": entries}


def save_symmetry(sym: HeckeSymmetry, path: str) -> str:
    """Write the R-matrix in the loadable JSON layout.

    Raises:
        QHeckeError: If the file cannot be written.
    """
    try:
        with open(path, "w") as f:
            f.write(dumps(symmetry_to_json(sym)))
            f.write("\n")
    except OSError as e:
        raise QHeckeError(f"Could not write R-matrix file {path}: {str(e)}")
    logger.info(f"Saved {sym.name} to {path}")
    return path


__all__ = [
    "RMATRIX_SCHEMA",
    "SymmetryLoader",
    "load_symmetry",
    "resolve_symmetry",
    "save_symmetry",
    "symmetry_to_json",
    "validate_rmatrix_document",
]
