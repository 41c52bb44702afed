"""JSON codecs for scalars and Hecke elements, and argument parsing."""

import json
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from sympy import QQ

from ..exceptions import ParseError
from ..scalar import ScaledScalar, format_value, from_parts, is_scalar, monic_parts, ratio_text


def _poly_to_json(terms: Dict[int, Any]) -> Dict[str, Any]:
    if not terms:
        return {"low": 0, "coeffs": []}
    low, high = min(terms), max(terms)
    return {"low": low, "coeffs": [ratio_text(terms.get(e, QQ.zero)) for e in range(low, high + 1)]}


def _poly_from_json(payload: Dict[str, Any]) -> Dict[int, Any]:
    try:
        low = int(payload["low"])
        return {
            low + offset: parse_rational(text)
            for offset, text in enumerate(payload["coeffs"])
            if parse_rational(text) != 0
        }
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid polynomial {payload!r}: {str(e)}")


def scalar_to_json(x) -> Dict[str, Any]:
    numerator, denominator = monic_parts(x)
    return {"num": _poly_to_json(numerator), "den": _poly_to_json(denominator)}


def scalar_from_json(payload: Dict[str, Any]):
    try:
        numerator = _poly_from_json(payload["num"])
        denominator = _poly_from_json(payload["den"])
    except (KeyError, TypeError) as e:
        raise ParseError(f"invalid scalar {payload!r}: {str(e)}")
    if not denominator:
        raise ParseError("scalar with zero denominator")
    return from_parts(
        {e: QQ(c.numerator, c.denominator) for e, c in numerator.items()},
        {e: QQ(c.numerator, c.denominator) for e, c in denominator.items()},
    )


def value_to_json(value) -> Any:
    """Structured form of an exact scalar; "p/q" for a numeric one."""
    if is_scalar(value):
        return scalar_to_json(value)
    return ratio_text(value)


def value_from_json(payload: Any, arithmetic):
    if isinstance(payload, dict):
        return arithmetic.coerce(scalar_from_json(payload))
    return arithmetic.coerce(parse_rational(payload))


def value_summary(value) -> Dict[str, Any]:
    """Printed and structured forms together, as emitted by the CLI."""
    if isinstance(value, ScaledScalar):
        return {
            "value": str(value),
            "v_shift": str(value.shift),
            "scalar": value_to_json(value.value),
        }
    return {"value": format_value(value), "scalar": value_to_json(value)}


def hecke_to_json(element) -> Dict[str, Any]:
    return {
        "n": element.n,
        "terms": [{"w": w.one_line(), "c": value_to_json(c)} for w, c in element.sorted_terms()],
    }


def hecke_from_json(payload: Dict[str, Any], arithmetic):
    from ..hecke import get_algebra
    from ..symmetric import Permutation

    try:
        algebra = get_algebra(int(payload["n"]), arithmetic)
        terms = {}
        for term in payload["terms"]:
            w = Permutation.from_one_line(term["w"]) if payload["n"] else Permutation(())
            terms[w] = value_from_json(term["c"], arithmetic)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"invalid Hecke element: {str(e)}")
    return algebra.element(terms)


def parse_rational(text: Any) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"invalid rational {text!r}: {str(e)}")


def parse_int_list(text: str) -> List[int]:
    """Parse "[3,1,1]", "3,1,1" or "3 1 1"."""
    stripped = text.strip()
    if not stripped.startswith("["):
        stripped = "[" + ",".join(stripped.replace(",", " ").split()) + "]"
    try:
        values = json.loads(stripped)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid integer list {text!r}: {str(e)}")
    if not isinstance(values, list) or not all(isinstance(x, int) for x in values):
        raise ParseError(f"expected a list of integers, got {text!r}")
    return values


def parse_multi_index(text: str) -> Tuple[int, ...]:
    return tuple(parse_int_list(text)) if text.strip() else ()


def parse_integral_indices(text: str) -> Dict[str, Tuple[int, ...]]:
    """Parse "I=1,2;J=2,1;K=1,1;L=2,2" (K and L optional)."""
    indices: Dict[str, Tuple[int, ...]] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        name, sep, body = chunk.partition("=")
        name = name.strip().upper()
        if not sep or name not in ("I", "J", "K", "L"):
            raise ParseError(f"expected NAME=indices with NAME in I,J,K,L, got {chunk!r}")
        indices[name] = parse_multi_index(body)
    if "I" not in indices or "J" not in indices:
        raise ParseError("indices must name at least I and J")
    return indices


def dumps(payload: Any) -> str:
    """Canonical JSON text: sorted keys, fixed indentation."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
