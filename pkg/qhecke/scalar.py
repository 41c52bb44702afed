"""Exact arithmetic in Q(v) with q = v**2.

Every coefficient in the library is an element of ``SCALAR_FIELD``, the sympy
rational function field in ``v`` over QQ. Elements are canonical after every
operation (sympy cancels numerator and denominator), so equality is decided by
representation.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from sympy import QQ, Symbol
from sympy.polys.fields import FracElement

from .exceptions import DenominatorVanishes

logger = logging.getLogger(__name__)

V_SYMBOL = Symbol("v")
SCALAR_DOMAIN = QQ.frac_field(V_SYMBOL)
SCALAR_FIELD = SCALAR_DOMAIN.field
ScalarQ = FracElement

v = SCALAR_FIELD.gens[0]
q = v**2

Rational = Union[int, Fraction]


def is_scalar(value) -> bool:
    """True for elements of Q(v), False for plain rationals."""
    return isinstance(value, FracElement) and value.field == SCALAR_FIELD


def geometric_q_integer(n: int, one, q_value):
    """[n] = (q^n - 1)/(q - 1) as a geometric sum, for any ring with a q."""
    total = one * 0
    if n >= 0:
        power = one
        for _ in range(n):
            total += power
            power = power * q_value
        return total
    inverse = one / q_value
    power = inverse
    for _ in range(-n):
        total -= power
        power = power * inverse
    return total


def q_integer(n: int) -> ScalarQ:
    """Return [n]_q in Q(v)."""
    return geometric_q_integer(n, SCALAR_FIELD.one, q)


def q_factorial(n: int) -> ScalarQ:
    """Return [n]_q! for n >= 0 and [-1]_q[-2]_q...[n]_q for n < 0."""
    result = SCALAR_FIELD.one
    step = 1 if n >= 0 else -1
    for k in range(step, n + step, step):
        result *= q_integer(k)
    return result


def _evaluate_poly(poly, point):
    total = QQ.zero
    for (exponent,), coeff in poly.terms():
        total += coeff * point**exponent
    return total


def specialize(x: ScalarQ, v0) -> "QQ.dtype":
    """Evaluate ``x`` at v = v0.

    Args:
        x: Element of Q(v).
        v0: Rational point, as a Fraction, int or QQ element.

    Returns:
        The value as a QQ element.

    Raises:
        DenominatorVanishes: If the reduced denominator of ``x`` is zero at v0.
    """
    point = to_qq(v0)
    denominator = _evaluate_poly(x.denom, point)
    if not denominator:
        raise DenominatorVanishes(f"denominator of {format_scalar(x)} vanishes at v = {point}")
    return _evaluate_poly(x.numer, point) / denominator


def to_qq(value):
    """Coerce an int, Fraction or QQ element into QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return value


def ratio_text(value) -> str:
    """Print a rational as "p" or "p/q"."""
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def monic_parts(x: ScalarQ) -> Tuple[Dict[int, object], Dict[int, object]]:
    """Split ``x`` into exponent->coefficient maps with a monic denominator.

    A monomial denominator v^k is folded into the numerator, which then carries
    negative exponents (Laurent form) and the denominator becomes {0: 1}.
    """
    numer, denom = x.numer, x.denom
    lead = denom.LC
    numerator = {monom[0]: coeff / lead for monom, coeff in numer.terms()}
    denominator = {monom[0]: coeff / lead for monom, coeff in denom.terms()}
    if len(denominator) == 1:
        (shift,) = denominator.keys()
        numerator = {exponent - shift: coeff for exponent, coeff in numerator.items()}
        denominator = {0: QQ.one}
    return numerator, denominator


def from_parts(numerator: Dict[int, object], denominator: Dict[int, object]) -> ScalarQ:
    """Inverse of ``monic_parts``; exponents may be negative."""
    return _laurent(numerator) / _laurent(denominator)


def _laurent(terms: Dict[int, object]) -> ScalarQ:
    total = SCALAR_FIELD.zero
    for exponent, coeff in terms.items():
        total += SCALAR_FIELD.ground_new(to_qq(coeff)) * v_power(exponent)
    return total


def v_power(k: int) -> ScalarQ:
    """v**k for any integer k."""
    if k >= 0:
        return v**k
    return SCALAR_FIELD.one / v ** (-k)


def _format_laurent(terms: Dict[int, object], halve: bool) -> str:
    if not terms:
        return "0"
    variable = "q" if halve else "v"
    pieces = []
    for exponent in sorted(terms):
        coeff = terms[exponent]
        power = exponent // 2 if halve else exponent
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        if power == 0:
            body = ratio_text(magnitude)
        else:
            monomial = variable if power == 1 else f"{variable}^{power}"
            body = monomial if magnitude == 1 else f"{ratio_text(magnitude)}*{monomial}"
        pieces.append((negative, body))
    first_negative, first_body = pieces[0]
    text = f"-{first_body}" if first_negative else first_body
    for negative, body in pieces[1:]:
        text += f" - {body}" if negative else f" + {body}"
    return text


def format_scalar(x: ScalarQ) -> str:
    """Canonical text: a Laurent expression in q when every v-exponent is even, else in v."""
    numerator, denominator = monic_parts(x)
    halve = all(e % 2 == 0 for e in numerator) and all(e % 2 == 0 for e in denominator)
    if denominator == {0: QQ.one}:
        return _format_laurent(numerator, halve)
    return f"({_format_laurent(numerator, halve)})/({_format_laurent(denominator, halve)})"


def format_value(value) -> str:
    """Format an exact scalar or a numeric-mode rational."""
    if is_scalar(value):
        return format_scalar(value)
    return ratio_text(value)


@dataclass(frozen=True)
class ScaledScalar:
    """A value v**shift * value with 0 <= shift < 1.

    Used where a closed formula needs a fractional power of q that Q(v) cannot hold.
    """

    shift: Fraction
    value: object

    @classmethod
    def from_exponent(cls, exponent: Fraction, factor, v_value) -> "ScaledScalar":
        """Fold the integer part of ``exponent`` into ``factor`` using ``v_value``."""
        whole = exponent.numerator // exponent.denominator
        fractional = exponent - whole
        power = v_value**whole if whole >= 0 else (v_value**0) / v_value ** (-whole)
        return cls(shift=fractional, value=factor * power)

    def __str__(self) -> str:
        body = format_value(self.value)
        if self.shift == 0:
            return body
        return f"v^({self.shift})*({body})"
