"""Arithmetic modes and the per-run arithmetic context."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Optional

from sympy import QQ

from .exceptions import CapExceeded, ConfigError, DenominatorVanishes
from .scalar import (
    SCALAR_DOMAIN,
    SCALAR_FIELD,
    geometric_q_integer,
    is_scalar,
    specialize,
    to_qq,
    v as exact_v,
)

DEFAULT_MAX_TENSOR_ENTRIES = 2**26


class ArithmeticMode(Enum):
    """Coefficient arithmetic used by a computation."""

    EXACT = "exact"
    """Coefficients in Q(v); results are authoritative."""

    NUMERIC = "numeric"
    """Coefficients in Q, every scalar evaluated at a fixed rational v0.
    Intended for degrees where exact rational functions grow too large."""

    @property
    def default_degree_cap(self) -> int:
        return 6 if self is ArithmeticMode.EXACT else 7


@dataclass(frozen=True)
class Arithmetic:
    """Coefficient arithmetic plus the size limits enforced under it.

    Attributes:
        mode: Exact or numeric.
        v0: Evaluation point for numeric mode (positive, not 1).
        max_degree: Hecke algebra degree cap; defaults per mode.
        max_tensor_entries: Cap on d**(2n) for operators on V^n.
    """

    mode: ArithmeticMode = ArithmeticMode.EXACT
    v0: Optional[Fraction] = None
    max_degree: Optional[int] = None
    max_tensor_entries: int = DEFAULT_MAX_TENSOR_ENTRIES

    def __post_init__(self):
        if self.mode is ArithmeticMode.NUMERIC:
            if self.v0 is None or self.v0 <= 0 or self.v0 == 1:
                raise ConfigError(f"numeric mode needs a positive v0 != 1, got {self.v0}")
        elif self.v0 is not None:
            raise ConfigError("v0 is only meaningful in numeric mode")

    @classmethod
    def numeric(cls, v0: Fraction = Fraction(3, 2), **caps) -> "Arithmetic":
        return cls(mode=ArithmeticMode.NUMERIC, v0=Fraction(v0), **caps)

    @property
    def is_exact(self) -> bool:
        return self.mode is ArithmeticMode.EXACT

    @property
    def degree_cap(self) -> int:
        return self.max_degree if self.max_degree is not None else self.mode.default_degree_cap

    @property
    def tag(self) -> str:
        """Stable label used in cache paths and reports."""
        if self.is_exact:
            return "exact"
        return f"numeric-{self.v0.numerator}_{self.v0.denominator}"

    @property
    def domain(self):
        return SCALAR_DOMAIN if self.is_exact else QQ

    @cached_property
    def zero(self):
        return SCALAR_FIELD.zero if self.is_exact else QQ.zero

    @cached_property
    def one(self):
        return SCALAR_FIELD.one if self.is_exact else QQ.one

    @cached_property
    def v(self):
        return exact_v if self.is_exact else to_qq(self.v0)

    @cached_property
    def q(self):
        return self.v**2

    def rational(self, numerator: int, denominator: int = 1):
        value = QQ(numerator, denominator)
        return SCALAR_FIELD.ground_new(value) if self.is_exact else value

    def coerce(self, value):
        """Bring an int, Fraction, QQ element or Q(v) element into this arithmetic."""
        if is_scalar(value):
            return value if self.is_exact else specialize(value, self.v0)
        value = to_qq(value)
        return SCALAR_FIELD.ground_new(value) if self.is_exact else value

    def v_power(self, k: int):
        return self.v**k if k >= 0 else self.one / self.v ** (-k)

    def q_power(self, k: int):
        return self.v_power(2 * k)

    def q_integer(self, n: int):
        return geometric_q_integer(n, self.one, self.q)

    def q_factorial(self, n: int):
        result = self.one
        step = 1 if n >= 0 else -1
        for k in range(step, n + step, step):
            result *= self.q_integer(k)
        return result

    def divide(self, numerator, denominator):
        """Exact division that reports a vanishing numeric denominator."""
        if not denominator:
            raise DenominatorVanishes(f"division by zero in {self.tag} arithmetic")
        return numerator / denominator

    def check_degree(self, n: int) -> None:
        if n > self.degree_cap:
            raise CapExceeded("max_degree", self.degree_cap, n)

    def check_tensor(self, d: int, n: int) -> None:
        entries = d ** (2 * n)
        if entries > self.max_tensor_entries:
            raise CapExceeded("max_tensor_entries", self.max_tensor_entries, entries)


EXACT = Arithmetic()
