"""Exceptions for the qhecke library."""

from typing import Any, Dict

from .cap_exceeded_error import CapExceeded
from .certification_error import CertificationError, NotHecke, NotYangBaxter
from .qhecke_error import QHeckeError


class DenominatorVanishes(QHeckeError):
    """Raised when a rational function is evaluated at a pole."""

    pass


class DegreeMismatch(QHeckeError):
    """Raised when operands live in algebras or tensor powers of different degree."""

    pass


class IndexOutOfRange(QHeckeError):
    """Raised for generator, Murphy or multi-index positions outside their range."""

    pass


class SizeMismatch(QHeckeError):
    """Raised when partition sizes are inconsistent, e.g. |gamma| != |lambda| + |mu|."""

    pass


class LengthExceedsRank(QHeckeError):
    """Raised when a (Z-)partition has more parts than the rank allows."""

    pass


class ParseError(QHeckeError):
    """Raised when a partition, permutation, scalar or R-matrix file cannot be parsed."""

    pass


class ConfigError(QHeckeError):
    """Raised when run configuration is invalid."""

    pass


class NotClosed(QHeckeError):
    """Raised when the contraction system defining P (or Q) is singular."""

    pass


class SingularOperator(QHeckeError):
    """Raised when an operator on a tensor power has no inverse."""

    pass


class NotEven(QHeckeError):
    """Raised when no rank was detected within the cutoff."""

    def __init__(self, cutoff: int, message: str = "", *args, **kwargs):
        super().__init__(message or f"NotEvenUpTo({cutoff})", *args, **kwargs)
        self.cutoff = cutoff

    def details(self) -> Dict[str, Any]:
        return {"cutoff": self.cutoff}


class CrossCheckFailed(QHeckeError):
    """Raised when two independent computations of the same quantity disagree."""

    def __init__(self, quantity: str, routes: tuple, message: str = "", *args, **kwargs):
        super().__init__(
            message or f"{quantity}: routes {routes[0]} and {routes[1]} disagree", *args, **kwargs
        )
        self.quantity = quantity
        self.routes = routes

    def details(self) -> Dict[str, Any]:
        return {"quantity": self.quantity, "routes": list(self.routes)}


__all__ = [
    "QHeckeError",
    "CapExceeded",
    "CertificationError",
    "NotYangBaxter",
    "NotHecke",
    "DenominatorVanishes",
    "DegreeMismatch",
    "IndexOutOfRange",
    "SizeMismatch",
    "LengthExceedsRank",
    "ParseError",
    "ConfigError",
    "NotClosed",
    "SingularOperator",
    "NotEven",
    "CrossCheckFailed",
]
