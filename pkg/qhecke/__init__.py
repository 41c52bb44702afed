"""qhecke: exact Hecke algebras and quantum groups of type A.

Hecke algebra arithmetic over Q(v), Murphy-operator idempotents, conditional
traces and quantum dimensions, fusion rules, Hecke symmetries and their Haar
integrals.
"""

__version__ = "0.1.0"

from .arithmetic import EXACT, Arithmetic, ArithmeticMode
from .exceptions import (
    CapExceeded,
    ConfigError,
    CrossCheckFailed,
    DegreeMismatch,
    DenominatorVanishes,
    IndexOutOfRange,
    LengthExceedsRank,
    NotClosed,
    NotEven,
    NotHecke,
    NotYangBaxter,
    ParseError,
    QHeckeError,
    SizeMismatch,
)
from .hecke import HeckeAlgebra, HeckeElement, get_algebra
from .models import IdempotentKey, RankContext
from .rmatrix import HeckeSymmetry, certify, drinfeld_jimbo, super_symmetry
from .scalar import ScalarQ, q, q_factorial, q_integer, specialize, v
from .symmetric import Permutation, symmetric_group
from .tableaux import Partition, StandardTableau, ZPartition
from .tensor import TensorOperator

__all__ = [
    "EXACT",
    "Arithmetic",
    "ArithmeticMode",
    "QHeckeError",
    "CapExceeded",
    "ConfigError",
    "CrossCheckFailed",
    "DegreeMismatch",
    "DenominatorVanishes",
    "IndexOutOfRange",
    "LengthExceedsRank",
    "NotClosed",
    "NotEven",
    "NotHecke",
    "NotYangBaxter",
    "ParseError",
    "SizeMismatch",
    "HeckeAlgebra",
    "HeckeElement",
    "get_algebra",
    "IdempotentKey",
    "RankContext",
    "HeckeSymmetry",
    "certify",
    "drinfeld_jimbo",
    "super_symmetry",
    "ScalarQ",
    "q",
    "q_factorial",
    "q_integer",
    "specialize",
    "v",
    "Permutation",
    "symmetric_group",
    "Partition",
    "StandardTableau",
    "ZPartition",
    "TensorOperator",
]
