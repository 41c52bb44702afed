"""Partitions, Z-partitions, standard tableaux and Littlewood-Richardson coefficients."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Optional, Tuple

from .exceptions import CapExceeded, IndexOutOfRange, LengthExceedsRank, ParseError, SizeMismatch

logger = logging.getLogger(__name__)

DEFAULT_TABLEAU_CAP = 12


@dataclass(frozen=True, order=True)
class Partition:
    """A partition; trailing zeros are dropped on construction."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"not a partition: {list(self.parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """lambda_i (1-based), zero beyond the length."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, r: int) -> Tuple[int, ...]:
        if self.length > r:
            raise LengthExceedsRank(f"{self} has more than {r} parts")
        return self.parts + (0,) * (r - self.length)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[Tuple[int, int]]:
        """(row, column), 1-based, in reading order."""
        for row, part in enumerate(self.parts, start=1):
            for column in range(1, part + 1):
                yield row, column

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, other.length + 1))

    def hook_lengths(self) -> List[int]:
        conjugate = self.conjugate()
        return [
            (self.part(row) - column) + (conjugate.part(column) - row) + 1 for row, column in self.cells()
        ]

    def count_standard_tableaux(self) -> int:
        """d_lambda by the hook-length formula."""
        product = 1
        for hook in self.hook_lengths():
            product *= hook
        return factorial(self.size) // product

    def contents(self) -> List[int]:
        return [column - row for row, column in self.cells()]

    def removable_rows(self) -> List[int]:
        return [row for row in range(1, self.length + 1) if self.part(row) > self.part(row + 1)]

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class ZPartition:
    """A non-increasing sequence of r integers."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"not a Z-partition: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_partition(cls, partition: Partition, r: int) -> "ZPartition":
        return cls(partition.padded(r))

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def normalized(self) -> Tuple[Partition, int]:
        """(lambda - lambda_r (1^r), lambda_r): a partition and a determinant power."""
        if not self.parts:
            return Partition(()), 0
        power = self.parts[-1]
        return Partition(tuple(p - power for p in self.parts)), power

    def shifted(self, k: int) -> "ZPartition":
        """Add k to every part (tensoring with the k-th determinant power)."""
        return ZPartition(tuple(p + k for p in self.parts))

    def dual(self) -> "ZPartition":
        return ZPartition(tuple(-p for p in reversed(self.parts)))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def as_zpartition(shape, r: int) -> ZPartition:
    """Accept a Partition or ZPartition and return a length-r ZPartition."""
    if isinstance(shape, ZPartition):
        if shape.r > r:
            raise LengthExceedsRank(f"{shape} has more than {r} parts")
        if shape.r < r:
            if shape.parts and shape.parts[-1] < 0:
                raise LengthExceedsRank(f"{shape} has negative parts but only {shape.r} of {r} entries")
            return ZPartition(shape.parts + (0,) * (r - shape.r))
        return shape
    return ZPartition.from_partition(shape, r)


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling of ``shape`` with 1..n, stored row by row."""

    shape: Partition
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def reading_word(self) -> Tuple[int, ...]:
        return tuple(entry for row in self.rows for entry in row)

    def position(self, m: int) -> Tuple[int, int]:
        for row_index, row in enumerate(self.rows, start=1):
            if m in row:
                return row_index, row.index(m) + 1
        raise IndexOutOfRange(f"{m} is not an entry of a tableau of size {self.shape.size}")


def _fillings(parts: Tuple[int, ...]) -> List[Tuple[Tuple[int, ...], ...]]:
    n = sum(parts)
    if n == 0:
        return [tuple(() for _ in parts)]
    result = []
    shape = Partition(parts)
    for row in shape.removable_rows():
        smaller = list(parts)
        smaller[row - 1] -= 1
        for rows in _fillings(tuple(smaller)):
            grown = list(rows)
            grown[row - 1] = grown[row - 1] + (n,)
            result.append(tuple(grown))
    return result


@lru_cache(maxsize=None)
def _standard_tableaux(shape: Partition) -> Tuple[StandardTableau, ...]:
    fillings = _fillings(shape.parts)
    tableaux = [StandardTableau(shape=shape, rows=rows) for rows in fillings]
    tableaux.sort(key=lambda t: t.reading_word)
    logger.debug(f"Enumerated {len(tableaux)} standard tableaux of shape {shape}")
    return tuple(tableaux)


def standard_tableaux(shape: Partition, cap: Optional[int] = None) -> Tuple[StandardTableau, ...]:
    """All standard tableaux of ``shape``, ordered lexicographically by row-reading word.

    Index 0 is the row-reading tableau (1..lambda_1 in the first row, and so on).
    """
    cap = DEFAULT_TABLEAU_CAP if cap is None else cap
    if shape.size > cap:
        raise CapExceeded("max_degree", cap, shape.size)
    return _standard_tableaux(shape)


def content(tableau: StandardTableau, m: int) -> int:
    """Column minus row of the cell holding m."""
    if not 1 <= m <= tableau.shape.size:
        raise IndexOutOfRange(f"{m} is outside 1..{tableau.shape.size}")
    row, column = tableau.position(m)
    return column - row


def partitions_of(n: int, max_length: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else max_part

    def build(remaining: int, bound: int, length_left: Optional[int]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if length_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            next_left = None if length_left is None else length_left - 1
            for rest in build(remaining - first, first, next_left):
                yield (first,) + rest

    for parts in build(n, max_part, max_length):
        yield Partition(parts)


def lr_coefficient(lam: Partition, mu: Partition, gamma: Partition) -> int:
    """c^gamma_{lambda mu}: LR fillings of gamma/lambda with content mu.

    Fillings are semistandard, and the word read right to left along rows, top to
    bottom, is a lattice word.
    """
    if gamma.size != lam.size + mu.size:
        raise SizeMismatch(f"|{gamma}| != |{lam}| + |{mu}|")
    if not gamma.contains(lam) or not gamma.contains(mu):
        return 0
    # Skew cells in reading order: rows top to bottom, right to left.
    cells = [
        (row, column)
        for row in range(1, gamma.length + 1)
        for column in range(gamma.part(row), lam.part(row), -1)
    ]
    weight = mu.parts
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(weight) + 1)

    def extend(position: int) -> int:
        if position == len(cells):
            return 1
        row, column = cells[position]
        total = 0
        upper = len(weight)
        right = filling.get((row, column + 1))
        if right is not None:
            upper = min(upper, right)
        above = filling.get((row - 1, column))
        lower = 1 if above is None else above + 1
        for value in range(lower, upper + 1):
            if counts[value] >= weight[value - 1]:
                continue
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue
            filling[(row, column)] = value
            counts[value] += 1
            total += extend(position + 1)
            counts[value] -= 1
            del filling[(row, column)]
        return total

    return extend(0)


def gl_dimension(shape: Partition, m: int) -> int:
    """s_lambda(1, ..., 1) with m ones: the dimension of the GL_m module."""
    if shape.length > m:
        return 0
    value = Fraction(1)
    for (row, column), hook in zip(shape.cells(), shape.hook_lengths()):
        value *= Fraction(m + column - row, hook)
    return int(value)
