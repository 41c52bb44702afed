"""Exact linear operators on V^{(x)n}, stored as sparse sympy domain matrices.

Rows are upper multi-indices and columns lower ones: for an operator built from
an R-matrix, entry ((k, l), (i, j)) is R^{kl}_{ij}. Multi-indices are 0-based
tuples flattened big-endian, so (i_1, ..., i_n) sits at sum_a i_a d^{n-a}.
"""

import logging
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .arithmetic import EXACT, Arithmetic
from .exceptions import DegreeMismatch, IndexOutOfRange, SingularOperator
from .scalar import format_value

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]


def flat_index(index: Sequence[int], d: int) -> int:
    position = 0
    for entry in index:
        if not 0 <= entry < d:
            raise IndexOutOfRange(f"index {entry + 1} outside 1..{d}")
        position = position * d + entry
    return position


def multi_index(position: int, d: int, n: int) -> MultiIndex:
    entries = []
    for _ in range(n):
        position, entry = divmod(position, d)
        entries.append(entry)
    return tuple(reversed(entries))


class TensorOperator:
    """An endomorphism of V^{(x)n} with dim V = d."""

    __slots__ = ("d", "n", "arithmetic", "matrix")

    def __init__(self, d: int, n: int, matrix: DomainMatrix, arithmetic: Arithmetic = EXACT):
        size = d**n
        if matrix.shape != (size, size):
            raise DegreeMismatch(f"matrix of shape {matrix.shape} is not an operator on V^{n} with d={d}")
        self.d = d
        self.n = n
        self.arithmetic = arithmetic
        self.matrix = matrix.to_sparse()

    # Construction

    @classmethod
    def from_flat(
        cls, d: int, n: int, entries: Mapping[Tuple[int, int], object], arithmetic: Arithmetic = EXACT
    ) -> "TensorOperator":
        arithmetic.check_tensor(d, n)
        rows: Dict[int, Dict[int, object]] = {}
        for (row, col), value in entries.items():
            value = arithmetic.coerce(value)
            if value:
                rows.setdefault(row, {})[col] = value
        size = d**n
        return cls(d, n, DomainMatrix(rows, (size, size), arithmetic.domain), arithmetic)

    @classmethod
    def from_entries(
        cls, d: int, n: int, entries: Mapping[Tuple[MultiIndex, MultiIndex], object], arithmetic: Arithmetic = EXACT
    ) -> "TensorOperator":
        """Build from 0-based (row multi-index, column multi-index) keys."""
        flat = {}
        for (row, col), value in entries.items():
            if len(row) != n or len(col) != n:
                raise DegreeMismatch(f"multi-index length differs from degree {n}")
            flat[(flat_index(row, d), flat_index(col, d))] = value
        return cls.from_flat(d, n, flat, arithmetic)

    @classmethod
    def identity(cls, d: int, n: int, arithmetic: Arithmetic = EXACT) -> "TensorOperator":
        return cls.from_flat(d, n, {(i, i): arithmetic.one for i in range(d**n)}, arithmetic)

    @classmethod
    def zero(cls, d: int, n: int, arithmetic: Arithmetic = EXACT) -> "TensorOperator":
        return cls.from_flat(d, n, {}, arithmetic)

    def _like(self, matrix: DomainMatrix, n: int = None) -> "TensorOperator":
        return TensorOperator(self.d, self.n if n is None else n, matrix, self.arithmetic)

    # Access

    @property
    def size(self) -> int:
        return self.d**self.n

    def flat_entries(self) -> Iterator[Tuple[int, int, object]]:
        for row, columns in self.matrix.rep.items():
            for col, value in columns.items():
                yield row, col, value

    def entry(self, row: Sequence[int], col: Sequence[int]):
        """Entry at 0-based multi-indices."""
        columns = self.matrix.rep.get(flat_index(row, self.d), {})
        return columns.get(flat_index(col, self.d), self.arithmetic.zero)

    def sorted_entries(self) -> List[Tuple[Tuple[MultiIndex, MultiIndex], object]]:
        return [
            ((multi_index(row, self.d, self.n), multi_index(col, self.d, self.n)), value)
            for row, col, value in sorted(self.flat_entries(), key=lambda item: (item[0], item[1]))
        ]

    def nnz(self) -> int:
        return sum(len(columns) for columns in self.matrix.rep.values())

    def is_zero(self) -> bool:
        return self.nnz() == 0

    def residual(self, limit: int = 20) -> List[Tuple[str, str]]:
        """Nonzero entries as (1-based index label, printed value) pairs."""
        labels = []
        for (row, col), value in self.sorted_entries()[:limit]:
            upper = ",".join(str(i + 1) for i in row)
            lower = ",".join(str(j + 1) for j in col)
            labels.append((f"[{upper}|{lower}]", format_value(value)))
        return labels

    # Arithmetic

    def _check(self, other: "TensorOperator") -> None:
        if (self.d, self.n) != (other.d, other.n):
            raise DegreeMismatch(f"operators on V^{self.n} (d={self.d}) and V^{other.n} (d={other.d})")

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        return self._like(self.matrix + other.matrix)

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        return self._like(self.matrix - other.matrix)

    def __neg__(self) -> "TensorOperator":
        return self._like(-self.matrix)

    def scale(self, scalar) -> "TensorOperator":
        scalar = self.arithmetic.coerce(scalar)
        if not scalar:
            return TensorOperator.zero(self.d, self.n, self.arithmetic)
        return self._like(self.matrix.mul(scalar))

    def __matmul__(self, other: "TensorOperator") -> "TensorOperator":
        self._check(other)
        return self._like(self.matrix.matmul(other.matrix))

    def __mul__(self, other):
        if isinstance(other, TensorOperator):
            return self @ other
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.d, self.n) == (other.d, other.n) and self.matrix.rep == other.matrix.rep

    __hash__ = None

    def __repr__(self) -> str:
        return f"TensorOperator(d={self.d}, n={self.n}, nnz={self.nnz()})"

    def kron(self, other: "TensorOperator") -> "TensorOperator":
        """self (x) other on V^{self.n + other.n}."""
        if self.d != other.d:
            raise DegreeMismatch(f"local dimensions {self.d} and {other.d} differ")
        self.arithmetic.check_tensor(self.d, self.n + other.n)
        width = other.size
        entries = {}
        for row_a, col_a, value_a in self.flat_entries():
            for row_b, col_b, value_b in other.flat_entries():
                entries[(row_a * width + row_b, col_a * width + col_b)] = value_a * value_b
        return TensorOperator.from_flat(self.d, self.n + other.n, entries, self.arithmetic)

    def local(self, position: int, n: int) -> "TensorOperator":
        """Act on factors position..position+self.n-1 (1-based) of V^n, identity elsewhere."""
        if not 1 <= position <= n - self.n + 1:
            raise IndexOutOfRange(f"cannot place an operator on V^{self.n} at {position} inside V^{n}")
        left = TensorOperator.identity(self.d, position - 1, self.arithmetic)
        right = TensorOperator.identity(self.d, n - self.n - position + 1, self.arithmetic)
        return left.kron(self).kron(right)

    def power(self, k: int) -> "TensorOperator":
        """self^{(x)k}; the scalar 1 on V^0 when k = 0."""
        result = TensorOperator.identity(self.d, 0, self.arithmetic)
        for _ in range(k):
            result = result.kron(self)
        return result

    def trace(self):
        total = self.arithmetic.zero
        for row, columns in self.matrix.rep.items():
            total += columns.get(row, self.arithmetic.zero)
        return total

    def transpose(self) -> "TensorOperator":
        return self._like(self.matrix.transpose())

    # Block structure

    def _blocks(self) -> List[Tuple[List[int], List[int]]]:
        """Connected components of the row/column incidence graph."""
        parent: Dict[Tuple[str, int], Tuple[str, int]] = {}

        def find(node):
            parent.setdefault(node, node)
            while parent[node] != node:
                parent[node] = parent[parent[node]]
                node = parent[node]
            return node

        for row, col, _ in self.flat_entries():
            a, b = find(("r", row)), find(("c", col))
            if a != b:
                parent[a] = b
        groups: Dict[Tuple[str, int], Tuple[List[int], List[int]]] = {}
        for node in list(parent):
            rows, cols = groups.setdefault(find(node), ([], []))
            (rows if node[0] == "r" else cols).append(node[1])
        return [(sorted(rows), sorted(cols)) for rows, cols in groups.values()]

    def _submatrix(self, rows: List[int], cols: List[int]) -> DomainMatrix:
        col_position = {col: j for j, col in enumerate(cols)}
        data = {}
        for i, row in enumerate(rows):
            columns = self.matrix.rep.get(row, {})
            if columns:
                data[i] = {col_position[col]: value for col, value in columns.items()}
        return DomainMatrix(data, (len(rows), len(cols)), self.arithmetic.domain)

    def rank(self) -> int:
        """Exact matrix rank, summed over independent blocks."""
        return sum(self._submatrix(rows, cols).rank() for rows, cols in self._blocks())

    def inverse(self) -> "TensorOperator":
        """Exact inverse, block by block.

        Raises:
            SingularOperator: If the operator is not invertible.
        """
        blocks = self._blocks()
        covered = sum(len(rows) for rows, _ in blocks)
        if covered != self.size:
            raise SingularOperator(f"{self!r} has zero rows")
        entries = {}
        for rows, cols in blocks:
            if len(rows) != len(cols):
                raise SingularOperator(f"{self!r} has a non-square block")
            try:
                block_inverse = self._submatrix(rows, cols).to_dense().inv()
            except DMNonInvertibleMatrixError as e:
                raise SingularOperator(f"{self!r} is singular: {str(e)}")
            for i, columns in block_inverse.to_sparse().rep.items():
                for j, value in columns.items():
                    entries[(cols[i], rows[j])] = value
        logger.debug(f"Inverted {self!r} in {len(blocks)} blocks")
        return TensorOperator.from_flat(self.d, self.n, entries, self.arithmetic)

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except SingularOperator:
            return False
        return True
