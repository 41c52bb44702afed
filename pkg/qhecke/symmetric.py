"""Symmetric group combinatorics: permutations, lengths, reduced words, cosets.

Permutations are one-line tuples. Composition applies the left factor first:
(u * w)(i) = w(u(i)). Under this convention u * s_i swaps the values i and i+1
in the one-line form of u, which is what right multiplication by a Hecke
generator needs.
"""

import logging
import threading
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations as _all_orderings
from typing import Dict, Iterator, List, Tuple

from .exceptions import DegreeMismatch, IndexOutOfRange, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ParseError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition v_i = (i, i+1) in S_n."""
        if not 1 <= i < n:
            raise IndexOutOfRange(f"generator v_{i} does not exist in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_one_line(cls, text: str) -> "Permutation":
        """Parse "3 2 1" (commas and brackets tolerated)."""
        cleaned = text.replace(",", " ").replace("[", " ").replace("]", " ").split()
        try:
            return cls(tuple(int(token) for token in cleaned))
        except ValueError as e:
            raise ParseError(f"invalid permutation {text!r}: {str(e)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise DegreeMismatch(f"cannot compose S_{self.n} with S_{other.n}")
        return Permutation(tuple(other.images[u - 1] for u in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for position, value in enumerate(self.images, start=1):
            images[value - 1] = position
        return Permutation(tuple(images))

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        images = self.images
        return sum(
            1 for a in range(len(images)) for b in range(a + 1, len(images)) if images[a] > images[b]
        )

    @cached_property
    def _positions(self) -> Tuple[int, ...]:
        return self.inverse().images

    def has_right_descent(self, i: int) -> bool:
        """True when length(self * v_i) < length(self)."""
        positions = self._positions
        return positions[i] < positions[i - 1]

    def times_simple(self, i: int) -> "Permutation":
        """self * v_i: swap the values i and i+1."""
        images = tuple(i + 1 if u == i else i if u == i + 1 else u for u in self.images)
        return Permutation(images)

    def fixes(self, point: int) -> bool:
        return self.images[point - 1] == point

    def restrict(self) -> "Permutation":
        """Drop the fixed top point: S_n -> S_{n-1}."""
        if not self.fixes(self.n):
            raise IndexOutOfRange(f"{self.one_line()} does not fix {self.n}")
        return Permutation(self.images[:-1])

    def extend(self, n: int, offset: int = 0) -> "Permutation":
        """Act on points offset+1..offset+self.n of {1..n}, fixing the rest."""
        if offset + self.n > n:
            raise IndexOutOfRange(f"cannot place S_{self.n} at offset {offset} inside S_{n}")
        head = tuple(range(1, offset + 1))
        body = tuple(offset + u for u in self.images)
        tail = tuple(range(offset + self.n + 1, n + 1))
        return Permutation(head + body + tail)

    def one_line(self) -> str:
        return " ".join(str(u) for u in self.images)

    def __str__(self) -> str:
        return self.one_line()


@dataclass
class SymmetricGroup:
    """All of S_n with lengths and reduced words, built once per degree."""

    n: int
    elements: Tuple[Permutation, ...]
    words: Dict[Permutation, Tuple[int, ...]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def reduced_word(self, w: Permutation) -> Tuple[int, ...]:
        return self.words[w]


_groups: Dict[int, SymmetricGroup] = {}
_groups_lock = threading.Lock()


def _build_group(n: int) -> SymmetricGroup:
    elements = sorted(
        (Permutation(images) for images in _all_orderings(range(1, n + 1))),
        key=lambda w: (w.length, w.images),
    )
    words: Dict[Permutation, Tuple[int, ...]] = {}
    for w in elements:
        if w.length == 0:
            words[w] = ()
            continue
        i = next(i for i in range(1, n) if w.has_right_descent(i))
        words[w] = words[w.times_simple(i)] + (i,)
    logger.debug(f"Built S_{n} with {len(elements)} elements")
    return SymmetricGroup(n=n, elements=tuple(elements), words=words)


def symmetric_group(n: int) -> SymmetricGroup:
    """Return the cached table for S_n."""
    if n < 0:
        raise IndexOutOfRange(f"negative degree {n}")
    group = _groups.get(n)
    if group is None:
        with _groups_lock:
            group = _groups.get(n)
            if group is None:
                group = _build_group(n)
                _groups[n] = group
    return group


def permutations(n: int) -> Iterator[Permutation]:
    """Enumerate S_n by length, then one-line order."""
    return iter(symmetric_group(n).elements)


def length(w: Permutation) -> int:
    return w.length


def reduced_word(w: Permutation) -> Tuple[int, ...]:
    """A reduced word (i_1, ..., i_k) with w = v_{i_1} * ... * v_{i_k}."""
    return symmetric_group(w.n).reduced_word(w)


def from_word(word: List[int], n: int) -> Permutation:
    result = Permutation.identity(n)
    for i in word:
        result = result.times_simple(i)
    return result


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation w_n."""
    if n < 1:
        raise IndexOutOfRange(f"longest element needs n >= 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def top_cycle(k: int, n: int) -> Permutation:
    """v_k v_{k+1} ... v_{n-1} in S_n; the identity when k = n."""
    return from_word(list(range(k, n)), n)


def coset_decompose(w: Permutation) -> Tuple[int, Permutation]:
    """Split w = (v_k ... v_{n-1}) * w1 with w1 fixing n and lengths adding.

    Returns:
        (k, w1) with w1 given as an element of S_{n-1}.
    """
    n = w.n
    if n < 1:
        raise IndexOutOfRange("coset decomposition needs n >= 1")
    for k in range(1, n + 1):
        w1 = top_cycle(k, n).inverse() * w
        if w1.fixes(n) and w.length == (n - k) + w1.length:
            return k, w1.restrict()
    raise AssertionError(f"no coset decomposition for {w}")
