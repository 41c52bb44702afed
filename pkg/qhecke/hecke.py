"""The Hecke algebra H_n over Q(v), q = v**2.

Elements are sparse maps from permutations to coefficients. Products are
formed by right-multiplying with one generator at a time along reduced words,
sharing prefixes between basis elements of the right factor:

    T_w T_i = T_{w v_i}                      if l(w v_i) > l(w)
    T_w T_i = (q - 1) T_w + q T_{w v_i}      otherwise
"""

import logging
import threading
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .arithmetic import EXACT, Arithmetic
from .exceptions import DegreeMismatch, IndexOutOfRange
from .symmetric import Permutation, SymmetricGroup, longest_element, symmetric_group

logger = logging.getLogger(__name__)

Terms = Dict[Permutation, object]


def _add_into(target: Terms, key: Permutation, value) -> None:
    total = target[key] + value if key in target else value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class HeckeElement:
    """An immutable linear combination of basis elements T_w of one H_n."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "HeckeAlgebra", terms: Mapping[Permutation, object]):
        self.algebra = algebra
        self.terms: Terms = {w: c for w, c in terms.items() if c}

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def arithmetic(self) -> Arithmetic:
        return self.algebra.arithmetic

    def coefficient(self, w: Permutation):
        return self.terms.get(w, self.algebra.arithmetic.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> Tuple[Tuple[Permutation, object], ...]:
        return tuple(sorted(self.terms.items(), key=lambda item: (item[0].length, item[0].images)))

    def _same_algebra(self, other: "HeckeElement") -> None:
        if other.algebra is not self.algebra:
            raise DegreeMismatch(
                f"H_{self.n} ({self.arithmetic.tag}) and H_{other.n} ({other.arithmetic.tag}) differ"
            )

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._same_algebra(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(terms, w, c)
        return HeckeElement(self.algebra, terms)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, scalar) -> "HeckeElement":
        scalar = self.arithmetic.coerce(scalar)
        return HeckeElement(self.algebra, {w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"HeckeElement(n={self.n}, terms={len(self.terms)})"


class HeckeAlgebra:
    """H_n for one degree and one arithmetic.

    Instances are shared through ``get_algebra`` so that elements of the same
    algebra can be compared by identity of their parent.
    """

    def __init__(self, n: int, arithmetic: Arithmetic = EXACT):
        arithmetic.check_degree(n)
        self.n = n
        self.arithmetic = arithmetic
        self.group: SymmetricGroup = symmetric_group(n)
        self._identity = Permutation.identity(n)

    def __repr__(self) -> str:
        return f"HeckeAlgebra(n={self.n}, mode={self.arithmetic.tag})"

    # Construction

    def element(self, terms: Mapping[Permutation, object]) -> HeckeElement:
        for w in terms:
            if w.n != self.n:
                raise DegreeMismatch(f"{w} is not in S_{self.n}")
        return HeckeElement(self, {w: self.arithmetic.coerce(c) for w, c in terms.items()})

    def zero(self) -> HeckeElement:
        return HeckeElement(self, {})

    def one(self) -> HeckeElement:
        return HeckeElement(self, {self._identity: self.arithmetic.one})

    def scalar(self, c) -> HeckeElement:
        return HeckeElement(self, {self._identity: self.arithmetic.coerce(c)})

    def basis(self, w: Permutation) -> HeckeElement:
        if w.n != self.n:
            raise DegreeMismatch(f"{w} is not in S_{self.n}")
        return HeckeElement(self, {w: self.arithmetic.one})

    def generator(self, i: int) -> HeckeElement:
        if not 1 <= i < self.n:
            raise IndexOutOfRange(f"T_{i} does not exist in H_{self.n}")
        return self.basis(Permutation.simple(i, self.n))

    # Multiplication

    def _times_generator(self, terms: Terms, i: int) -> Terms:
        q = self.arithmetic.q
        out: Terms = {}
        for u, c in terms.items():
            us = u.times_simple(i)
            if u.has_right_descent(i):
                _add_into(out, u, (q - 1) * c)
                _add_into(out, us, q * c)
            else:
                _add_into(out, us, c)
        return out

    def _right_products(self, terms: Terms, support: Iterable[Permutation]) -> Dict[Permutation, Terms]:
        """terms * T_w for every w in ``support``, memoized along word prefixes."""
        products: Dict[Permutation, Terms] = {self._identity: terms}

        def product(w: Permutation) -> Terms:
            if w not in products:
                i = self.group.reduced_word(w)[-1]
                products[w] = self._times_generator(product(w.times_simple(i)), i)
            return products[w]

        for w in sorted(support, key=lambda w: w.length):
            product(w)
        return products

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        a._same_algebra(b)
        if a.algebra is not self:
            raise DegreeMismatch(f"element of H_{a.n} passed to H_{self.n}")
        if not a.terms or not b.terms:
            return self.zero()
        products = self._right_products(a.terms, b.terms.keys())
        out: Terms = {}
        for w, c in b.terms.items():
            for u, d in products[w].items():
                _add_into(out, u, d * c)
        return HeckeElement(self, out)

    def t_inverse(self, w: Permutation) -> HeckeElement:
        """T_w^{-1}, from T_i^{-1} = q^{-1} T_i - (1 - q^{-1}) T_e along a reduced word of w^{-1}."""
        arithmetic = self.arithmetic
        inverse_q = arithmetic.one / arithmetic.q
        correction = -(arithmetic.one - inverse_q)
        terms: Terms = {self._identity: arithmetic.one}
        for i in reversed(self.group.reduced_word(w)):
            shifted = self._times_generator(terms, i)
            out: Terms = {}
            for u, c in shifted.items():
                _add_into(out, u, inverse_q * c)
            for u, c in terms.items():
                _add_into(out, u, correction * c)
            terms = out
        return HeckeElement(self, terms)

    # Involution and form

    def star(self, a: HeckeElement) -> HeckeElement:
        return HeckeElement(self, {w.inverse(): c for w, c in a.terms.items()})

    def inner_product(self, a: HeckeElement, b: HeckeElement):
        """<a, b> = sum_w a_w b_w q^{l(w)}."""
        a._same_algebra(b)
        total = self.arithmetic.zero
        for w, c in a.terms.items():
            if w in b.terms:
                total += c * b.terms[w] * self.arithmetic.q_power(w.length)
        return total

    def trace(self, a: HeckeElement):
        """The symmetrizing trace: coefficient of T_e."""
        return a.coefficient(self._identity)

    # Distinguished elements

    def murphy(self, m: int) -> HeckeElement:
        """L_m = sum_{j<m} q^{j-m} T_{(j,m)}; L_1 = 0."""
        if not 1 <= m <= self.n:
            raise IndexOutOfRange(f"L_{m} does not exist in H_{self.n}")
        terms = {
            Permutation.transposition(j, m, self.n): self.arithmetic.q_power(j - m) for j in range(1, m)
        }
        return HeckeElement(self, terms)

    def symmetrizers(self) -> Tuple[HeckeElement, HeckeElement]:
        """(X_n, Y_n): the idempotents of the trivial and sign representations."""
        arithmetic = self.arithmetic
        factorial = arithmetic.q_factorial(self.n)
        x_scale = arithmetic.divide(arithmetic.one, factorial)
        y_scale = arithmetic.divide(arithmetic.q_power(self.n * (self.n - 1) // 2), factorial)
        minus_inverse_q = -(arithmetic.one / arithmetic.q)
        x_terms = {w: x_scale for w in self.group.elements}
        y_terms = {w: y_scale * minus_inverse_q**w.length for w in self.group.elements}
        return HeckeElement(self, x_terms), HeckeElement(self, y_terms)

    def longest_twist_inverse_square(self) -> HeckeElement:
        """T_{w_n}^{-2}."""
        if self.n == 0:
            return self.one()
        inverse = self.t_inverse(longest_element(self.n))
        return inverse * inverse

    def average(self, h: HeckeElement) -> HeckeElement:
        """sum_w q^{-l(w)} T_w h T_{w^{-1}}; central for every h."""
        total = self.zero()
        for w in self.group.elements:
            term = self.basis(w) * h * self.basis(w.inverse())
            total = total + term.scale(self.arithmetic.q_power(-w.length))
        return total

    # Changing degree

    def embed(self, a: HeckeElement, offset: int = 0) -> HeckeElement:
        """Image of a in H_n acting on strands offset+1..offset+a.n."""
        return HeckeElement(self, {w.extend(self.n, offset): c for w, c in a.terms.items()})


_algebras: Dict[Tuple[int, Arithmetic], HeckeAlgebra] = {}
_algebras_lock = threading.Lock()


def get_algebra(n: int, arithmetic: Arithmetic = EXACT) -> HeckeAlgebra:
    """The shared H_n for ``arithmetic``."""
    key = (n, arithmetic)
    algebra = _algebras.get(key)
    if algebra is None:
        with _algebras_lock:
            algebra = _algebras.get(key)
            if algebra is None:
                algebra = HeckeAlgebra(n, arithmetic)
                _algebras[key] = algebra
    return algebra


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    if a.n != b.n:
        raise DegreeMismatch(f"cannot multiply elements of H_{a.n} and H_{b.n}")
    return a.algebra.multiply(a, b)


def t_inverse(w: Permutation, arithmetic: Arithmetic = EXACT) -> HeckeElement:
    return get_algebra(w.n, arithmetic).t_inverse(w)


def star(a: HeckeElement) -> HeckeElement:
    return a.algebra.star(a)


def inner_product(a: HeckeElement, b: HeckeElement):
    if a.n != b.n:
        raise DegreeMismatch(f"cannot pair elements of H_{a.n} and H_{b.n}")
    return a.algebra.inner_product(a, b)


def murphy(n: int, m: int, arithmetic: Arithmetic = EXACT) -> HeckeElement:
    return get_algebra(n, arithmetic).murphy(m)


def symmetrizers(n: int, arithmetic: Arithmetic = EXACT) -> Tuple[HeckeElement, HeckeElement]:
    if n < 1:
        raise IndexOutOfRange(f"symmetrizers need n >= 1, got {n}")
    return get_algebra(n, arithmetic).symmetrizers()


def tensor(a: HeckeElement, b: HeckeElement, algebra: Optional[HeckeAlgebra] = None) -> HeckeElement:
    """a (x) b in H_{m+k}: a on the first m strands, b on the last k."""
    if a.arithmetic != b.arithmetic:
        raise DegreeMismatch("tensor factors use different arithmetic")
    target = algebra or get_algebra(a.n + b.n, a.arithmetic)
    return target.embed(a) * target.embed(b, offset=a.n)


def embed(a: HeckeElement, n: int) -> HeckeElement:
    """H_m -> H_n on the first m strands."""
    return get_algebra(n, a.arithmetic).embed(a)


def shift(a: HeckeElement, n: int, offset: int) -> HeckeElement:
    """H_m -> H_n on strands offset+1..offset+m."""
    return get_algebra(n, a.arithmetic).embed(a, offset=offset)


def hecke_trace(a: HeckeElement):
    """tau(a): the coefficient of T_e; tau(ab) = tau(ba)."""
    return a.algebra.trace(a)
