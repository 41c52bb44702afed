"""Primitive and central idempotents of H_n, their traces and twist eigenvalues."""

import logging
import threading
from typing import Dict, Optional, Tuple

from .arithmetic import EXACT, Arithmetic
from .exceptions import CrossCheckFailed, IndexOutOfRange, LengthExceedsRank
from .hecke import HeckeElement, get_algebra
from .models import IdempotentKey
from .tableaux import Partition, content, partitions_of, standard_tableaux

logger = logging.getLogger(__name__)

_memo: Dict[Tuple, HeckeElement] = {}
_memo_lock = threading.Lock()
_build_locks: Dict[Tuple, threading.Lock] = {}


def _build_lock(memo_key: Tuple) -> threading.Lock:
    with _memo_lock:
        return _build_locks.setdefault(memo_key, threading.Lock())


def clear_memo() -> None:
    """Drop every in-memory idempotent; disk caches are untouched."""
    with _memo_lock:
        _memo.clear()
        _build_locks.clear()


def _build_primitive(key: IdempotentKey, arithmetic: Arithmetic, full_range: bool) -> HeckeElement:
    shape = key.shape
    n = shape.size
    algebra = get_algebra(n, arithmetic)
    tableau = standard_tableaux(shape, cap=arithmetic.degree_cap)[key.tableau_index]
    result = algebra.one()
    for m in range(2, n + 1):
        eigenvalue = content(tableau, m)
        target = arithmetic.q_integer(eigenvalue)
        murphy = algebra.murphy(m)
        bound = n - 1 if full_range else m - 1
        for c in range(-bound, bound + 1):
            if c == eigenvalue:
                continue
            shifted = result * murphy - result.scale(arithmetic.q_integer(c))
            result = shifted.scale(arithmetic.divide(arithmetic.one, target - arithmetic.q_integer(c)))
    return result


def primitive_idempotent(
    key: IdempotentKey,
    n: Optional[int] = None,
    arithmetic: Arithmetic = EXACT,
    full_range: bool = False,
    cache=None,
) -> HeckeElement:
    """E_{i,lambda} as a product of Murphy-operator interpolation factors.

    For each m the factor is prod_c (L_m - [c]) / ([content(m)] - [c]) with c
    running over |c| <= m - 1, or over |c| <= n - 1 when ``full_range`` is set.

    Args:
        key: Shape and tableau index.
        n: Degree; must equal |shape| when given.
        arithmetic: Coefficient arithmetic.
        full_range: Use the unrestricted content range.
        cache: Optional ``IdempotentCache`` consulted before building.

    Returns:
        The idempotent in H_n.

    Raises:
        CapExceeded: If |shape| exceeds the degree cap.
        IndexOutOfRange: If ``n`` disagrees with the shape.
    """
    if n is not None and n != key.shape.size:
        raise IndexOutOfRange(f"shape {key.shape} does not have size {n}")
    arithmetic.check_degree(key.shape.size)
    memo_key = (key, arithmetic, full_range)
    element = _memo.get(memo_key)
    if element is not None:
        return element
    with _build_lock(memo_key):
        element = _memo.get(memo_key)
        if element is not None:
            return element
        if cache is not None and not full_range:
            element = cache.load(key, arithmetic)
        if element is None:
            logger.info(f"Building E[{key.tableau_index},{key.shape}] ({arithmetic.tag})")
            element = _build_primitive(key, arithmetic, full_range)
            if cache is not None and not full_range:
                cache.store(key, arithmetic, element)
        with _memo_lock:
            _memo[memo_key] = element
            _build_locks.pop(memo_key, None)
    return element


def primitive_idempotents(n: int, arithmetic: Arithmetic = EXACT, cache=None) -> Dict[IdempotentKey, HeckeElement]:
    """Every E_{i,lambda} for lambda a partition of n."""
    result = {}
    for shape in partitions_of(n):
        for index in range(shape.count_standard_tableaux()):
            key = IdempotentKey(shape, index)
            result[key] = primitive_idempotent(key, arithmetic=arithmetic, cache=cache)
    return result


def central_idempotent(
    shape: Partition, arithmetic: Arithmetic = EXACT, cache=None, cross_check: bool = False
) -> HeckeElement:
    """F_lambda = sum_i E_{i,lambda}.

    With ``cross_check`` the averaging construction is computed too and the two
    must agree.

    Raises:
        CrossCheckFailed: If the two constructions differ.
    """
    algebra = get_algebra(shape.size, arithmetic)
    total = algebra.zero()
    for index in range(shape.count_standard_tableaux()):
        total = total + primitive_idempotent(IdempotentKey(shape, index), arithmetic=arithmetic, cache=cache)
    if cross_check:
        averaged = central_idempotent_by_averaging(shape, arithmetic, cache)
        if averaged != total:
            raise CrossCheckFailed(f"F{shape}", ("sum of primitives", "averaging"))
    return total


def central_idempotent_by_averaging(shape: Partition, arithmetic: Arithmetic = EXACT, cache=None) -> HeckeElement:
    """F_lambda = tr(E_lambda) * sum_w q^{-l(w)} T_w E_lambda T_{w^{-1}}."""
    algebra = get_algebra(shape.size, arithmetic)
    primitive = primitive_idempotent(IdempotentKey(shape, 0), arithmetic=arithmetic, cache=cache)
    averaged = algebra.average(primitive)
    return averaged.scale(identity_coefficient(shape, arithmetic, cache))


def identity_coefficient(shape: Partition, arithmetic: Arithmetic = EXACT, cache=None):
    """tr(E_lambda) read off as the coefficient of T_e."""
    primitive = primitive_idempotent(IdempotentKey(shape, 0), arithmetic=arithmetic, cache=cache)
    return primitive.algebra.trace(primitive)


def trace_closed(shape: Partition, r: int, arithmetic: Arithmetic = EXACT):
    """q^{sum lambda_i (i-1)} prod_cells 1/[c + r] prod_{i<j<=r} [lambda_i - lambda_j + j - i]/[j - i]."""
    if shape.length > r:
        raise LengthExceedsRank(f"{shape} has more than {r} parts")
    value = arithmetic.q_power(sum(part * (i - 1) for i, part in enumerate(shape.parts, start=1)))
    for c in shape.contents():
        value = arithmetic.divide(value, arithmetic.q_integer(c + r))
    padded = shape.padded(r)
    for i in range(r):
        for j in range(i + 1, r):
            value *= arithmetic.q_integer(padded[i] - padded[j] + j - i)
            value = arithmetic.divide(value, arithmetic.q_integer(j - i))
    return value


def trace_of_primitive(shape: Partition, r: Optional[int] = None, arithmetic: Arithmetic = EXACT, cache=None):
    """tr(E_lambda) from the closed product, checked against the T_e coefficient.

    Args:
        shape: The partition lambda.
        r: Row count used by the closed formula; defaults to max(l(lambda), 1).

    Raises:
        CrossCheckFailed: If the closed value differs from the combinatorial one.
    """
    r = max(shape.length, 1) if r is None else r
    closed = trace_closed(shape, r, arithmetic)
    direct = identity_coefficient(shape, arithmetic, cache)
    if closed != direct:
        raise CrossCheckFailed(f"tr(E{shape})", ("closed product", "identity coefficient"))
    return closed


def determinant_power_trace(k: int, r: int, arithmetic: Arithmetic = EXACT):
    """tr(E_{(k^r)}) as q^{kr(r-1)/2} [0]![1]!...[k-1]! / ([r]!...[r+k-1]!)."""
    if k < 0 or r < 1:
        raise IndexOutOfRange(f"need k >= 0 and r >= 1, got k={k}, r={r}")
    value = arithmetic.q_power(k * r * (r - 1) // 2)
    for i in range(k):
        value *= arithmetic.q_factorial(i)
        value = arithmetic.divide(value, arithmetic.q_factorial(r + i))
    return value


def twist_eigenvalue(shape: Partition, arithmetic: Arithmetic = EXACT):
    """c with T_{w_n}^{-2} E_lambda = c E_lambda, from the content sum of lambda."""
    n = shape.size
    exponent = sum(part * (part - 2 * i + 1) for i, part in enumerate(shape.parts, start=1)) + n * (n - 1)
    return arithmetic.v_power(-exponent)


def twist_direct(shape: Partition, arithmetic: Arithmetic = EXACT, cache=None):
    """Multiply T_{w_n}^{-2} into E_lambda and read off the scalar.

    Raises:
        CrossCheckFailed: If the product is not a multiple of E_lambda.
    """
    primitive = primitive_idempotent(IdempotentKey(shape, 0), arithmetic=arithmetic, cache=cache)
    twisted = primitive.algebra.longest_twist_inverse_square() * primitive
    w, coefficient = primitive.sorted_terms()[0]
    scalar = arithmetic.divide(twisted.coefficient(w), coefficient)
    if twisted != primitive.scale(scalar):
        raise CrossCheckFailed(f"twist of E{shape}", ("T_w^-2 E", "scalar multiple of E"))
    return scalar
