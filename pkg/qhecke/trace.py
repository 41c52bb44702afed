"""Conditional and quantum traces on Hecke algebras, and closed dimension formulas.

The conditional trace tr^n: H_n -> H_{n-1} depends on a rank r through the
quantum rank t = -[-r]_q. Writing w = (v_k ... v_{n-1}) w1 with w1 in S_{n-1}:

    tr^n(T_w) = T_{v_k ... v_{n-2}} T_{w1}    if k <= n - 1
    tr^n(T_w) = t T_{w1}                      if k = n
"""

import logging
from fractions import Fraction
from typing import Dict, Tuple, Union

from sympy.polys.matrices import DomainMatrix

from .arithmetic import EXACT, Arithmetic
from .exceptions import IndexOutOfRange
from .hecke import HeckeElement, get_algebra
from .idempotents import primitive_idempotent
from .models import IdempotentKey, RankContext
from .scalar import ScaledScalar
from .symmetric import Permutation, coset_decompose, symmetric_group, top_cycle
from .tableaux import Partition, ZPartition, as_zpartition

logger = logging.getLogger(__name__)

Shape = Union[Partition, ZPartition]


def quantum_rank(ctx: RankContext, arithmetic: Arithmetic = EXACT):
    """-[-r]_q, the trace of C for an even symmetry of rank r."""
    return -arithmetic.q_integer(-ctx.r)


def conditional_trace(a: HeckeElement, ctx: RankContext) -> HeckeElement:
    """tr^n_r: H_n -> H_{n-1}, extended linearly from basis elements."""
    n = a.n
    if n < 1:
        raise IndexOutOfRange("the conditional trace needs n >= 1")
    arithmetic = a.arithmetic
    lower = get_algebra(n - 1, arithmetic)
    t = quantum_rank(ctx, arithmetic)
    by_cycle: Dict[int, Dict[Permutation, object]] = {}
    for w, c in a.terms.items():
        k, w1 = coset_decompose(w)
        bucket = by_cycle.setdefault(k, {})
        bucket[w1] = bucket[w1] + c if w1 in bucket else c
    result = lower.zero()
    for k, terms in sorted(by_cycle.items()):
        part = lower.element(terms)
        if k == n:
            result = result + part.scale(t)
        else:
            result = result + lower.basis(top_cycle(k, n - 1)) * part
    return result


def conditional_trace_chain(a: HeckeElement, ctx: RankContext):
    """tr^1 o tr^2 o ... o tr^n (a), a scalar."""
    current = a
    while current.n > 0:
        current = conditional_trace(current, ctx)
    return current.coefficient(Permutation(()))


def quantum_trace(a: HeckeElement, ctx: RankContext):
    """The chain applied to T_{w_n}^{-2} a; on an idempotent E this is edim of its module."""
    return conditional_trace_chain(a.algebra.longest_twist_inverse_square() * a, ctx)


def rdim_combinatorial(shape: Partition, ctx: RankContext, arithmetic: Arithmetic = EXACT, cache=None):
    """v^{n(r+1)} times the conditional trace chain of E_lambda."""
    n = shape.size
    primitive = primitive_idempotent(IdempotentKey(shape, 0), arithmetic=arithmetic, cache=cache)
    value = arithmetic.v_power(n * (ctx.r + 1)) * conditional_trace_chain(primitive, ctx)
    logger.debug(f"rdim{shape} at r={ctx.r} by conditional traces")
    return value


def _vandermonde_ratio(parts: Tuple[int, ...], arithmetic: Arithmetic):
    value = arithmetic.one
    r = len(parts)
    for i in range(r):
        for j in range(i + 1, r):
            value *= arithmetic.q_integer(parts[i] - parts[j] + j - i)
            value = arithmetic.divide(value, arithmetic.q_integer(j - i))
    return value


def rdim_closed(shape: Shape, ctx: RankContext, arithmetic: Arithmetic = EXACT):
    """q^{|lambda|(r+1)/2 - sum lambda_i (r+1-i)} prod_{i<j} [lambda_i - lambda_j + j - i]/[j - i]."""
    r = ctx.r
    parts = as_zpartition(shape, r).parts
    size = sum(parts)
    exponent = size * (r + 1) - 2 * sum(part * (r + 1 - i) for i, part in enumerate(parts, start=1))
    return arithmetic.v_power(exponent) * _vandermonde_ratio(parts, arithmetic)


def _edim_exponent(parts: Tuple[int, ...], r: int) -> int:
    return sum(part * (part + 2 * r - 4 * i + 2) for i, part in enumerate(parts, start=1))


def edim_closed(shape: Shape, ctx: RankContext, arithmetic: Arithmetic = EXACT):
    """edim(M_lambda) = q^{-(|lambda|^2 + sum lambda_i(lambda_i + 2r - 4i + 2))/2} times the ratio."""
    parts = as_zpartition(shape, ctx.r).parts
    size = sum(parts)
    exponent = -(size * size + _edim_exponent(parts, ctx.r))
    return arithmetic.v_power(exponent) * _vandermonde_ratio(parts, arithmetic)


def normalized_edim(shape: Shape, ctx: RankContext, arithmetic: Arithmetic = EXACT) -> ScaledScalar:
    """edim after rescaling R by q^{-(r+1)/(2r)}; invariant under shifts by (1^r).

    Returned as v^s * x with 0 <= s < 1, since the exponent n^2/r need not be integral.
    """
    parts = as_zpartition(shape, ctx.r).parts
    size = sum(parts)
    exponent = Fraction(size * size, ctx.r) - _edim_exponent(parts, ctx.r)
    return ScaledScalar.from_exponent(exponent, _vandermonde_ratio(parts, arithmetic), arithmetic.v)


def single_row_rdim(k: int, ctx: RankContext, arithmetic: Arithmetic = EXACT):
    """rdim(M_(k)) = v^{-k(r-1)} [k+r-1]! / ([r-1]! [k]!); zero for k < 0."""
    if k < 0:
        return arithmetic.zero
    r = ctx.r
    value = arithmetic.v_power(-k * (r - 1)) * arithmetic.q_factorial(k + r - 1)
    return arithmetic.divide(value, arithmetic.q_factorial(r - 1) * arithmetic.q_factorial(k))


def rdim_determinantal(shape: Shape, ctx: RankContext, arithmetic: Arithmetic = EXACT):
    """det(rdim(M_(lambda_i - i + j))) over the r x r grid; zero when l(lambda) > r."""
    r = ctx.r
    if isinstance(shape, ZPartition):
        shape, _ = as_zpartition(shape, r).normalized()
    if shape.length > r:
        return arithmetic.zero
    parts = shape.padded(r)
    rows = [
        [single_row_rdim(parts[i] - (i + 1) + (j + 1), ctx, arithmetic) for j in range(r)] for i in range(r)
    ]
    return DomainMatrix(rows, (r, r), arithmetic.domain).det()


Tensor = Dict[Tuple[Permutation, Permutation], object]


def _accumulate(target: Tensor, key: Tuple[Permutation, Permutation], value) -> None:
    total = target[key] + value if key in target else value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def casimir_trace_identity(n: int, ctx: RankContext, arithmetic: Arithmetic = EXACT) -> Tuple[Tensor, Tensor]:
    """Both sides of the relation, as elements of H_n (x) H_{n-1}:

        sum_{w in S_n} q^{-l(w)} T_{w^{-1}} (x) tr^n(T_w)
        = sum_{w in S_{n-1}} q^{-l(w)} (L_n - [-r]) T_{w^{-1}} (x) T_w

    Tensors are keyed by (left permutation, right permutation).
    """
    if n < 1:
        raise IndexOutOfRange("the identity needs n >= 1")
    algebra = get_algebra(n, arithmetic)
    lhs: Tensor = {}
    for w in algebra.group.elements:
        weight = arithmetic.q_power(-w.length)
        for u, c in conditional_trace(algebra.basis(w), ctx).terms.items():
            _accumulate(lhs, (w.inverse(), u), weight * c)
    shifted_murphy = algebra.murphy(n) + algebra.scalar(-arithmetic.q_integer(-ctx.r))
    rhs: Tensor = {}
    for w in symmetric_group(n - 1).elements:
        weight = arithmetic.q_power(-w.length)
        left = shifted_murphy * algebra.basis(w.inverse().extend(n))
        for u, c in left.terms.items():
            _accumulate(rhs, (u, w), weight * c)
    return lhs, rhs
