"""Haar integrals on the matrix quantum groups H_R and SH_R of an even Hecke symmetry.

On H_R, with Lambda_n = prod_k (rho(L_k) - [-r]) and M_w = Lambda_n^{-1} R_{w^{-1}} C^{(x)n},

    int(z_I^J t_K^L) = sum_{w in S_n} q^{-l(w)} M_w[L'][I] R_w[J][K']

where K' and L' are the reversed multi-indices. On SH_R the integral of Z_I^J
is the entry Phi_k[J][I] of the image of the central idempotent F_{(k^r)},
and vanishes unless n = kr.
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from .arithmetic import Arithmetic
from .exceptions import CapExceeded, CrossCheckFailed, DegreeMismatch, IndexOutOfRange, QHeckeError
from .hecke import get_algebra, symmetrizers
from .idempotents import central_idempotent, determinant_power_trace
from .models import IdempotentKey, IdentityCheck, Report
from .rmatrix import DEFAULT_RANK_CUTOFF, HeckeSymmetry, comodule_dimension, etr_n, rho
from .symmetric import symmetric_group
from .tableaux import Partition, partitions_of
from .tensor import TensorOperator, multi_index
from .utils.serialization import value_summary

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]

HR_DEGREE_CAPS = {"exact": 3, "numeric": 4}
VERIFY_DEGREE_CAP = 2

_operators: Dict[Tuple, Any] = {}
_operators_lock = threading.Lock()
_build_locks: Dict[Tuple, threading.Lock] = {}


def clear_operator_memo() -> None:
    """Drop the memoized Lambda_n^{-1}, H_R term lists and Phi_k operators."""
    with _operators_lock:
        _operators.clear()
        _build_locks.clear()


@dataclass(frozen=True)
class IntegralQuery:
    """A monomial z_I^J t_K^L with 1-based multi-indices."""

    I: MultiIndex
    J: MultiIndex
    K: MultiIndex = ()
    L: MultiIndex = ()

    def __post_init__(self):
        if len(self.I) != len(self.J):
            raise DegreeMismatch(f"|I| = {len(self.I)} but |J| = {len(self.J)}")
        if len(self.K) != len(self.L):
            raise DegreeMismatch(f"|K| = {len(self.K)} but |L| = {len(self.L)}")

    @property
    def balanced(self) -> bool:
        return len(self.I) == len(self.K)

    def validate(self, d: int) -> None:
        for name in ("I", "J", "K", "L"):
            for entry in getattr(self, name):
                if not 1 <= entry <= d:
                    raise IndexOutOfRange(f"{name} entry {entry} outside 1..{d}")


@dataclass
class IntegralTable:
    """All integral values of one degree; zero values are omitted."""

    group: str
    n: int
    values: Dict[Tuple[MultiIndex, ...], Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        names = ("I", "J", "K", "L") if self.group == "hr" else ("I", "J")
        entries = []
        for key in sorted(self.values):
            entry = {name: list(index) for name, index in zip(names, key)}
            entry.update(value_summary(self.values[key]))
            entries.append(entry)
        return {"group": self.group, "n": self.n, "entries": entries}


def _memoized(key: Tuple, build):
    value = _operators.get(key)
    if value is not None:
        return value
    with _operators_lock:
        lock = _build_locks.setdefault(key, threading.Lock())
    with lock:
        value = _operators.get(key)
        if value is None:
            value = build()
            with _operators_lock:
                _operators[key] = value
                _build_locks.pop(key, None)
    return value


def _check_hr_degree(n: int, arithmetic: Arithmetic) -> None:
    limit = HR_DEGREE_CAPS["exact" if arithmetic.is_exact else "numeric"]
    if n > limit:
        raise CapExceeded("hr_degree", limit, n)


def murphy_product_inverse(sym: HeckeSymmetry, n: int, r: int) -> TensorOperator:
    """Lambda_n^{-1}, with Lambda_n = prod_{k=1..n} (rho(L_k) - [-r]).

    Raises:
        CrossCheckFailed: If the ascending and descending products differ.
    """

    def build():
        arithmetic = sym.arithmetic
        algebra = get_algebra(n, arithmetic)
        shift = algebra.scalar(arithmetic.q_integer(-r))
        factors = [algebra.murphy(k) - shift for k in range(1, n + 1)]
        ascending, descending = algebra.one(), algebra.one()
        for factor in factors:
            ascending = ascending * factor
        for factor in reversed(factors):
            descending = descending * factor
        if ascending != descending:
            raise CrossCheckFailed("Murphy shift product", ("ascending", "descending"))
        logger.info(f"Inverting the Murphy shift product on V^{n} for {sym.name}")
        return rho(sym, ascending).inverse()

    return _memoized(("lambda", sym, n, r), build)


def _weighted_terms(sym: HeckeSymmetry, n: int, r: int):
    """(q^{-l(w)}, M_w, R_w) for every w in S_n."""

    def build():
        arithmetic = sym.arithmetic
        images = sym.braid_images(n)
        closing = murphy_product_inverse(sym, n, r)
        reflections = sym.C.power(n)
        terms = []
        for w in symmetric_group(n).elements:
            left = closing @ images[w.inverse()] @ reflections
            terms.append((arithmetic.q_power(-w.length), left, images[w]))
        return terms

    return _memoized(("hr_terms", sym, n, r), build)


def hr_integral(sym: HeckeSymmetry, query: IntegralQuery, cutoff: int = DEFAULT_RANK_CUTOFF):
    """The integral of z_I^J t_K^L on H_R.

    Raises:
        NotEven: If no rank is detected within ``cutoff``.
        CapExceeded: Beyond degree 3 (exact) or 4 (numeric).
    """
    arithmetic = sym.arithmetic
    query.validate(sym.d)
    if not query.balanced:
        return arithmetic.zero
    n = len(query.I)
    if n == 0:
        return arithmetic.one
    _check_hr_degree(n, arithmetic)
    r = sym.require_rank(cutoff)
    I = tuple(i - 1 for i in query.I)
    J = tuple(j - 1 for j in query.J)
    K_rev = tuple(k - 1 for k in reversed(query.K))
    L_rev = tuple(l - 1 for l in reversed(query.L))
    total = arithmetic.zero
    for weight, left, right in _weighted_terms(sym, n, r):
        a = left.entry(L_rev, I)
        if a:
            total += weight * a * right.entry(J, K_rev)
    return total


def hr_table(sym: HeckeSymmetry, n: int, cutoff: int = DEFAULT_RANK_CUTOFF) -> IntegralTable:
    """Every nonzero integral of degree n on H_R."""
    arithmetic = sym.arithmetic
    table = IntegralTable(group="hr", n=n)
    if n == 0:
        table.values[((), (), (), ())] = arithmetic.one
        return table
    _check_hr_degree(n, arithmetic)
    r = sym.require_rank(cutoff)
    d = sym.d
    values: Dict[Tuple[int, int, int, int], Any] = {}
    for weight, left, right in _weighted_terms(sym, n, r):
        right_entries = list(right.flat_entries())
        for l_rev, i, a in left.flat_entries():
            for j, k_rev, b in right_entries:
                key = (i, j, k_rev, l_rev)
                values[key] = values.get(key, arithmetic.zero) + weight * a * b
    for (i, j, k_rev, l_rev), value in values.items():
        if not value:
            continue
        key = (
            _one_based(multi_index(i, d, n)),
            _one_based(multi_index(j, d, n)),
            _one_based(tuple(reversed(multi_index(k_rev, d, n)))),
            _one_based(tuple(reversed(multi_index(l_rev, d, n)))),
        )
        table.values[key] = value
    logger.info(f"Tabulated {len(table.values)} nonzero H_R integrals of degree {n} for {sym.name}")
    return table


def _one_based(index: MultiIndex) -> MultiIndex:
    return tuple(i + 1 for i in index)


# SH_R


def phi_central(sym: HeckeSymmetry, k: int, r: int, cache=None) -> TensorOperator:
    """rho(F_{(k^r)})."""
    shape = Partition((k,) * r)
    return rho(sym, central_idempotent(shape, sym.arithmetic, cache))


def phi_averaged(sym: HeckeSymmetry, k: int, r: int) -> TensorOperator:
    """tr(E_{(k^r)}) sum_{w in S_{kr}} q^{-l(w)} R_w (rho(Y_r))^{(x)k} R_{w^{-1}}."""
    arithmetic = sym.arithmetic
    n = k * r
    _, antisymmetrizer = symmetrizers(r, arithmetic)
    block = rho(sym, antisymmetrizer).power(k)
    images = sym.braid_images(n)
    total = TensorOperator.zero(sym.d, n, arithmetic)
    for w in symmetric_group(n).elements:
        total = total + (images[w] @ block @ images[w.inverse()]).scale(arithmetic.q_power(-w.length))
    return total.scale(determinant_power_trace(k, r, arithmetic))


def phi_operator(
    sym: HeckeSymmetry, k: int, route: str = "both", cutoff: int = DEFAULT_RANK_CUTOFF, cache=None
) -> TensorOperator:
    """Phi_k, the projector onto coinvariants of V^{kr}.

    Args:
        route: "central", "averaged", or "both" (computes both and compares).

    Raises:
        CrossCheckFailed: If the two routes disagree.
        NotEven: If no rank is detected within ``cutoff``.
    """
    if k < 0:
        raise IndexOutOfRange(f"k must be non-negative, got {k}")
    if route not in ("central", "averaged", "both"):
        raise ValueError(f"unknown route {route!r}")
    r = sym.require_rank(cutoff)
    if k == 0:
        return TensorOperator.identity(sym.d, 0, sym.arithmetic)
    sym.arithmetic.check_degree(k * r)

    def build():
        if route == "central":
            return phi_central(sym, k, r, cache)
        if route == "averaged":
            return phi_averaged(sym, k, r)
        central = phi_central(sym, k, r, cache)
        if central != phi_averaged(sym, k, r):
            raise CrossCheckFailed(f"Phi_{k}", ("central idempotent", "averaged antisymmetrizers"))
        return central

    return _memoized(("phi", sym, k, route), build)


def shr_integral(
    sym: HeckeSymmetry, I: MultiIndex, J: MultiIndex, route: str = "both", cutoff: int = DEFAULT_RANK_CUTOFF, cache=None
):
    """The integral of Z_I^J on SH_R (1-based indices)."""
    query = IntegralQuery(I=tuple(I), J=tuple(J))
    query.validate(sym.d)
    r = sym.require_rank(cutoff)
    n = len(query.I)
    if n % r:
        return sym.arithmetic.zero
    phi = phi_operator(sym, n // r, route, cutoff, cache)
    return phi.entry(tuple(j - 1 for j in query.J), tuple(i - 1 for i in query.I))


def shr_table(
    sym: HeckeSymmetry, n: int, route: str = "both", cutoff: int = DEFAULT_RANK_CUTOFF, cache=None
) -> IntegralTable:
    table = IntegralTable(group="shr", n=n)
    r = sym.require_rank(cutoff)
    if n % r:
        return table
    phi = phi_operator(sym, n // r, route, cutoff, cache)
    for (row, col), value in phi.sorted_entries():
        table.values[(_one_based(col), _one_based(row))] = value
    return table


def quantum_determinant_weights(sym: HeckeSymmetry, k: int, cutoff: int = DEFAULT_RANK_CUTOFF) -> TensorOperator:
    """(q^{r(r+1)/2} B^{(x)r} rho(Y_r))^{(x)k}: the coefficients expressing D^k through Z."""
    arithmetic = sym.arithmetic
    r = sym.require_rank(cutoff)
    _, antisymmetrizer = symmetrizers(r, arithmetic)
    single = (sym.B.power(r) @ rho(sym, antisymmetrizer)).scale(arithmetic.q_power(r * (r + 1) // 2))
    return single.power(k)


def closing_consistency(sym: HeckeSymmetry, k: int = 1, cutoff: int = DEFAULT_RANK_CUTOFF) -> TensorOperator:
    """Residual of the H_R integral of Z (x) D^{-k} against Phi_k.

    X[I][J] = sum_{N,P} W[P][N] sum_w q^{-l(w)} M_w[N][I] R_w[J][P], W the
    determinant weights; the result must be Phi_k.
    """
    r = sym.require_rank(cutoff)
    n = k * r
    _check_hr_degree(n, sym.arithmetic)
    arithmetic = sym.arithmetic
    weights = {(p, m): value for p, m, value in quantum_determinant_weights(sym, k, cutoff).flat_entries()}
    entries: Dict[Tuple[int, int], Any] = {}
    for weight, left, right in _weighted_terms(sym, n, r):
        for m, i, a in left.flat_entries():
            for j, p, b in right.flat_entries():
                c = weights.get((p, m))
                if c:
                    entries[(i, j)] = entries.get((i, j), arithmetic.zero) + c * weight * a * b
    closed = TensorOperator.from_flat(sym.d, n, entries, arithmetic)
    return closed - phi_operator(sym, k, "central", cutoff)


# Invariance report


def _tensor_sum_first_trace(sym: HeckeSymmetry, n: int, r: int) -> TensorOperator:
    """sum_{S_n} q^{-l} etr((rho(L_n) - [-r])^{-1} R_{w^{-1}}) (x) R_w  minus  sum_{S_{n-1}} q^{-l} R_{w^{-1}} (x) R_w."""
    arithmetic = sym.arithmetic
    algebra = get_algebra(n, arithmetic)
    shift = rho(sym, algebra.murphy(n) - algebra.scalar(arithmetic.q_integer(-r))).inverse()
    images = sym.braid_images(n)
    lower = sym.braid_images(n - 1)
    total = TensorOperator.zero(sym.d, 2 * n - 1, arithmetic)
    for w in symmetric_group(n).elements:
        traced = etr_n(sym, shift @ images[w.inverse()])
        total = total + traced.kron(images[w]).scale(arithmetic.q_power(-w.length))
    for w in symmetric_group(n - 1).elements:
        term = lower[w.inverse()].kron(images[w.extend(n)])
        total = total - term.scale(arithmetic.q_power(-w.length))
    return total


def _tensor_sum_second_trace(sym: HeckeSymmetry, n: int, r: int) -> TensorOperator:
    """sum_{S_n} q^{-l} M_w (x) etr(R_w)  minus  sum_{S_{n-1}} q^{-l} (M_w (x) C) (x) R_w."""
    arithmetic = sym.arithmetic
    images = sym.braid_images(n)
    lower = sym.braid_images(n - 1)
    total = TensorOperator.zero(sym.d, 2 * n - 1, arithmetic)
    upper_closing = murphy_product_inverse(sym, n, r)
    for w in symmetric_group(n).elements:
        left = upper_closing @ images[w.inverse()] @ sym.C.power(n)
        total = total + left.kron(etr_n(sym, images[w])).scale(arithmetic.q_power(-w.length))
    lower_closing = murphy_product_inverse(sym, n - 1, r) if n > 1 else TensorOperator.identity(sym.d, 0, arithmetic)
    for w in symmetric_group(n - 1).elements:
        left = (lower_closing @ lower[w.inverse()] @ sym.C.power(n - 1)).kron(sym.C)
        total = total - left.kron(lower[w]).scale(arithmetic.q_power(-w.length))
    return total


def _delta_residual(sym: HeckeSymmetry, matrix: Dict[Tuple[int, int], Any]) -> TensorOperator:
    arithmetic = sym.arithmetic
    entries = dict(matrix)
    for i in range(sym.d):
        entries[(i, i)] = entries.get((i, i), arithmetic.zero) - arithmetic.one
    return TensorOperator.from_flat(sym.d, 1, entries, arithmetic)


def contraction_checks(sym: HeckeSymmetry, cutoff: int = DEFAULT_RANK_CUTOFF) -> Tuple[TensorOperator, TensorOperator]:
    """Residuals of the two degree-one relations contracted against the integral.

    sum_j int(z_j^i t_k^j) = delta^i_k, and
    sum R^{mn}_{ij} C^q_l int(z_n^l t_q^j) = delta^m_i.
    """
    d = sym.d
    arithmetic = sym.arithmetic
    first: Dict[Tuple[int, int], Any] = {}
    for i in range(d):
        for k in range(d):
            total = arithmetic.zero
            for j in range(d):
                total += hr_integral(sym, IntegralQuery(I=(j + 1,), J=(i + 1,), K=(k + 1,), L=(j + 1,)), cutoff)
            first[(i, k)] = total
    reflection = {(q, l): value for q, l, value in sym.C.flat_entries()}
    second: Dict[Tuple[int, int], Any] = {}
    for row, col, value in sym.R.flat_entries():
        (m, n), (i, j) = multi_index(row, d, 2), multi_index(col, d, 2)
        for (q, l), c in reflection.items():
            integral = hr_integral(sym, IntegralQuery(I=(n + 1,), J=(l + 1,), K=(q + 1,), L=(j + 1,)), cutoff)
            if integral:
                second[(m, i)] = second.get((m, i), arithmetic.zero) + value * c * integral
    return _delta_residual(sym, first), _delta_residual(sym, second)


def coinvariant_projection_checks(
    sym: HeckeSymmetry, k: int = 1, cutoff: int = DEFAULT_RANK_CUTOFF, cache=None
) -> List[IdentityCheck]:
    """Identities making Phi_k the projection of V^{kr} onto SH_R-coinvariants.

    Phi_k must be idempotent, commute with every rho(T_i), annihilate the other
    isotypic components rho(F_mu), agree with the averaging construction and
    have rank d_{(k^r)} dim M_{(k^r)}. When kr is within the H_R degree cap,
    m -> m_0 int(m_1) is also rebuilt from the H_R integral of Z D^{-k}.
    """
    r = sym.require_rank(cutoff)
    n = k * r
    label = f"k={k}, n={n}"
    phi = phi_operator(sym, k, "central", cutoff, cache)
    checks = [IdentityCheck(name=f"phi{k}_idempotent", residual=(phi @ phi - phi).residual(), detail=label)]

    commutators = []
    for i in range(1, n):
        generator = sym.local(i, n)
        commutators += [(f"T{i}{index}", value) for index, value in (phi @ generator - generator @ phi).residual()]
    checks.append(IdentityCheck(name=f"phi{k}_commutes", residual=commutators, detail=label))

    target = Partition((k,) * r)
    leaks = []
    for shape in partitions_of(n):
        if shape == target or shape.length > r:
            continue
        component = rho(sym, central_idempotent(shape, sym.arithmetic, cache))
        leaks += [(f"F{shape}{index}", value) for index, value in (phi @ component).residual()]
    checks.append(IdentityCheck(name=f"phi{k}_isotypic", residual=leaks, detail=label))

    averaged = phi_averaged(sym, k, r)
    checks.append(IdentityCheck(name=f"phi{k}_averaged", residual=(averaged - phi).residual(), detail=label))

    ranks = phi_rank(sym, k, cutoff, cache)
    mismatch = [] if ranks["rank"] == ranks["expected"] else [("rank", f"{ranks['rank']} != {ranks['expected']}")]
    checks.append(IdentityCheck(name=f"phi{k}_rank", residual=mismatch, detail=f"{label}, rank {ranks['rank']}"))

    if n <= HR_DEGREE_CAPS["exact" if sym.arithmetic.is_exact else "numeric"]:
        closing = closing_consistency(sym, k, cutoff)
        checks.append(IdentityCheck(name=f"phi{k}_from_hr", residual=closing.residual(), detail=label))
    return checks


def verify_invariance(
    sym: HeckeSymmetry,
    n: int = 2,
    cutoff: int = DEFAULT_RANK_CUTOFF,
    cache=None,
    projection_degrees: Tuple[int, ...] = (1,),
    degree_cap: int = VERIFY_DEGREE_CAP,
) -> Report:
    """Check the integral formulas against the relations of H_R and SH_R.

    Report-only: an identity that fails, or whose evaluation raises, is recorded
    as a failing check and the report does not pass.

    Args:
        n: Degree of the tensor-sum identities, at most ``degree_cap``.
        projection_degrees: The k for which Phi_k is checked as a coinvariant projection.

    Raises:
        CapExceeded: If ``n`` exceeds ``degree_cap``.
        IndexOutOfRange: If ``n`` < 1.
    """
    if n < 1:
        raise IndexOutOfRange(f"invariance needs n >= 1, got {n}")
    if n > degree_cap:
        raise CapExceeded("verify_degree", degree_cap, n)
    report = Report(subject=f"{sym.name} integrals, n={n}")

    def record(name: str, compute, detail: str = "") -> None:
        try:
            residual = compute().residual()
        except QHeckeError as e:
            residual = [("-", f"{type(e).__name__}: {e.message}")]
        report.checks.append(IdentityCheck(name=name, residual=residual, detail=detail))

    try:
        r = sym.require_rank(cutoff)
    except QHeckeError as e:
        report.checks.append(IdentityCheck(name="even", residual=[("-", e.message)]))
        return report

    first, second = contraction_checks(sym, cutoff)
    report.checks.append(IdentityCheck(name="contraction_zt", residual=first.residual()))
    report.checks.append(IdentityCheck(name="contraction_tz", residual=second.residual()))
    record("invariance_first_trace", lambda: _tensor_sum_first_trace(sym, n, r))
    record("invariance_second_trace", lambda: _tensor_sum_second_trace(sym, n, r))

    unbalanced = hr_integral(sym, IntegralQuery(I=(1,), J=(1,)), cutoff)
    off_grade = [] if r == 1 else [shr_integral(sym, (1,), (1,), "central", cutoff, cache)]
    vanishing = [("hr(z_1^1)", str(unbalanced))] if unbalanced else []
    vanishing += [("shr(Z_1^1)", str(value)) for value in off_grade if value]
    report.checks.append(IdentityCheck(name="degree_vanishing", residual=vanishing))

    for k in projection_degrees:
        try:
            report.checks.extend(coinvariant_projection_checks(sym, k, cutoff, cache))
        except QHeckeError as e:
            report.checks.append(
                IdentityCheck(name=f"phi{k}_projection", residual=[("-", f"{type(e).__name__}: {e.message}")])
            )
    return report


def phi_rank(sym: HeckeSymmetry, k: int, cutoff: int = DEFAULT_RANK_CUTOFF, cache=None) -> Dict[str, int]:
    """Rank of Phi_k next to d_{(k^r)} * dim M_{(k^r)}."""
    r = sym.require_rank(cutoff)
    shape = Partition((k,) * r)
    phi = phi_operator(sym, k, "central", cutoff, cache)
    dimension = comodule_dimension(sym, IdempotentKey(shape, 0), cache)
    return {
        "rank": phi.rank(),
        "expected": shape.count_standard_tableaux() * dimension,
        "comodule_dimension": dimension,
    }
