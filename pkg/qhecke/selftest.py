"""A fixed suite of fast cross-route checks, run by ``qhecke selftest``."""

import logging
import time
from typing import Any, Callable, Dict, List, Tuple

from .arithmetic import EXACT, Arithmetic
from .exceptions import QHeckeError
from .fusion import fuse
from .hecke import get_algebra
from .idempotents import (
    primitive_idempotent,
    primitive_idempotents,
    trace_of_primitive,
    twist_direct,
    twist_eigenvalue,
)
from .integral import contraction_checks, phi_operator
from .models import IdempotentKey, RankContext
from .rmatrix import (
    categorical_trace_direct,
    categorical_trace_iterated,
    certify,
    drinfeld_jimbo,
    rank_of,
    super_symmetry,
    verify_closure_identities,
)
from .tableaux import Partition, partitions_of
from .tensor import TensorOperator
from .trace import edim_closed, quantum_trace, rdim_closed, rdim_combinatorial, rdim_determinantal

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, str]

CHECKS: List[Tuple[str, Callable[[Arithmetic, Any], CheckResult]]] = []


def check(name: str):
    def register(func: Callable[[Arithmetic, Any], CheckResult]):
        CHECKS.append((name, func))
        return func

    return register


@check("hecke_relations")
def _hecke_relations(arithmetic: Arithmetic, cache) -> CheckResult:
    algebra = get_algebra(3, arithmetic)
    t1, t2 = algebra.generator(1), algebra.generator(2)
    one = algebra.one()
    quadratic = (t1 + one) * (t1 - one.scale(arithmetic.q))
    braid = t1 * t2 * t1 - t2 * t1 * t2
    return quadratic.is_zero() and braid.is_zero(), "H_3"


@check("idempotent_completeness")
def _completeness(arithmetic: Arithmetic, cache) -> CheckResult:
    idempotents = primitive_idempotents(3, arithmetic, cache)
    algebra = get_algebra(3, arithmetic)
    total = algebra.zero()
    for element in idempotents.values():
        total = total + element
    orthogonal = all(
        (a * b == (a if ka == kb else algebra.zero()))
        for ka, a in idempotents.items()
        for kb, b in idempotents.items()
    )
    return total == algebra.one() and orthogonal, f"{len(idempotents)} idempotents of H_3"


@check("twist_eigenvalue")
def _twist(arithmetic: Arithmetic, cache) -> CheckResult:
    shapes = list(partitions_of(3))
    agree = all(twist_direct(shape, arithmetic, cache) == twist_eigenvalue(shape, arithmetic) for shape in shapes)
    return agree, ", ".join(str(shape) for shape in shapes)


@check("primitive_trace")
def _primitive_trace(arithmetic: Arithmetic, cache) -> CheckResult:
    for n in range(1, 4):
        for shape in partitions_of(n):
            trace_of_primitive(shape, arithmetic=arithmetic, cache=cache)
    return True, "closed product = identity coefficient, n <= 3"


@check("dimension_routes")
def _dimension_routes(arithmetic: Arithmetic, cache) -> CheckResult:
    for r in (1, 2):
        ctx = RankContext(r)
        for n in range(1, 4):
            for shape in partitions_of(n):
                combinatorial = rdim_combinatorial(shape, ctx, arithmetic, cache)
                if shape.length > r:
                    if combinatorial:
                        return False, f"rdim{shape} at r={r} should vanish"
                    continue
                if combinatorial != rdim_closed(shape, ctx, arithmetic):
                    return False, f"rdim{shape} at r={r}: combinatorial vs closed"
                if combinatorial != rdim_determinantal(shape, ctx, arithmetic):
                    return False, f"rdim{shape} at r={r}: combinatorial vs determinantal"
                primitive = primitive_idempotent(IdempotentKey(shape, 0), arithmetic=arithmetic, cache=cache)
                if quantum_trace(primitive, ctx) != edim_closed(shape, ctx, arithmetic):
                    return False, f"edim{shape} at r={r}: trace vs closed"
    return True, "n <= 3, r in {1, 2}"


@check("fusion_homomorphism")
def _fusion(arithmetic: Arithmetic, cache) -> CheckResult:
    ctx = RankContext(2)
    for lam in (Partition.of(1), Partition.of(2)):
        for mu in (Partition.of(1), Partition.of(1, 1)):
            expansion = fuse(lam, mu, ctx)
            product = rdim_closed(lam, ctx, arithmetic) * rdim_closed(mu, ctx, arithmetic)
            total = arithmetic.zero
            for shape, count in expansion.terms.items():
                total += rdim_closed(shape, ctx, arithmetic) * count
            if product != total:
                return False, f"{lam} * {mu} at r=2"
    return True, "r = 2"


@check("drinfeld_jimbo_certificate")
def _certificate(arithmetic: Arithmetic, cache) -> CheckResult:
    sym = certify(drinfeld_jimbo(2, arithmetic))
    report = verify_closure_identities(sym)
    failed = [item.name for item in report.checks if not item.holds]
    return not failed, "builtin:dj2" if not failed else f"failed: {', '.join(failed)}"


@check("rank_detection")
def _ranks(arithmetic: Arithmetic, cache) -> CheckResult:
    dj = rank_of(drinfeld_jimbo(2, arithmetic))
    odd = rank_of(super_symmetry(1, 1, arithmetic), cutoff=4)
    return dj.rank == 2 and not odd.even, f"dj2 rank {dj.rank}, super1_1 {odd.to_dict()['rank']}"


@check("categorical_trace_routes")
def _trace_routes(arithmetic: Arithmetic, cache) -> CheckResult:
    sym = drinfeld_jimbo(2, arithmetic)
    f = sym.R.scale(arithmetic.q) + TensorOperator.identity(2, 2, arithmetic)
    return categorical_trace_direct(sym, f) == categorical_trace_iterated(sym, f), "n = 2"


@check("hr_contractions")
def _contractions(arithmetic: Arithmetic, cache) -> CheckResult:
    first, second = contraction_checks(drinfeld_jimbo(2, arithmetic))
    return first.is_zero() and second.is_zero(), "builtin:dj2, n = 1"


@check("shr_routes")
def _shr_routes(arithmetic: Arithmetic, cache) -> CheckResult:
    phi = phi_operator(drinfeld_jimbo(2, arithmetic), 1, "both", cache=cache)
    return phi.rank() == 1, "Phi_1 for builtin:dj2 has rank 1"


def run_selftest(arithmetic: Arithmetic = EXACT, cache=None) -> Dict[str, Any]:
    """Run every registered check; a raised QHeckeError counts as a failure."""
    results = []
    for name, func in CHECKS:
        started = time.perf_counter()
        try:
            passed, detail = func(arithmetic, cache)
        except QHeckeError as e:
            passed, detail = False, f"{type(e).__name__}: {e.message}"
        elapsed = time.perf_counter() - started
        logger.info(f"selftest {name}: {'ok' if passed else 'FAILED'} in {elapsed:.2f}s")
        results.append({"name": name, "passed": passed, "detail": detail})
    return {"checks": results, "passed": all(item["passed"] for item in results)}
