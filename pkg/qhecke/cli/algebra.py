"""Hecke algebra commands: idempotents and conditional traces."""

import logging
from typing import Any, Dict, Optional

import click

from ..config import RunConfig
from ..exceptions import IndexOutOfRange
from ..idempotents import central_idempotent, identity_coefficient, primitive_idempotent
from ..models import IdempotentKey, RankContext
from ..symmetric import Permutation
from ..tableaux import Partition, standard_tableaux
from ..trace import conditional_trace
from ..utils.serialization import hecke_to_json, value_summary
from .common import PARTITION, domain_command

logger = logging.getLogger(__name__)


def _idempotent_payload(config: RunConfig, key: IdempotentKey, full_range: bool) -> Dict[str, Any]:
    arithmetic = config.arithmetic()
    element = primitive_idempotent(key, arithmetic=arithmetic, full_range=full_range, cache=config.cache())
    tableau = standard_tableaux(key.shape, cap=arithmetic.degree_cap)[key.tableau_index]
    return {
        "shape": str(key.shape),
        "index": key.tableau_index,
        "tableau": [list(row) for row in tableau.rows],
        "mode": arithmetic.tag,
        "element": hecke_to_json(element),
    }


@click.command(name="idempotent")
@click.option("--shape", type=PARTITION, required=True, help='Partition, e.g. "[2,1]"')
@click.option("--index", "tableau_index", type=int, default=0, show_default=True, help="Standard tableau index")
@click.option("--full-range", is_flag=True, help="Use every content in [-(n-1), n-1] in the Murphy product")
@domain_command
def idempotent(config: RunConfig, shape: Partition, tableau_index: int, full_range: bool):
    """Primitive idempotent E_{i,lambda} of H_n."""
    payload = _idempotent_payload(config, IdempotentKey(shape, tableau_index), full_range)
    payload["trace"] = value_summary(identity_coefficient(shape, config.arithmetic(), config.cache()))
    return payload


@click.command(name="central")
@click.option("--shape", type=PARTITION, required=True, help='Partition, e.g. "[2,1]"')
@click.option("--cross-check", is_flag=True, help="Also build F_lambda by averaging and compare")
@domain_command
def central(config: RunConfig, shape: Partition, cross_check: bool):
    """Central idempotent F_lambda = sum_i E_{i,lambda}."""
    element = central_idempotent(shape, config.arithmetic(), config.cache(), cross_check=cross_check)
    encoded = hecke_to_json(element)
    return {
        "shape": str(shape),
        "cross_checked": cross_check,
        "element": encoded,
    }


@click.command(name="trace")
@click.option("--shape", type=PARTITION, required=True, help="Shape of the idempotent to trace")
@click.option("--index", "tableau_index", type=int, default=0, show_default=True, help="Standard tableau index")
@click.option("--rank", type=int, required=True, help="Rank r of the conditional trace")
@click.option("--steps", type=int, default=None, help="Number of strands to close (default: all)")
@domain_command
def trace(config: RunConfig, shape: Partition, tableau_index: int, rank: int, steps: Optional[int]):
    """Apply tr_r^n, tr_r^{n-1}, ... to E_{i,lambda}."""
    n = shape.size
    steps = n if steps is None else steps
    if not 0 <= steps <= n:
        raise IndexOutOfRange(f"steps must lie in 0..{n}, got {steps}")
    ctx = RankContext(rank)
    current = primitive_idempotent(
        IdempotentKey(shape, tableau_index), arithmetic=config.arithmetic(), cache=config.cache()
    )
    for _ in range(steps):
        current = conditional_trace(current, ctx)
    logger.debug(f"Closed {steps} strands of E[{tableau_index},{shape}] at r={rank}")
    encoded = hecke_to_json(current)
    payload: Dict[str, Any] = {
        "shape": str(shape),
        "index": tableau_index,
        "rank": rank,
        "steps": steps,
        "element": encoded,
    }
    if current.n == 0:
        payload.update(value_summary(current.coefficient(Permutation(()))))
    return payload
