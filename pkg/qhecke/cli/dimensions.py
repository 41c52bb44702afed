"""Quantum dimension and fusion commands."""

import click

from ..config import RunConfig
from ..fusion import fuse as fuse_shapes
from ..idempotents import primitive_idempotent
from ..models import IdempotentKey, RankContext
from ..tableaux import Partition
from ..trace import (
    edim_closed,
    normalized_edim,
    quantum_trace,
    rdim_closed,
    rdim_combinatorial,
    rdim_determinantal,
)
from ..utils.serialization import value_summary
from .common import SHAPE, domain_command

ROUTES = {
    "rdim": ("closed", "combinatorial", "det"),
    "edim": ("closed", "combinatorial"),
    "normalized": ("closed",),
}


@click.command(name="qdim")
@click.option("--shape", type=SHAPE, required=True, help='Partition or Z-partition, e.g. "[2,1]" or "[1,0,-2]"')
@click.option("--rank", type=int, required=True, help="Rank r of the even Hecke symmetry")
@click.option("--which", type=click.Choice(sorted(ROUTES)), default="rdim", show_default=True)
@click.option(
    "--route", type=click.Choice(["closed", "combinatorial", "det"]), default="closed", show_default=True
)
@domain_command
def qdim(config: RunConfig, shape, rank: int, which: str, route: str):
    """Ribbon, categorical or normalized quantum dimension of M_lambda."""
    if route not in ROUTES[which]:
        raise click.UsageError(f"--which {which} supports --route {', '.join(ROUTES[which])}")
    arithmetic = config.arithmetic()
    ctx = RankContext(rank)
    if route == "combinatorial" and not isinstance(shape, Partition):
        raise click.BadParameter("the combinatorial route needs a partition", param_hint="--shape")

    if which == "normalized":
        value = normalized_edim(shape, ctx, arithmetic)
    elif route == "det":
        value = rdim_determinantal(shape, ctx, arithmetic)
    elif route == "combinatorial" and which == "rdim":
        value = rdim_combinatorial(shape, ctx, arithmetic, config.cache())
    elif route == "combinatorial":
        primitive = primitive_idempotent(IdempotentKey(shape, 0), arithmetic=arithmetic, cache=config.cache())
        value = quantum_trace(primitive, ctx)
    elif which == "rdim":
        value = rdim_closed(shape, ctx, arithmetic)
    else:
        value = edim_closed(shape, ctx, arithmetic)

    payload = {"shape": str(shape), "rank": rank, "which": which, "route": route, "mode": arithmetic.tag}
    payload.update(value_summary(value))
    return payload


@click.command(name="fuse")
@click.option("--a", "left", type=SHAPE, required=True, help="First class")
@click.option("--b", "right", type=SHAPE, required=True, help="Second class")
@click.option("--rank", type=int, required=True, help="Rank r")
@domain_command
def fuse(config: RunConfig, left, right, rank: int):
    """Expand [M_a][M_b] into simple classes."""
    expansion = fuse_shapes(left, right, RankContext(rank))
    payload = {"a": str(left), "b": str(right)}
    payload.update(expansion.to_dict())
    return payload
