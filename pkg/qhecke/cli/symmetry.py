"""Commands on Hecke symmetries: certification, rank detection and integrals."""

import logging
from typing import Optional, Tuple

import click

from ..config import RunConfig
from ..exceptions import ParseError
from ..integral import IntegralQuery, hr_integral, hr_table, shr_integral, shr_table, verify_invariance
from ..rmatrix import rank_of, verify_closure_identities
from ..utils.rmatrix_loader import SymmetryLoader
from ..utils.serialization import parse_integral_indices, value_summary
from .common import domain_command, rmatrix_option

logger = logging.getLogger(__name__)


@click.command(name="certify")
@rmatrix_option
@domain_command
def certify(config: RunConfig, rmatrix: str):
    """Evaluate every closure identity of an R-matrix; exits 1 unless all vanish."""
    sym = SymmetryLoader.resolve(rmatrix, config.arithmetic(), check=False)
    report = verify_closure_identities(sym, config.rank_cutoff)
    ranked = rank_of(sym, config.rank_cutoff) if report.check("hecke").holds else None
    payload = report.to_dict()
    payload.update({"rmatrix": rmatrix, "d": sym.d, "mode": sym.arithmetic.tag})
    if ranked is not None:
        payload["rank"] = ranked.to_dict()["rank"]
    return payload


@click.command(name="rank")
@rmatrix_option
@domain_command
def rank(config: RunConfig, rmatrix: str):
    """Detect the rank r from vanishing exterior powers."""
    sym = SymmetryLoader.resolve(rmatrix, config.arithmetic())
    result = rank_of(sym, config.rank_cutoff)
    payload = result.to_dict()
    payload.update({"rmatrix": rmatrix, "d": sym.d})
    if result.even:
        payload["quantum_rank"] = value_summary(sym.C.trace())
    return payload


@click.command(name="integral")
@rmatrix_option
@click.option("--group", type=click.Choice(["hr", "shr"]), default="hr", show_default=True)
@click.option("--indices", default=None, help='Monomial as "I=1,2;J=2,1;K=1,1;L=2,2" (K, L only for hr)')
@click.option("--table", "table_degree", type=int, default=None, help="Emit every nonzero value of degree n")
@click.option(
    "--route",
    type=click.Choice(["central", "averaged", "both"]),
    default="both",
    show_default=True,
    help="Construction of Phi_k for shr",
)
@click.option("--verify", "verify_degree", type=int, default=None, help="Run the invariance report at degree n")
@click.option(
    "--projection-degree",
    "projection_degrees",
    type=int,
    multiple=True,
    default=(1,),
    show_default=True,
    help="k for which --verify checks Phi_k as the coinvariant projection; repeatable",
)
@domain_command
def integral(
    config: RunConfig,
    rmatrix: str,
    group: str,
    indices: Optional[str],
    table_degree: Optional[int],
    route: str,
    verify_degree: Optional[int],
    projection_degrees: Tuple[int, ...],
):
    """Haar integral on H_R or SH_R."""
    chosen = [option for option in (indices, table_degree, verify_degree) if option is not None]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --indices, --table or --verify")
    sym = SymmetryLoader.resolve(rmatrix, config.arithmetic())
    cutoff = config.rank_cutoff
    cache = config.cache()

    if verify_degree is not None:
        report = verify_invariance(sym, verify_degree, cutoff, cache, projection_degrees=tuple(projection_degrees))
        payload = report.to_dict()
        payload["rmatrix"] = rmatrix
        return payload

    if table_degree is not None:
        if group == "hr":
            table = hr_table(sym, table_degree, cutoff)
        else:
            table = shr_table(sym, table_degree, route, cutoff, cache)
        payload = table.to_dict()
        payload["rmatrix"] = rmatrix
        return payload

    try:
        parsed = parse_integral_indices(indices)
    except ParseError as e:
        raise click.BadParameter(e.message, param_hint="--indices")
    if group == "shr":
        if "K" in parsed or "L" in parsed:
            raise click.BadParameter("shr monomials take only I and J", param_hint="--indices")
        value = shr_integral(sym, parsed["I"], parsed["J"], route, cutoff, cache)
    else:
        query = IntegralQuery(I=parsed["I"], J=parsed["J"], K=parsed.get("K", ()), L=parsed.get("L", ()))
        value = hr_integral(sym, query, cutoff)
    logger.debug(f"Integral of {indices} on {group} for {rmatrix}")
    payload = {"group": group, "rmatrix": rmatrix, "query": {k: list(v) for k, v in sorted(parsed.items())}}
    payload.update(value_summary(value))
    return payload
