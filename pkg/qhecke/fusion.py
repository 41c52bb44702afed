"""Fusion rules of the comodule category: products and duals of simple classes.

Z-partitions are moved to partitions by subtracting lambda_r from every part,
multiplied by the Littlewood-Richardson rule with rows beyond r discarded, and
shifted back by the combined determinant power.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from .exceptions import LengthExceedsRank
from .models import RankContext
from .tableaux import ZPartition, as_zpartition, lr_coefficient, partitions_of

logger = logging.getLogger(__name__)


@dataclass
class FusionExpansion:
    """Multiplicities of simple classes [M_gamma], all of length r."""

    rank: int
    terms: Dict[ZPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        for shape in self.terms:
            if shape.r != self.rank:
                raise LengthExceedsRank(f"{shape} does not have {self.rank} entries")

    def multiplicity(self, shape) -> int:
        return self.terms.get(as_zpartition(shape, self.rank), 0)

    def sorted_terms(self) -> List[Tuple[ZPartition, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0].parts, reverse=True)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "terms": [{"shape": str(shape), "multiplicity": count} for shape, count in self.sorted_terms()],
        }


def fuse(lam, mu, ctx: RankContext) -> FusionExpansion:
    """[M_lambda][M_mu] = sum_gamma c^gamma_{lambda mu} [M_gamma], truncated to l(gamma) <= r.

    Args:
        lam: Partition or Z-partition with at most r entries.
        mu: Partition or Z-partition with at most r entries.
        ctx: Rank of the symmetry.

    Raises:
        LengthExceedsRank: If either input is longer than r.
    """
    r = ctx.r
    left, left_power = as_zpartition(lam, r).normalized()
    right, right_power = as_zpartition(mu, r).normalized()
    power = left_power + right_power
    terms: Dict[ZPartition, int] = {}
    for gamma in partitions_of(left.size + right.size, max_length=r):
        coefficient = lr_coefficient(left, right, gamma)
        if coefficient:
            terms[ZPartition.from_partition(gamma, r).shifted(power)] = coefficient
    logger.debug(f"Fused {lam} and {mu} at r={r} into {len(terms)} classes")
    return FusionExpansion(rank=r, terms=terms)


def dual(lam: ZPartition) -> ZPartition:
    """(-lambda_r, ..., -lambda_1)."""
    return lam.dual()
