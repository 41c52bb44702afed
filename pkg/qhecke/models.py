"""Data models shared across qhecke modules."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .exceptions import IndexOutOfRange
from .tableaux import Partition


@dataclass(frozen=True)
class RankContext:
    """Rank r of the even Hecke symmetry a trace or dimension refers to."""

    r: int

    def __post_init__(self):
        if self.r < 1:
            raise IndexOutOfRange(f"rank must be positive, got {self.r}")


@dataclass(frozen=True)
class IdempotentKey:
    """Names E_{i,lambda}: a shape and a position in the standard tableau order."""

    shape: Partition
    tableau_index: int = 0

    def __post_init__(self):
        if not 0 <= self.tableau_index < self.shape.count_standard_tableaux():
            raise IndexOutOfRange(
                f"tableau index {self.tableau_index} out of range for shape {self.shape}"
            )


@dataclass
class RankResult:
    """Outcome of rank detection.

    ``rank`` is None when every exterior power up to ``cutoff`` is nonzero.
    """

    cutoff: int
    exterior_dimensions: Dict[int, int] = field(default_factory=dict)
    rank: Optional[int] = None

    @property
    def even(self) -> bool:
        return self.rank is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank if self.even else f"NotEvenUpTo({self.cutoff})",
            "even": self.even,
            "cutoff": self.cutoff,
            "exterior_dimensions": {str(k): dim for k, dim in sorted(self.exterior_dimensions.items())},
        }


@dataclass
class IdentityCheck:
    """One evaluated identity: nonzero residual entries, if any.

    ``skipped`` marks an identity that does not apply to the subject, such as a
    rank-dependent identity of a symmetry that is not even.
    """

    name: str
    residual: List[Tuple[str, str]] = field(default_factory=list)
    detail: str = ""
    skipped: bool = False

    @property
    def holds(self) -> bool:
        return not self.skipped and not self.residual

    def to_dict(self) -> Dict[str, Any]:
        if self.skipped:
            status = "skipped"
        else:
            status = "0" if not self.residual else f"{len(self.residual)} nonzero"
        payload: Dict[str, Any] = {"name": self.name, "status": status}
        if self.residual:
            payload["residual"] = [{"index": index, "value": value} for index, value in self.residual[:20]]
        if self.detail:
            payload["detail"] = self.detail
        return payload


@dataclass
class Report:
    """A named list of identity checks."""

    subject: str
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.holds or check.skipped for check in self.checks)

    @property
    def complete(self) -> bool:
        return not any(check.skipped for check in self.checks)

    def check(self, name: str) -> IdentityCheck:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "complete": self.complete,
            "checks": [check.to_dict() for check in self.checks],
        }
