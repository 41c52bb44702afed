from typing import Any, Dict, List, Tuple

from .qhecke_error import QHeckeError

Residual = List[Tuple[str, str]]


class CertificationError(QHeckeError):
    """Raised when an R-matrix fails one of the Hecke symmetry axioms."""

    def __init__(self, message: str, residual: Residual = None, *args, **kwargs):
        """Initialize the certification error.

        Args:
            message: Error message naming the failed identity.
            residual: Nonzero residual entries as (index label, printed value) pairs.
        """
        super().__init__(message, *args, **kwargs)
        self.residual = list(residual or [])

    def details(self) -> Dict[str, Any]:
        return {"residual": [{"index": index, "value": value} for index, value in self.residual]}


class NotYangBaxter(CertificationError):
    """Raised when R_1R_2R_1 - R_2R_1R_2 is nonzero on V^3."""

    pass


class NotHecke(CertificationError):
    """Raised when (R + 1)(R - q) is nonzero on V^2."""

    pass
