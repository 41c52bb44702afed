from typing import Any, Dict

from .qhecke_error import QHeckeError


class CapExceeded(QHeckeError):
    """Raised when a computation would exceed a configured size cap."""

    def __init__(self, cap: str, limit: int, requested: int, message: str = "", *args, **kwargs):
        """Initialize the cap error.

        Args:
            cap: Name of the cap, e.g. "max_degree" or "max_tensor_entries".
            limit: The configured limit.
            requested: The size the caller asked for.
            message: Optional override for the default message.
        """
        message = message or f"{cap} exceeded: requested {requested}, limit {limit}"
        super().__init__(message, *args, **kwargs)
        self.cap = cap
        self.limit = limit
        self.requested = requested

    def details(self) -> Dict[str, Any]:
        return {"cap": self.cap, "limit": self.limit, "requested": self.requested}
