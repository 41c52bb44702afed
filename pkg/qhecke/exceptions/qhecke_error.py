from typing import Any, Dict


class QHeckeError(Exception):
    """Base exception class for all qhecke domain errors."""

    def __init__(self, message: str, *args, **kwargs):
        """Initialize the error.

        Args:
            message: Error message describing what went wrong.
            *args: Additional positional arguments for Exception.
            **kwargs: Additional keyword arguments for Exception.
        """
        super().__init__(message, *args)
        self.message = message

    def details(self) -> Dict[str, Any]:
        """Extra machine-readable fields; subclasses extend this."""
        return {}

    def to_dict(self) -> Dict[str, Any]:
        """Return the error object emitted by the CLI on exit status 1."""
        payload = {"error": type(self).__name__, "message": self.message}
        payload.update(self.details())
        return payload
