"""Supporting utilities: JSON codecs, the idempotent disk cache and R-matrix loading."""

from .cache import IdempotentCache
from .serialization import dumps

__all__ = ["IdempotentCache", "dumps"]
