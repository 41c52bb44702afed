"""On-disk cache for primitive idempotents."""

import json
import logging
import os
import tempfile
from typing import Any, Dict, Optional

from .serialization import hecke_from_json, hecke_to_json

logger = logging.getLogger(__name__)

CACHE_VERSION = 1


class IdempotentCache:
    """Versioned JSON files under ``root``, one per (degree, shape, index, arithmetic).

    Paths follow ``H{n}/{shape}/{index}.json`` for exact arithmetic and
    ``H{n}/{shape}/{index}.v0-{p}_{q}.json`` for numeric arithmetic.
    """

    def __init__(self, root: str):
        self.root = root

    @staticmethod
    def _shape_dir(shape) -> str:
        return "_".join(str(p) for p in shape.parts) or "empty"

    def path(self, key, arithmetic) -> str:
        n = key.shape.size
        if arithmetic.is_exact:
            filename = f"{key.tableau_index}.json"
        else:
            filename = f"{key.tableau_index}.v0-{arithmetic.v0.numerator}_{arithmetic.v0.denominator}.json"
        return os.path.join(self.root, f"H{n}", self._shape_dir(key.shape), filename)

    def _document(self, key, arithmetic, element) -> Dict[str, Any]:
        return {
            "version": CACHE_VERSION,
            "mode": arithmetic.tag,
            "shape": list(key.shape.parts),
            "index": key.tableau_index,
            "element": hecke_to_json(element),
        }

    def load(self, key, arithmetic):
        """Return the cached element, or None when absent or unusable.

        Unreadable or mismatched files are logged and ignored so the caller rebuilds them.
        """
        path = self.path(key, arithmetic)
        if not os.path.exists(path):
            return None
        try:
            with open(path) as f:
                document = json.load(f)
            if (
                document.get("version") != CACHE_VERSION
                or document.get("mode") != arithmetic.tag
                or document.get("shape") != list(key.shape.parts)
                or document.get("index") != key.tableau_index
            ):
                logger.warning(f"Ignoring stale cache file {path}")
                return None
            element = hecke_from_json(document["element"], arithmetic)
        except Exception as e:
            logger.warning(f"Ignoring unreadable cache file {path}: {str(e)}")
            return None
        logger.debug(f"Cache hit for E[{key.tableau_index},{key.shape}] at {path}")
        return element

    def store(self, key, arithmetic, element) -> Optional[str]:
        """Write atomically; returns the path, or None if the directory is not writable."""
        path = self.path(key, arithmetic)
        directory = os.path.dirname(path)
        try:
            os.makedirs(directory, exist_ok=True)
            handle, temporary = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
            with os.fdopen(handle, "w") as f:
                json.dump(self._document(key, arithmetic, element), f, sort_keys=True)
            os.replace(temporary, path)
        except OSError as e:
            logger.warning(f"Could not write cache file {path}: {str(e)}")
            return None
        logger.debug(f"Cached E[{key.tableau_index},{key.shape}] at {path}")
        return path
