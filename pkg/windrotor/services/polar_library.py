"""
Polar Library
Cached access to polar files shared by every command in a process
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Union

from ..models.airfoil import PolarSet
from .airfoil_polars import load_polar_set

logger = logging.getLogger(__name__)


class PolarLibrary:
    """Parsed polar sets keyed by resolved file path"""

    def __init__(self):
        self._polars: Dict[Path, PolarSet] = {}

    def load(self, path: Union[str, Path]) -> PolarSet:
        """Load a polar file once; later calls return the cached set"""
        key = Path(path).resolve()
        if key not in self._polars:
            self._polars[key] = load_polar_set(key)
        else:
            logger.debug(f"Polar cache hit for {key}")
        return self._polars[key]


# Singleton instance
_polar_library: Optional[PolarLibrary] = None


def get_polar_library() -> PolarLibrary:
    """Get polar library singleton"""
    global _polar_library
    if _polar_library is None:
        _polar_library = PolarLibrary()
    return _polar_library
