"""Backend selection for the enumeration kernels.

Set ``Z4SD_NUMBA=0`` in the environment to force the pure-numpy kernels.
The choice is made once, at import time.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("Z4SD_NUMBA", "1").strip().lower()

USE_NUMBA = _FLAG not in ("0", "false", "no", "off")
if USE_NUMBA:
    try:
        import numba  # noqa: F401
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"

# all plane kernels pack one coordinate per bit of a uint64
MAX_KERNEL_LENGTH = 64
