"""Pick the kernel backend once, at import.

The compiled ``_speedups`` extension is used when it was built; otherwise
the pure-Python module.  Setting ``SURFBRACKET_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from surfbracket import _pykernels

kernels = _pykernels
BACKEND = "python"

if os.environ.get("SURFBRACKET_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from surfbracket import _speedups
    except ImportError:
        pass
    else:
        kernels = _speedups
        BACKEND = "cython"

pure = _pykernels
