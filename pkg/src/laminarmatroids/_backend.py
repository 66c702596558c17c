"""Kernel backend selection.

The compiled extension is preferred when importable; set
LAMINARMATROIDS_PURE=1 to force the pure-Python kernels.
"""

from __future__ import annotations

import os

if os.environ.get("LAMINARMATROIDS_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels


def backend_name():
    """Either "compiled" or "python"."""
    return kernels.BACKEND
