"""Kernel selection: compiled Cython canonical-labelling core when available,
pure-Python twin otherwise.  Set SPEXM_PURE=1 to force the fallback."""

from __future__ import annotations

import os

if os.environ.get("SPEXM_PURE") == "1":
    from ._kernel_py import KERNEL_IMPL, canon_connected
else:
    try:
        from ._kernel_cy import KERNEL_IMPL, canon_connected  # type: ignore
    except ImportError:
        from ._kernel_py import KERNEL_IMPL, canon_connected

__all__ = ["KERNEL_IMPL", "canon_connected"]
