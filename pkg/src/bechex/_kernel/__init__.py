"""Hot kernels for the enumeration engine.

The compiled backend (bechex._kernel._fast, built from _fast.pyx) is used
when importable; otherwise the pure-Python backend takes over with
identical semantics.  Set BECHEX_PURE=1 to force the pure backend.
"""

from __future__ import annotations

import os

if os.environ.get("BECHEX_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

from .common import pack_cells, unpack_cells

BACKEND = _impl.BACKEND
canonical_key = _impl.canonical_key
grow = _impl.grow
simply_connected = _impl.simply_connected
trace_code = _impl.trace_code
code_deficit = _impl.code_deficit

__all__ = [
    "BACKEND",
    "canonical_key",
    "code_deficit",
    "grow",
    "pack_cells",
    "simply_connected",
    "trace_code",
    "unpack_cells",
]
