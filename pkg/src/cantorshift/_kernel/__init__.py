"""Kernel backend selection.

Imports the compiled extension when it is available, otherwise falls back
to the pure-Python implementation.  Set CANTORSHIFT_PURE=1 to force the
pure backend (useful for benchmarking and debugging).
"""

import os

if os.environ.get("CANTORSHIFT_PURE"):
    from . import _pykernel as _impl

    BACKEND = "pure-python (forced)"
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernel as _impl

        BACKEND = "pure-python"

weighted_sum = _impl.weighted_sum
periodic_sum = _impl.periodic_sum
geometric = _impl.geometric

__all__ = ["weighted_sum", "periodic_sum", "geometric", "BACKEND"]
