"""Kernel selection.

The compiled extension ``_kernels`` is used when it imports; otherwise (or
when ``PWMIRROR_PURE_PYTHON`` is set to a non-empty value) the pure-Python
implementations are used. ``BACKEND`` names the active one.
"""

import os

from pwmirror.poly import _kernels_py

if os.environ.get("PWMIRROR_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from pwmirror.poly import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

mul_packed = _impl.mul_packed
mul_tuple = _impl.mul_tuple

__all__ = ["BACKEND", "mul_packed", "mul_tuple"]
