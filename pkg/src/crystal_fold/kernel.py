"""Select the compiled kernel when available.

Set ``CRYSTAL_FOLD_PURE=1`` to force the pure-Python implementation.
"""

from __future__ import annotations

import os

from . import _kernel_py

PyKernel = _kernel_py.Kernel

try:
    from ._ckernel import Kernel as CKernel
except ImportError:  # extension not built
    CKernel = None

if CKernel is not None and os.environ.get("CRYSTAL_FOLD_PURE", "") not in ("1", "true", "yes"):
    Kernel = CKernel
    BACKEND = "compiled"
else:
    Kernel = PyKernel
    BACKEND = "python"

__all__ = ["Kernel", "PyKernel", "CKernel", "BACKEND"]
