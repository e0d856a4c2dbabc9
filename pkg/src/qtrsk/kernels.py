"""Select the compiled polynomial kernels when available.

Set ``QTRSK_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
expand_binomials = _pykernels.expand_binomials
poly_mul = _pykernels.poly_mul
add_scaled = _pykernels.add_scaled

if os.environ.get("QTRSK_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        expand_binomials = _ckernels.expand_binomials
        poly_mul = _ckernels.poly_mul
        add_scaled = _ckernels.add_scaled

__all__ = ["BACKEND", "expand_binomials", "poly_mul", "add_scaled"]
