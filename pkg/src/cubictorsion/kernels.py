"""Kernel backend selection.

Imports the compiled kernels when available, falling back to the pure
Python reference implementation.  Set CUBICTORSION_PURE_PYTHON=1 to force
the fallback (used by the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("CUBICTORSION_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
poly_mul_int = _impl.poly_mul_int
poly_eval_frac_int = _impl.poly_eval_frac_int
search_odd_degree_squares = _impl.search_odd_degree_squares
