"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled Cython module is preferred; set ABELIANCFT_PURE=1 to force
the pure backend (used by the benchmark and the equivalence tests).
"""

from __future__ import annotations

import os

from . import _ref

if os.environ.get("ABELIANCFT_PURE") == "1":
    _impl = _ref
    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _ref
        BACKEND = "pure"

imaginary_class_number = _impl.imaginary_class_number
imaginary_ambiguous_classes = _impl.imaginary_ambiguous_classes
imaginary_dirichlet_class_number = _impl.imaginary_dirichlet_class_number
real_narrow_class_number = _impl.real_narrow_class_number
pell_norm_and_period = _impl.pell_norm_and_period

pure = _ref


def backend() -> str:
    """Name of the active backend: 'compiled' or 'pure'."""
    return BACKEND
