"""Kernel backend selection.

TOPCENT_BACKEND picks the implementation of the hot loops:

  auto (default)  numba if importable, else the numpy fallback
  numba           require the compiled kernels
  numpy           force the pure-numpy fallback

Both modules expose the same functions with the same integer results; the
choice only affects speed (and float rounding in harmonic sums).
"""

from __future__ import annotations

import os

_ENV = "TOPCENT_BACKEND"


def _select():
    choice = os.environ.get(_ENV, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_ENV} must be auto, numba or numpy (got {choice!r})")
    if choice == "numpy":
        from . import _kernels_numpy
        return _kernels_numpy
    try:
        from . import _kernels_numba
        return _kernels_numba
    except ImportError:
        if choice == "numba":
            raise
        from . import _kernels_numpy
        return _kernels_numpy


kernels = _select()
BACKEND_NAME = kernels.NAME
