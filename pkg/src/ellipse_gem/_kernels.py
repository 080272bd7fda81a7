"""Kernel backend selection: compiled extension when available, numpy otherwise.

Set ``ELLIPSE_GEM_PURE_PYTHON=1`` to force the fallback (used by the kernel
benchmark and by tests that compare the two implementations).
"""

import os

import numpy as np

if os.environ.get("ELLIPSE_GEM_PURE_PYTHON", "").strip().lower() in {"1", "true", "yes"}:
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"


def glasso_sweep(S, W, B, lam, inner_eps, inner_max):
    return _impl.glasso_sweep(S, W, B, float(lam), float(inner_eps), int(inner_max))


def l1_assign(X, medians, support):
    X = np.ascontiguousarray(X, dtype=np.float64)
    medians = np.ascontiguousarray(medians, dtype=np.float64)
    support = np.ascontiguousarray(support, dtype=np.int64)
    return _impl.l1_assign(X, medians, support)
