"""Deterministic matrix and scalar kernels shared by every other module.

Symmetric matrices are plain ``(p, p)`` float ndarrays; every operation
symmetrizes defensively where the contract requires it.  Eigendecompositions
use a fixed deterministic convention (descending eigenvalues, each
eigenvector's largest-magnitude entry made positive) so that downstream
regularizers are reproducible across runs and platforms.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import NumericError


def as_square(A) -> np.ndarray:
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A


def symmetrize(A) -> np.ndarray:
    A = as_square(A)
    return 0.5 * (A + A.T)


def clip(x, lo, hi):
    """Clamp ``x`` into ``[lo, hi]``; works on scalars and arrays."""
    if lo > hi:
        raise ValueError(f"invalid clip range: lo={lo} > hi={hi}")
    return np.minimum(np.maximum(x, lo), hi)


@dataclass(frozen=True)
class InterpCurve:
    """Piecewise-linear curve with constant extension outside the knot range."""

    knots: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)
        if knots.ndim != 1 or values.ndim != 1 or knots.size != values.size:
            raise ValueError("knots and values must be 1-D sequences of equal length")
        if knots.size < 1:
            raise ValueError("curve needs at least one knot")
        if knots.size > 1 and not np.all(np.diff(knots) > 0):
            raise ValueError("knots must be strictly increasing")
        if not (np.isfinite(knots).all() and np.isfinite(values).all()):
            raise NumericError("curve contains non-finite entries")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "values", values)

    def __call__(self, u):
        return lin_interp(self, u)


def lin_interp(curve: InterpCurve, u):
    """Evaluate the curve at ``u``: linear inside the knot range, constant outside."""
    return np.interp(u, curve.knots, curve.values)


def ordered_eigh(A) -> tuple:
    """Eigendecomposition of the symmetrized input with a deterministic convention.

    Returns ``(evals, evecs)`` with eigenvalues descending and each eigenvector
    scaled so its largest-magnitude entry (lowest index on ties) is positive.
    """
    S = symmetrize(A)
    if not np.isfinite(S).all():
        raise NumericError("matrix has non-finite entries")
    evals, evecs = np.linalg.eigh(S)
    evals = evals[::-1].copy()
    evecs = evecs[:, ::-1].copy()
    lead = np.argmax(np.abs(evecs), axis=0)
    signs = np.sign(evecs[lead, np.arange(evecs.shape[1])])
    signs[signs == 0] = 1.0
    evecs *= signs
    return evals, evecs


def proj_pd(A, eps_pd: float) -> np.ndarray:
    """Positive-definite projection: floor every eigenvalue at ``eps_pd``.

    A Cholesky certificate short-circuits the eigendecomposition when the
    symmetrized input already has its full spectrum above the floor, in which
    case the input is returned unchanged.
    """
    if eps_pd <= 0:
        raise ValueError(f"eps_pd must be positive, got {eps_pd}")
    S = symmetrize(A)
    if not np.isfinite(S).all():
        raise NumericError("matrix has non-finite entries")
    p = S.shape[0]
    try:
        np.linalg.cholesky(S - eps_pd * np.eye(p))
        return S
    except np.linalg.LinAlgError:
        pass
    evals, evecs = ordered_eigh(S)
    out = (evecs * np.maximum(evals, eps_pd)) @ evecs.T
    return 0.5 * (out + out.T)


def trace_normalize(A) -> np.ndarray:
    """Rescale so the trace equals the dimension: ``p * A / tr(A)``."""
    S = as_square(A)
    tr = float(np.trace(S))
    if not np.isfinite(tr) or tr <= 0:
        raise NumericError(f"degenerate trace {tr}; cannot normalize")
    return S * (S.shape[0] / tr)


def soft_threshold_offdiag(A, lambda_u: float) -> np.ndarray:
    """Soft-threshold off-diagonal entries by ``lambda_u``; diagonal untouched."""
    if lambda_u < 0:
        raise ValueError(f"lambda_u must be nonnegative, got {lambda_u}")
    S = as_square(A)
    out = np.sign(S) * np.maximum(np.abs(S) - lambda_u, 0.0)
    np.fill_diagonal(out, np.diagonal(S))
    return out


def symmetric_sqrt(A) -> np.ndarray:
    """Symmetric square root S of a PSD matrix, with ``S @ S = A``."""
    evals, evecs = ordered_eigh(A)
    scale = max(1.0, float(np.abs(evals).max(initial=0.0)))
    if evals.min(initial=0.0) < -1e-10 * scale:
        raise NumericError(f"matrix is not PSD (min eigenvalue {evals.min()})")
    root = (evecs * np.sqrt(np.maximum(evals, 0.0))) @ evecs.T
    return 0.5 * (root + root.T)


def poet(A, m: int, lambda_u: float, eps_pd: float) -> np.ndarray:
    """Low-rank factor part plus soft-thresholded remainder, then PD projection.

    The top ``m`` eigenpairs of the symmetrized input are retained untouched
    (none when ``m = 0``); the principal orthogonal complement keeps its
    diagonal and has its off-diagonal entries soft-thresholded by
    ``lambda_u``; the sum is projected onto the PD cone at level ``eps_pd``.
    """
    S = symmetrize(A)
    p = S.shape[0]
    if not 0 <= m <= p:
        raise ValueError(f"factor count m={m} outside [0, {p}]")
    if m == 0:
        low_rank = np.zeros_like(S)
    else:
        evals, evecs = ordered_eigh(S)
        low_rank = (evecs[:, :m] * evals[:m]) @ evecs[:, :m].T
    remainder = S - low_rank
    return proj_pd(low_rank + soft_threshold_offdiag(remainder, lambda_u), eps_pd)
