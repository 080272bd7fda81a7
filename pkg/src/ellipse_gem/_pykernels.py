"""Pure-numpy fallback for the compiled kernels in ``_core``.

Same update order and tie rules as the Cython implementation, so both
backends agree to floating-point noise.  Used automatically when the
extension is unavailable and on demand via ``ELLIPSE_GEM_PURE_PYTHON=1``.
"""

import numpy as np


def glasso_sweep(S, W, B, lam, inner_eps, inner_max):
    """One block-coordinate-descent sweep; see ``_core.glasso_sweep``."""
    p = S.shape[0]
    if p <= 1:
        return 0.0
    total_change = 0.0
    for j in range(p):
        q = W @ B[:, j]
        for _ in range(inner_max):
            for a in range(p):
                if a == j:
                    continue
                beta_a = B[a, j]
                r = S[a, j] - (q[a] - W[a, a] * beta_a)
                if r > lam:
                    new_a = (r - lam) / W[a, a]
                elif r < -lam:
                    new_a = (r + lam) / W[a, a]
                else:
                    new_a = 0.0
                diff = new_a - beta_a
                if diff != 0.0:
                    B[a, j] = new_a
                    q += W[:, a] * diff
            grad = q - S[:, j]
            beta = B[:, j]
            viol = np.where(
                beta > 0,
                np.abs(grad + lam),
                np.where(beta < 0, np.abs(grad - lam), np.maximum(np.abs(grad) - lam, 0.0)),
            )
            viol[j] = 0.0
            if viol.max() <= inner_eps:
                break
        mask = np.ones(p, dtype=bool)
        mask[j] = False
        total_change += np.abs(q[mask] - W[mask, j]).sum()
        W[mask, j] = q[mask]
        W[j, mask] = q[mask]
    return total_change / (p * (p - 1))


def l1_assign(X, M, support):
    """L1 nearest-median assignment; see ``_core.l1_assign``."""
    diffs = np.abs(X[:, None, support] - M[None, :, support]).sum(axis=2)
    labels = np.argmin(diffs, axis=1).astype(np.int64)
    costs = diffs[np.arange(X.shape[0]), labels]
    return labels, costs
