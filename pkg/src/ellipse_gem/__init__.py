"""Semiparametric elliptical mixture clustering via a generalized EM algorithm.

High-dimensional, heavy-tail-robust clustering with cluster-specific centers,
a shared nonparametrically estimated radial generator, and a shared sparse
precision-shape matrix, plus a permutation-gap selector for the number of
clusters, synthetic benchmark designs, and baseline clusterers.
"""

from .config import GemConfig, ShapeConfig
from .gem import FitResult, ModelState, classify, fit
from .model_selection import GapTable, select_k

__all__ = [
    "GemConfig",
    "ShapeConfig",
    "ModelState",
    "FitResult",
    "fit",
    "classify",
    "GapTable",
    "select_k",
]

__version__ = "0.1.0"
