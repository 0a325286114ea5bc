"""Alpha-spectral radii of digraph families and brute-force extremal checks."""

from .digraph import (
    Digraph,
    DigraphError,
    EvalPoint,
    alpha_matrix,
    build_digraph,
    charpoly_oracle,
    is_strongly_connected,
    principal_minor,
    strong_components,
    submatrix_det,
)
from .families import FamilySpec, c_n_g, cycle, girth, inf, path_bundle, rose, theta, theta_hat
from .spectral import ConvergenceError, SpectralResult, rho_any, rho_bisect, spectral_radius

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "Digraph",
    "DigraphError",
    "EvalPoint",
    "FamilySpec",
    "SpectralResult",
    "alpha_matrix",
    "build_digraph",
    "c_n_g",
    "charpoly_oracle",
    "cycle",
    "girth",
    "inf",
    "is_strongly_connected",
    "path_bundle",
    "principal_minor",
    "rho_any",
    "rho_bisect",
    "rose",
    "spectral_radius",
    "strong_components",
    "submatrix_det",
    "theta",
    "theta_hat",
]
