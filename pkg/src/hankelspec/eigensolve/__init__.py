"""Dense and iterative eigenvalue / singular-value solvers."""

from .dense import dense_sym_eig
from .estimator import HankelSpectrum, SingularValueSpectrum, as_operator
from .lanczos import lanczos_extreme, start_vector
from .result import ConvergenceError, SpectrumResult, split_branches
from .svd import singular_values

__all__ = [
    "ConvergenceError", "HankelSpectrum", "SingularValueSpectrum", "SpectrumResult", "as_operator",
    "dense_sym_eig", "lanczos_extreme", "singular_values", "split_branches", "start_vector",
]
