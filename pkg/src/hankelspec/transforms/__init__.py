"""Laplace, moment, Laguerre and Mellin transforms between representations."""

from .differences import iterated_difference, iterated_differences
from .io import read_samples_csv, read_sequence_csv, write_samples_csv, write_sequence_csv
from .laguerre import laguerre_functions, laguerre_gram, laguerre_project, weighted_laguerre
from .laplace import laplace_forward, laplace_kernel
from .mellin import LogGrid, centered_fourier, centered_inverse_fourier, inverse_mellin_grid, mellin_grid
from .moments import moments_from_eta
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, QuadratureError

__all__ = [
    "DEFAULT_QUADRATURE", "LogGrid", "QuadratureConfig", "QuadratureError", "centered_fourier",
    "centered_inverse_fourier", "inverse_mellin_grid", "iterated_difference", "iterated_differences",
    "laguerre_functions", "laguerre_gram", "laguerre_project", "laplace_forward", "laplace_kernel",
    "mellin_grid", "moments_from_eta", "read_samples_csv", "read_sequence_csv", "weighted_laguerre",
    "write_samples_csv", "write_sequence_csv",
]
