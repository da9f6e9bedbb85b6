"""Closed-form spectral asymptotics and fits against computed spectra."""

from .fit import FitReport, PowerLawFitter, fit_power_law, resolve_window
from .laws import (AsymptoticLaw, jump_law, kernel_eigenvalue_law, oscillatory_kernel_eigenvalue_law,
                   oscillatory_sequence_eigenvalue_law, oscillatory_singular_value_law, rational_approx_limit,
                   sequence_eigenvalue_law, smoothness_order, tau, weyl_coeff, widom_asymptotic_law, widom_law)

__all__ = [
    "AsymptoticLaw", "FitReport", "PowerLawFitter", "fit_power_law", "jump_law", "kernel_eigenvalue_law",
    "oscillatory_kernel_eigenvalue_law", "oscillatory_sequence_eigenvalue_law", "oscillatory_singular_value_law",
    "rational_approx_limit", "resolve_window", "sequence_eigenvalue_law", "smoothness_order", "tau", "weyl_coeff",
    "widom_asymptotic_law", "widom_law",
]
