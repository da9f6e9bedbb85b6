"""Scalar functions: kernels, sequences, sigma functions, cutoffs and symbols."""

from .carleman import carleman_P_from_Q, carleman_Q_from_P, recip_gamma_derivatives
from .cutoffs import CutoffConfig, chi_infinity, chi_zero, smooth_step
from .kernels import (CarlemanPoly, Jump, KernelSpec, LogPower, Oscillatory, TabulatedKernel,
                      eval_kernel, kernel_from_config)
from .sequences import (LogPowerSeq, MomentSeq, PowerSeq, SequenceSpec, TabulatedSeq, eval_sequence,
                        sequence_from_config)
from .sigma import (SigmaSpec, constant_sigma, indicator_eta, lam_to_mu, lam_to_xi, log_polynomial_sigma,
                    model_eta_star, model_sigma_star, mu_to_lam, mu_to_xi, power_sigma, sigma_from_config,
                    sigma_views, xi_to_lam, xi_to_mu)
from .symbols import AnalyticSymbol, LogSingularTerm, SymbolError, check_nonvanishing, symbol_taylor_coeffs

__all__ = [
    "AnalyticSymbol", "CarlemanPoly", "CutoffConfig", "Jump", "KernelSpec", "LogPower", "LogPowerSeq",
    "LogSingularTerm", "MomentSeq", "Oscillatory", "PowerSeq", "SequenceSpec", "SigmaSpec", "SymbolError",
    "TabulatedKernel", "TabulatedSeq", "carleman_P_from_Q", "carleman_Q_from_P", "check_nonvanishing",
    "chi_infinity", "chi_zero", "constant_sigma", "eval_kernel", "eval_sequence", "indicator_eta",
    "kernel_from_config", "lam_to_mu", "lam_to_xi", "log_polynomial_sigma", "model_eta_star",
    "model_sigma_star", "mu_to_lam", "mu_to_xi", "power_sigma", "recip_gamma_derivatives",
    "sequence_from_config", "sigma_from_config", "sigma_views", "smooth_step", "symbol_taylor_coeffs",
    "xi_to_lam", "xi_to_mu",
]
