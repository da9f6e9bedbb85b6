"""Closed-form eigenvalue and singular-value asymptotics.

Every power law has the form lambda_n^+- ~ a^+- n^-alpha.  Coefficients combine
endpoint amplitudes in the 1/alpha metric,
a = tau(alpha) (sum_i c_i^(1/alpha))^alpha, with
tau(alpha) = 2^-alpha pi^(1 - 2 alpha) B(1/(2 alpha), 1/2)^alpha.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy import integrate
from scipy.special import betaln

from .._validation import check_nonneg_int, check_positive

FAMILIES = ("power", "jump", "widom")


@dataclass(frozen=True)
class AsymptoticLaw:
    """lambda_n^+- ~ coef_plus/minus * n^-exponent (power and jump families).

    For the Widom family ``exponent`` holds gamma and the law reads
    lambda_n^+ = exp(-pi sqrt(2 gamma n) + o(sqrt n)).
    """

    exponent: float
    coef_plus: float
    coef_minus: float
    family: str = "power"
    source: str = ""
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if self.coef_plus < 0 or self.coef_minus < 0:
            raise ValueError("coefficients must be non-negative")
        if self.family in ("power", "jump") and self.exponent <= 0:
            raise ValueError("power-law exponent must be positive")
        if self.family == "jump" and self.coef_plus != self.coef_minus:
            raise ValueError("jump laws have equal branch coefficients")

    def coef(self, branch):
        return self.coef_plus if branch in ("+", "plus") else self.coef_minus

    def predict(self, n, branch="+"):
        n = np.asarray(n, dtype=float)
        if self.family == "widom":
            return np.exp(-np.pi * np.sqrt(2 * self.exponent * n))
        return self.coef(branch) * n ** (-self.exponent)

    def to_dict(self):
        return asdict(self)


def tau(alpha):
    """Universal constant tau(alpha), computed through log-Beta."""
    alpha = check_positive(alpha, "alpha")
    return math.exp(-alpha * math.log(2) + (1 - 2 * alpha) * math.log(math.pi)
                    + alpha * betaln(1 / (2 * alpha), 0.5))


def _pos(x):
    return max(float(x), 0.0)


def _combine(alpha, parts):
    total = sum(p ** (1 / alpha) for p in parts if p > 0)
    return tau(alpha) * total ** alpha if total > 0 else 0.0


def _signed_law(alpha, signed, unsigned, source, params):
    alpha = check_positive(alpha, "alpha")
    mags = [abs(complex(k)) for k in unsigned]
    plus = _combine(alpha, [_pos(c) for c in signed] + mags)
    minus = _combine(alpha, [_pos(-c) for c in signed] + mags)
    return AsymptoticLaw(alpha, plus, minus, "power", source, params)


def kernel_eigenvalue_law(alpha, kappa_zero, kappa_inf) -> AsymptoticLaw:
    """Kernel h(t) ~ kappa_0 t^-1 |log t|^-alpha (t -> 0) and kappa_inf ... (t -> inf)."""
    return _signed_law(alpha, [kappa_zero, kappa_inf], [], "log-power kernel",
                       {"alpha": alpha, "kappa_zero": kappa_zero, "kappa_inf": kappa_inf})


def sequence_eigenvalue_law(alpha, kappa_one, kappa_minus_one) -> AsymptoticLaw:
    """Sequence g(j) ~ (kappa_1 + (-1)^j kappa_-1) j^-1 (log j)^-alpha."""
    return _signed_law(alpha, [kappa_one, kappa_minus_one], [], "log-power sequence",
                       {"alpha": alpha, "kappa_one": kappa_one, "kappa_minus_one": kappa_minus_one})


def oscillatory_singular_value_law(alpha, kappas: Sequence[complex]) -> AsymptoticLaw:
    """Singular values of g(j) = sum_l kappa_l j^-1 (log j)^-alpha zeta_l^-j, distinct zeta_l."""
    alpha = check_positive(alpha, "alpha")
    b = _combine(alpha, [abs(complex(k)) for k in kappas])
    return AsymptoticLaw(alpha, b, b, "power", "oscillatory sequence (singular values)",
                         {"alpha": alpha, "kappas": [complex(k) for k in kappas]})


def oscillatory_sequence_eigenvalue_law(alpha, kappa_one, kappa_minus_one, kappas=()) -> AsymptoticLaw:
    """Eigenvalues when real endpoint terms (zeta = +-1) coexist with oscillating ones."""
    return _signed_law(alpha, [kappa_one, kappa_minus_one], kappas, "oscillatory sequence (eigenvalues)",
                       {"alpha": alpha, "kappa_one": kappa_one, "kappa_minus_one": kappa_minus_one,
                        "kappas": [complex(k) for k in kappas]})


def oscillatory_kernel_eigenvalue_law(alpha, kappa_zero, kappa_inf, kappas=()) -> AsymptoticLaw:
    """Eigenvalues of log-power kernels at 0 and infinity plus oscillating terms at infinity."""
    return _signed_law(alpha, [kappa_zero, kappa_inf], kappas, "oscillatory kernel (eigenvalues)",
                       {"alpha": alpha, "kappa_zero": kappa_zero, "kappa_inf": kappa_inf,
                        "kappas": [complex(k) for k in kappas]})


def weyl_coeff(alpha, s_plus_inf, s_minus_inf, v: Callable | None = None, decay_exponent=None):
    """Weyl coefficients (a^+, a^-) of v(X) s(D) v(X) with s(xi) ~ s_+-inf |xi|^-alpha.

    a^+- = (2 pi)^-alpha ((s_-inf)_+-^(1/alpha) + (s_inf)_+-^(1/alpha))^alpha (int |v|^(2/alpha) dx)^alpha.
    ``v=None`` selects the standard weight sqrt(pi / cosh(pi x)).
    """
    alpha = check_positive(alpha, "alpha")
    if v is None:
        from ..operators.psido import standard_weight as v
    p = 2 / alpha
    rho = alpha / 2 if decay_exponent is None else decay_exponent
    # decay hypothesis |v(x)| <= C <x>^-rho with rho > alpha/2: the weighted tail must not grow
    xs = np.logspace(1, 4, 31)
    tails = np.array([np.abs(v(np.array([x, -x]))).max() for x in xs]) * (1 + xs ** 2) ** (rho / 2)
    if tails[-1] > 10 * max(tails[0], 1e-300):
        raise ValueError("weight does not satisfy the decay hypothesis")
    f = lambda x: float(np.abs(v(np.array([x])))[0]) ** p
    integral = sum(integrate.quad(f, a, b, limit=200, epsabs=0, epsrel=1e-13)[0]
                   for a, b in ((-np.inf, -1), (-1, 0), (0, 1), (1, np.inf)))
    tail = integrate.quad(f, 1e3, np.inf, limit=200)[0] + integrate.quad(f, -np.inf, -1e3, limit=200)[0]
    if not np.isfinite(integral) or tail > 1e-3 * integral:
        raise ValueError("int |v|^(2/alpha) dx appears divergent")
    scale = (2 * np.pi) ** (-alpha) * integral ** alpha

    def branch(sign):
        parts = [_pos(sign * s_minus_inf), _pos(sign * s_plus_inf)]
        total = sum(c ** (1 / alpha) for c in parts if c > 0)
        return scale * total ** alpha if total > 0 else 0.0

    return branch(1), branch(-1)


def jump_law(h0, l, t0) -> AsymptoticLaw:
    """Kernel h0 (t0 - t)^l on (0, t0): lambda_n^+- ~ |h0| l! (2 pi)^(-l-1) t0^(l+1) n^(-l-1)."""
    l = check_nonneg_int(l, "l")
    t0 = check_positive(t0, "t0")
    c = abs(h0) * math.factorial(l) * (2 * math.pi) ** (-l - 1) * t0 ** (l + 1)
    return AsymptoticLaw(l + 1, c, c, "jump", "jump kernel", {"h0": h0, "l": l, "t0": t0})


def widom_law(gamma):
    """Predicted exponent n -> pi sqrt(2 gamma n) for g(j) = (j + 1)^-gamma."""
    if not gamma > 1:
        raise ValueError("gamma must exceed 1")
    return lambda n: np.pi * np.sqrt(2 * gamma * np.asarray(n, dtype=float))


def widom_asymptotic_law(gamma) -> AsymptoticLaw:
    if not gamma > 1:
        raise ValueError("gamma must exceed 1")
    return AsymptoticLaw(float(gamma), 1.0, 0.0, "widom", "power sequence", {"gamma": gamma})


def rational_approx_limit(alpha, boundary_values: Sequence[complex]):
    """lim n^alpha of the rational-approximation distance: |1 - alpha| tau(alpha) (sum |v_l|^(1/alpha))^alpha."""
    alpha = check_positive(alpha, "alpha")
    return abs(1 - alpha) * _combine(alpha, [abs(complex(v)) for v in boundary_values])


def smoothness_order(alpha):
    """N(alpha) = floor(alpha) + 1 for alpha >= 1/2, and 0 below."""
    alpha = check_positive(alpha, "alpha")
    return int(math.floor(alpha)) + 1 if alpha >= 0.5 else 0
