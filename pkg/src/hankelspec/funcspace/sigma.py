"""Sigma functions in their three equivalent views.

A sigma function sigma(lambda) on the half-line determines the kernel
h = L sigma (Laplace transform).  The same function is written as

* ``s(xi) = sigma(exp(-xi))`` on the line (the ΨDO multiplier), and
* ``eta(mu)`` on (-1, 1) with ``sigma(lambda) = eta((2 lambda - 1) / (2 lambda + 1))``,
  whose moments are the entries of the Hankel matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import gamma as gamma_fn

from .._validation import check_positive
from .cutoffs import chi_infinity, chi_zero

LOG2 = np.log(2.0)
VIEWS = ("sigma", "s", "eta")


# changes of variables ------------------------------------------------------

def lam_to_xi(lam):
    return -np.log(lam)


def xi_to_lam(xi):
    return np.exp(-np.asarray(xi, dtype=float))


def lam_to_mu(lam):
    lam = np.asarray(lam, dtype=float)
    return (2 * lam - 1) / (2 * lam + 1)


def mu_to_lam(mu):
    mu = np.asarray(mu, dtype=float)
    return (1 + mu) / (2 * (1 - mu))


def mu_to_xi(mu):
    mu = np.asarray(mu, dtype=float)
    return LOG2 - np.log1p(mu) + np.log1p(-mu)


def xi_to_mu(xi):
    return np.tanh((LOG2 - np.asarray(xi, dtype=float)) / 2)


def _check_domain(point, view):
    p = np.asarray(point, dtype=float)
    if view == "sigma" and np.any(~(p > 0)):
        raise ValueError("sigma view requires lambda > 0")
    if view == "eta" and np.any(~((p > -1) & (p < 1))):
        raise ValueError("eta view requires mu in (-1, 1)")
    if view == "s" and np.any(~np.isfinite(p)):
        raise ValueError("s view requires finite xi")
    return p


@dataclass(frozen=True)
class SigmaSpec:
    """A sigma function stored in one view and evaluable in all three.

    ``breakpoints`` lists xi-locations where the function is not smooth (or
    changes behaviour); quadrature routines place panel edges there.
    """

    view: str
    func: Callable
    bounded: bool = False
    params: dict = field(default_factory=dict)
    breakpoints: tuple[float, ...] = ()
    name: str = ""

    def __post_init__(self):
        if self.view not in VIEWS:
            raise ValueError(f"view must be one of {VIEWS}, got {self.view!r}")

    def _call(self, x):
        return np.asarray(self.func(x))

    def sigma(self, lam):
        lam = _check_domain(lam, "sigma")
        if self.view == "sigma":
            return self._call(lam)
        if self.view == "s":
            return self._call(lam_to_xi(lam))
        return self._call(lam_to_mu(lam))

    def s(self, xi):
        xi = _check_domain(xi, "s")
        if self.view == "s":
            return self._call(xi)
        if self.view == "sigma":
            return self._call(xi_to_lam(xi))
        return self._call(xi_to_mu(xi))

    def eta(self, mu):
        mu = _check_domain(mu, "eta")
        if self.view == "eta":
            return self._call(mu)
        if self.view == "s":
            return self._call(mu_to_xi(mu))
        return self._call(mu_to_lam(mu))

    def view_fn(self, view):
        return {"sigma": self.sigma, "s": self.s, "eta": self.eta}[view]


def sigma_views(spec: SigmaSpec, point, view="s"):
    """Evaluate the ``view`` ('sigma', 's' or 'eta') of ``spec`` at ``point``."""
    if view not in VIEWS:
        raise ValueError(f"view must be one of {VIEWS}, got {view!r}")
    return spec.view_fn(view)(point)


# families --------------------------------------------------------------------

def constant_sigma(c=1.0) -> SigmaSpec:
    """sigma = c; the kernel is c/t (Carleman operator for c = 1)."""
    return SigmaSpec("sigma", lambda lam: np.full(np.shape(lam), float(c)), True, {"c": c}, (), "constant")


def indicator_eta(a=0.0, b=1.0) -> SigmaSpec:
    """eta = indicator of [a, b] within (-1, 1); [0, 1] gives the Hilbert matrix."""
    if not -1 <= a < b <= 1:
        raise ValueError("need -1 <= a < b <= 1")
    edges = tuple(float(mu_to_xi(x)) for x in (a, b) if -1 < x < 1)
    return SigmaSpec("eta", lambda mu: ((mu >= a) & (mu <= b)).astype(float), True,
                     {"a": a, "b": b}, tuple(sorted(edges)), "indicator_eta")


def power_sigma(q) -> SigmaSpec:
    """sigma(lambda) = lambda^(q-1) / Gamma(q), the sigma function of h(t) = t^-q."""
    q = check_positive(q, "q")
    return SigmaSpec("sigma", lambda lam: lam ** (q - 1) / gamma_fn(q), q == 1, {"q": q}, (), "power")


def log_polynomial_sigma(q_coeffs) -> SigmaSpec:
    """sigma(lambda) = sum_m q_m (log lambda)^m; unbounded unless constant."""
    q = tuple(float(c) for c in q_coeffs)

    def s(xi):
        return np.polynomial.polynomial.polyval(-np.asarray(xi), q)

    return SigmaSpec("s", s, len(q) == 1, {"q": q}, (), "log_polynomial")


def _model_s(alpha, k_left, k_right, left_cut, right_cut):
    # k_left multiplies the piece living on xi -> +inf, k_right the piece on xi -> -inf
    def s(xi):
        xi = np.asarray(xi, dtype=float)
        shape = xi.shape
        xi = xi.reshape(-1)
        lam = np.exp(-np.clip(xi, -700, 700))
        out = np.zeros(xi.shape)
        a = k_left * left_cut(lam) + k_right * right_cut(lam)
        live = a != 0
        out[live] = a[live] / np.abs(xi[live]) ** alpha
        return out.reshape(shape)

    return s


def model_sigma_star(alpha, kappa_zero, kappa_inf) -> SigmaSpec:
    """Model sigma function kappa_inf |log l|^-a chi_0(l) + kappa_0 |log l|^-a chi_inf(l).

    Its kernel behaves like kappa_0 t^-1 |log t|^-alpha as t -> 0 and like
    kappa_inf t^-1 |log t|^-alpha as t -> infinity.  Stored in the s-view,
    ``s(xi) = |xi|^-alpha (kappa_inf chi_0(e^-xi) + kappa_0 chi_inf(e^-xi))``.
    """
    alpha = check_positive(alpha, "alpha")
    s = _model_s(alpha, kappa_inf, kappa_zero, chi_zero, chi_infinity)
    br = (-np.log(4.0), -LOG2, LOG2, np.log(4.0))
    return SigmaSpec("s", s, True, {"alpha": alpha, "kappa_zero": kappa_zero, "kappa_inf": kappa_inf},
                     br, "sigma_star")


def model_eta_star(alpha, kappa_one, kappa_minus_one) -> SigmaSpec:
    """Model eta with endpoint behaviour kappa_1 |log(1-mu)|^-a and kappa_-1 |log(1+mu)|^-a.

    eta(mu) = |log l|^-alpha (kappa_1 chi_inf(l) + kappa_-1 chi_0(4 l)) with
    l = (1 + mu) / (2 (1 - mu)); stored in the s-view with l = e^-xi.
    """
    alpha = check_positive(alpha, "alpha")
    s = _model_s(alpha, kappa_minus_one, kappa_one, lambda lam: chi_zero(4 * lam), chi_infinity)
    br = (-np.log(4.0), -LOG2, np.log(8.0), np.log(16.0))
    return SigmaSpec("s", s, True, {"alpha": alpha, "kappa_one": kappa_one, "kappa_minus_one": kappa_minus_one},
                     br, "eta_star")


SIGMA_MODELS = {
    "constant": lambda c=1.0: constant_sigma(c),
    "indicator_eta": indicator_eta,
    "power": power_sigma,
    "log_polynomial": lambda q: log_polynomial_sigma(q),
    "sigma_star": model_sigma_star,
    "eta_star": model_eta_star,
}


def sigma_from_config(cfg) -> SigmaSpec:
    """Build a model ``SigmaSpec`` from ``{"model": name, **params}``."""
    if isinstance(cfg, SigmaSpec):
        return cfg
    cfg = dict(cfg)
    model = cfg.pop("model", None)
    if model not in SIGMA_MODELS:
        raise ValueError(f"unknown sigma model {model!r}; known: {sorted(SIGMA_MODELS)}")
    return SIGMA_MODELS[model](**cfg)
