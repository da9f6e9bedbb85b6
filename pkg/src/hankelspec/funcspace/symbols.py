"""Analytic symbols with logarithmic boundary singularities and their Taylor coefficients.

A symbol is omega(z) = sum_l v_l(z) (-log(zeta_l - z) + u_l(z))^(1 - alpha) on the
unit disc; its Taylor coefficients g(j) form a Hankel matrix whose singular values
control rational approximation of omega.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .._validation import check_positive

_NONVANISH_TOL = 1e-8


class SymbolError(ValueError):
    pass


def _as_callable(f):
    if callable(f):
        return f
    coeffs = tuple(complex(c) for c in np.atleast_1d(f))
    return lambda z: np.polynomial.polynomial.polyval(z, coeffs)


@dataclass(frozen=True)
class LogSingularTerm:
    """v(z) (-log(zeta - z) + u(z))^(1 - alpha) with |zeta| = 1.

    ``v`` and ``u`` are entire functions given either as callables or as
    ascending polynomial coefficients.  The logarithm is the branch that is
    continuous on the disc, log(zeta - z) = i arg(zeta) + log(1 - z/zeta).
    """

    zeta: complex
    alpha: float
    v: Callable | tuple = (1.0,)
    u: Callable | tuple = (0.0,)

    def __post_init__(self):
        check_positive(self.alpha, "alpha", strict=False)
        if abs(abs(self.zeta) - 1) > 1e-12:
            raise ValueError("zeta must lie on the unit circle")

    @property
    def exponent(self):
        return 1.0 - self.alpha

    def inner(self, z):
        z = np.asarray(z, dtype=complex)
        zeta = complex(self.zeta)
        log = 1j * np.angle(zeta) + np.log1p(-z / zeta)
        return -log + _as_callable(self.u)(z)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        w = self.inner(z)
        return _as_callable(self.v)(z) * w ** self.exponent


@dataclass(frozen=True)
class AnalyticSymbol:
    """Sum of log-singular terms plus an optional analytic remainder ``extra``."""

    terms: tuple = field(default_factory=tuple)
    extra: Callable | None = None

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for term in self.terms:
            out += term(z)
        if self.extra is not None:
            out += np.asarray(self.extra(z), dtype=complex)
        return out

    def boundary_values(self):
        """Values |v_l(zeta_l)| entering the rational-approximation constant."""
        return [abs(complex(_as_callable(t.v)(complex(t.zeta)))) for t in self.terms]


def check_nonvanishing(symbol: AnalyticSymbol, n_angles=256):
    """Raise ``SymbolError`` if some -log(zeta - z) + u(z) vanishes on the closed disc.

    Only terms whose exponent is not a nonnegative integer need the condition.
    The check samples concentric circles up to radius 1 - 1e-9.
    """
    radii = np.concatenate([[0.0], 1 - np.logspace(0, -9, 40)[1:]])
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    z = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    for term in symbol.terms:
        e = term.exponent
        if e >= 0 and float(e).is_integer():
            continue
        w = np.abs(term.inner(z))
        if np.min(w) < _NONVANISH_TOL:
            k = int(np.argmin(w))
            raise SymbolError(f"-log(zeta - z) + u(z) vanishes near z = {z[k]:.6g} for zeta = {term.zeta}")


def symbol_taylor_coeffs(symbol: AnalyticSymbol, n, tol=1e-10, damping=30.0, max_levels=8,
                         check=True):
    """Taylor coefficients g(0..n-1) of an analytic symbol.

    omega is sampled on the circle of radius r = exp(-damping / M) at M points,
    inverted by FFT and rescaled by r^-j.  M starts at the first power of two
    >= 4n and doubles until two successive levels agree to ``tol`` (relative
    to the largest coefficient).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if check:
        check_nonvanishing(symbol)
    M = 1 << int(np.ceil(np.log2(4 * n)))
    prev = None
    for _ in range(max_levels):
        g = _coeffs_on_circle(symbol, n, M, damping)
        if prev is not None:
            scale = max(np.max(np.abs(g)), 1e-300)
            if np.max(np.abs(g - prev)) <= tol * scale:
                return g
        prev = g
        M *= 2
    raise RuntimeError(f"Taylor coefficients did not converge to {tol} within {max_levels} levels")


def _coeffs_on_circle(symbol, n, M, damping, radius=None):
    r = np.exp(-damping / M) if radius is None else radius
    z = r * np.exp(2j * np.pi * np.arange(M) / M)
    c = np.fft.fft(symbol(z)) / M
    return c[:n] * r ** (-np.arange(n, dtype=float))


def taylor_coeffs_at_radius(symbol: AnalyticSymbol, n, M, radius):
    """Single-level coefficient estimate on a given circle; used for r-independence checks."""
    return _coeffs_on_circle(symbol, n, M, None, radius)
