"""The Hankel operator applied through its ΨDO representative.

With the modified Mellin transform (Nf)(x) = phase(x) (Mf)(-x), where
phase(x) = Gamma(1/2 - ix) / |Gamma(1/2 - ix)|, a Hankel operator with bounded
sigma function satisfies H = N^-1 v(X) s(D) v(X) N.
"""

from __future__ import annotations

import numpy as np
from scipy.special import loggamma

from ..funcspace.sigma import SigmaSpec
from ..transforms.mellin import (LogGrid, centered_fourier, centered_inverse_fourier, inverse_mellin_grid,
                                 mellin_grid)
from .psido import standard_weight


def gamma_phase(x):
    """Gamma(1/2 - ix) / |Gamma(1/2 - ix)| via the complex log-Gamma function."""
    return np.exp(1j * loggamma(0.5 - 1j * np.asarray(x, dtype=float)).imag)


def _reflect(f):
    # f(-x) on the centered grid x_m = (m - M/2) dx; the Nyquist point maps to itself
    return f[(-np.arange(f.size)) % f.size]


def modified_mellin(u, grid: LogGrid):
    """Samples of (Nu)(x) on ``grid.x``."""
    return gamma_phase(grid.x) * _reflect(mellin_grid(u, grid))


def inverse_modified_mellin(f, grid: LogGrid):
    Mu = _reflect(f / gamma_phase(grid.x))
    return inverse_mellin_grid(Mu, grid)


def apply_hankel_via_psido(sigma: SigmaSpec, u, grid: LogGrid):
    """Samples of (Hu)(t_k), H the Hankel operator of the bounded ``sigma``.

    ``u`` holds samples u(t_k) on ``grid``; t^(1/2) u must decay at both ends.
    The x-grid of the ΨDO is the Mellin dual of ``grid`` and its frequency grid
    coincides with the log t grid.
    """
    if not sigma.bounded:
        raise ValueError("the ΨDO identity needs a bounded sigma function")
    u = np.asarray(u)
    if not np.any(u):
        return np.zeros(grid.M, dtype=float)
    F = standard_weight(grid.x) * modified_mellin(u, grid)
    # s(D) on the x-grid: forward transform lands on frequencies (k - M/2) h = y_k
    Fhat = centered_fourier(F, grid.dx)
    G = standard_weight(grid.x) * centered_inverse_fourier(sigma.s(grid.y) * Fhat, grid.h)
    out = inverse_modified_mellin(G, grid)
    return out.real if not np.iscomplexobj(u) else out
