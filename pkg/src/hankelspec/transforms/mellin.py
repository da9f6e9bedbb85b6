"""Mellin transform (Mu)(x) = (2 pi)^-1/2 int_0^inf u(t) t^(-1/2 - i x) dt on a log grid.

With t = e^y the transform is the unitary Fourier transform (kernel e^{-ixy})
of w(y) = e^{y/2} u(e^y), computed by a centered FFT.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .._validation import check_positive, check_power_of_two

DECAY_TOL = 1e-12


@dataclass(frozen=True)
class LogGrid:
    """Points t_k = exp(y_k) with y_k = -X + k h, h = 2X/M, k = 0..M-1.

    The dual (Mellin) grid is x_m = (m - M/2) 2 pi / (M h).
    """

    X: float
    M: int

    def __post_init__(self):
        check_positive(self.X, "X")
        check_power_of_two(self.M, "M")

    @property
    def h(self):
        return 2 * self.X / self.M

    @property
    def y(self):
        return -self.X + self.h * np.arange(self.M)

    @property
    def t(self):
        return np.exp(self.y)

    @property
    def dx(self):
        return 2 * np.pi / (self.M * self.h)

    @property
    def x(self):
        return (np.arange(self.M) - self.M // 2) * self.dx


def centered_fourier(w, h):
    """Unitary Fourier transform of samples on a centered grid of spacing ``h``."""
    return np.fft.fftshift(np.fft.fft(np.fft.ifftshift(w))) * (h / np.sqrt(2 * np.pi))


def centered_inverse_fourier(f, dx):
    M = len(f)
    return np.fft.fftshift(np.fft.ifft(np.fft.ifftshift(f))) * (M * dx / np.sqrt(2 * np.pi))


def _check_decay(w, tol, what):
    peak = np.max(np.abs(w))
    if peak == 0:
        return
    if max(abs(w[0]), abs(w[-1])) > tol * peak:
        raise ValueError(f"{what} does not decay at the grid ends "
                         f"(edge/peak = {max(abs(w[0]), abs(w[-1])) / peak:.2e})")


def mellin_grid(u, grid: LogGrid, decay_tol=DECAY_TOL):
    """Mellin transform of samples ``u(t_k)`` on ``grid``, at the dual points ``grid.x``."""
    u = np.asarray(u)
    if u.shape != (grid.M,):
        raise ValueError(f"u must have shape ({grid.M},)")
    w = np.exp(grid.y / 2) * u
    _check_decay(w, decay_tol, "t^(1/2) u(t)")
    return centered_fourier(w, grid.h)


def inverse_mellin_grid(f, grid: LogGrid):
    """Samples u(t_k) whose Mellin transform on ``grid.x`` is ``f``."""
    f = np.asarray(f)
    w = centered_inverse_fourier(f, grid.dx)
    return np.exp(-grid.y / 2) * w


def l2_norm_t(u, grid: LogGrid):
    """Discrete L^2(dt) norm, sum |u|^2 t h."""
    return np.sqrt(grid.h * np.sum(np.abs(u) ** 2 * grid.t))


def l2_norm_x(f, grid: LogGrid):
    return np.sqrt(grid.dx * np.sum(np.abs(f) ** 2))
