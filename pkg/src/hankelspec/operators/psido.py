"""Periodic-grid discretization of pseudo-differential operators v(X) m(D) v(X)."""

from __future__ import annotations

from typing import Callable

import numpy as np
import scipy.linalg as sla
from scipy.sparse.linalg import LinearOperator

from .._validation import check_positive, check_power_of_two, check_vector
from ..funcspace.cutoffs import smooth_step

DECAY_TOL = 1e-12


def standard_weight(x):
    """v(x) = sqrt(pi / cosh(pi x)), evaluated without overflow."""
    a = np.abs(np.asarray(x, dtype=float))
    return np.sqrt(2 * np.pi) * np.exp(-np.pi * a / 2) / np.sqrt(1 + np.exp(-2 * np.pi * a))


def rolloff(xi, xi_max, start=0.8):
    """Smooth factor equal to 1 for |xi| <= start*xi_max, falling to 0 at xi_max."""
    width = (1 - start) * xi_max
    return smooth_step((xi_max - np.abs(xi)) / width)


class GridPsiDO:
    """V F^-1 diag(m) F V on M uniform points of [-X, X).

    ``x`` are the grid points, ``xi`` the dual frequencies in FFT order
    (covering [-pi M / (2X), pi M / (2X))), ``v`` the weight samples and ``m``
    the multiplier samples.
    """

    def __init__(self, x, xi, v, m, damping=None):
        self.x = x
        self.xi = xi
        self.v = v
        self.m = m
        self.damping = damping
        self.n = x.size
        mirrored = m[(-np.arange(self.n)) % self.n].conj()
        real_kernel = np.array_equal(m, mirrored) and not np.iscomplexobj(v)
        self._dtype = np.dtype(np.float64) if real_kernel else np.dtype(np.complex128)

    @property
    def shape(self):
        return (self.n, self.n)

    @property
    def xi_max(self):
        return np.pi / (self.x[1] - self.x[0])

    @property
    def is_self_adjoint(self):
        return not np.iscomplexobj(self.v) and not np.iscomplexobj(self.m)

    @property
    def dtype(self):
        return self._dtype

    def matvec(self, u):
        u = check_vector(u, self.n)
        out = self.v * np.fft.ifft(self.m * np.fft.fft(self.v * u))
        if self.dtype == np.float64 and not np.iscomplexobj(u):
            return out.real
        return out

    def kernel_column(self):
        """First column c of the circulant F^-1 diag(m) F."""
        c = np.fft.ifft(self.m)
        return c.real if self.dtype == np.float64 else c

    def todense(self):
        C = sla.circulant(self.kernel_column())
        return self.v[:, None] * C * self.v[None, :]

    def as_linear_operator(self):
        return LinearOperator(self.shape, matvec=self.matvec, rmatvec=self.matvec, dtype=self.dtype)

    def rolloff_mass(self, vectors):
        """Fraction of each column's spectral mass in the roll-off band |xi| > 0.8 xi_max."""
        F = np.abs(np.fft.fft(vectors, axis=0)) ** 2
        band = np.abs(self.xi) > 0.8 * self.xi_max
        return F[band].sum(axis=0) / F.sum(axis=0)


def psido_grid(X, M):
    X = check_positive(X, "X")
    M = check_power_of_two(M, "M")
    h = 2 * X / M
    x = -X + h * np.arange(M)
    xi = 2 * np.pi * np.fft.fftfreq(M, d=h)
    return x, xi


def build_psido(v: Callable | None, m: Callable, X, M, decay_tol=DECAY_TOL, polynomial=False) -> GridPsiDO:
    """Grid operator for v(X) m(D) v(X).

    Parameters
    ----------
    v : callable or None
        Weight; ``None`` selects the standard weight sqrt(pi / cosh(pi x)).
    m : callable
        Multiplier evaluated at the dual frequencies.
    X, M : float, int
        Half-width of the x-grid and number of points (a power of two).
    polynomial : bool
        For unbounded multipliers: apply a smooth roll-off beyond 0.8 xi_max
        to suppress aliasing.
    """
    x, xi = psido_grid(X, M)
    vv = np.asarray((v or standard_weight)(x))
    peak = np.max(np.abs(vv))
    if max(abs(vv[0]), abs(vv[-1])) > decay_tol * peak:
        raise ValueError(f"weight does not decay below {decay_tol:g} at the grid ends; increase X")
    mm = np.asarray(m(xi))
    if mm.shape != xi.shape:
        mm = np.broadcast_to(mm, xi.shape).copy()
    damping = None
    if polynomial:
        damping = rolloff(xi, np.pi * M / (2 * X))
        mm = mm * damping
    if not np.all(np.isfinite(mm)):
        raise ValueError("multiplier is not finite on the dual grid")
    return GridPsiDO(x, xi, vv, mm, damping)


def build_sigma_psido(sigma, X, M) -> GridPsiDO:
    """The ΨDO representative v(X) s(D) v(X) of the Hankel operator with sigma function ``sigma``."""
    return build_psido(None, sigma.s, X, M)


def build_carleman_psido(q, X, M) -> GridPsiDO:
    """ΨDO representative of the kernel P(log t)/t, with q = carleman_Q_from_P(p).

    The multiplier is s(xi) = Q(-xi), the sigma function Q(log lambda) in the
    s-view; it is unbounded, so the roll-off is applied when deg Q >= 1.
    """
    q = tuple(float(c) for c in q)
    return build_psido(None, lambda xi: np.polynomial.polynomial.polyval(-xi, q), X, M, polynomial=len(q) > 1)
