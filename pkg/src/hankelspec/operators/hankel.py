"""Finite Hankel matrices G_N = [g(j + k)] with FFT matrix-vector products."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import fft as sfft
from scipy.sparse.linalg import LinearOperator

from .._validation import check_vector
from ..funcspace.sequences import SequenceSpec, eval_sequence

_NAIVE_BLOCK = 512


class HankelMatrix:
    """N x N Hankel matrix with entries g(j + k), j, k = 0..N-1.

    Only the 2N - 1 generating values are stored.  ``matvec`` embeds the
    matrix in a circulant of length >= 2N - 1 and costs three FFTs.
    """

    def __init__(self, g, n):
        g = np.asarray(g)
        if n < 1:
            raise ValueError("N must be >= 1")
        if g.ndim != 1 or g.shape[0] < 2 * n - 1:
            raise ValueError(f"need 2N - 1 = {2 * n - 1} generating values, got {g.shape[0] if g.ndim else 0}")
        g = g[:2 * n - 1]
        if np.iscomplexobj(g) and np.all(g.imag == 0):
            g = g.real
        self.g = np.ascontiguousarray(g)
        self.n = int(n)
        self.hermitian = not np.iscomplexobj(self.g)
        self._L = sfft.next_fast_len(2 * n - 1)
        self._ghat = sfft.fft(self.g, self._L)

    @property
    def shape(self):
        return (self.n, self.n)

    @property
    def dtype(self):
        return self.g.dtype

    def matvec(self, u):
        """Product G u via FFT: (Gu)_j = sum_k g(j+k) u_k is a correlation."""
        u = check_vector(u, self.n)
        # reversing u turns the correlation into a convolution; keep indices N-1..2N-2
        c = sfft.ifft(self._ghat * sfft.fft(u[::-1], self._L))[self.n - 1:2 * self.n - 1]
        if self.hermitian and not np.iscomplexobj(u):
            return c.real
        return c

    def rmatvec(self, u):
        """Adjoint product G^* u (G is complex symmetric, so G^* u = conj(G conj(u)))."""
        if self.hermitian:
            return self.matvec(u)
        return np.conj(self.matvec(np.conj(check_vector(u, self.n))))

    def matvec_naive(self, u):
        """Direct O(N^2) product, one block of rows at a time (no N x N storage)."""
        u = check_vector(u, self.n)
        out = np.empty(self.n, dtype=np.result_type(self.g, u))
        windows = sliding_window_view(self.g, self.n)
        for i in range(0, self.n, _NAIVE_BLOCK):
            out[i:i + _NAIVE_BLOCK] = windows[i:i + _NAIVE_BLOCK] @ u
        return out

    def todense(self):
        return sliding_window_view(self.g, self.n).copy()

    def as_linear_operator(self):
        return LinearOperator(self.shape, matvec=self.matvec, rmatvec=self.rmatvec, dtype=self.dtype)

    def twisted(self):
        """Hankel matrix of (-1)^j g(j); unitarily equivalent via diag((-1)^j)."""
        sign = np.where(np.arange(self.g.size) % 2 == 0, 1.0, -1.0)
        return HankelMatrix(sign * self.g, self.n)

    def __repr__(self):
        kind = "real" if self.hermitian else "complex"
        return f"HankelMatrix(N={self.n}, {kind})"


def build_hankel(g, n) -> HankelMatrix:
    """Hankel matrix of order ``n`` from a ``SequenceSpec`` or an array of values."""
    if isinstance(g, SequenceSpec):
        g = eval_sequence(g, np.arange(2 * n - 1))
    return HankelMatrix(g, n)


def hankel_matvec(H: HankelMatrix, u):
    return H.matvec(u)
