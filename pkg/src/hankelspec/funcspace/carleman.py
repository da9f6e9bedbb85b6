"""Coefficient maps for generalized Carleman kernels h(t) = P(log t) / t.

Such a kernel is the Laplace transform of sigma(lambda) = Q(log lambda) with
q_m = (-1)^m sum_{j >= m} C(j, m) gamma^{(j-m)}(0) p_j and gamma(z) = 1/Gamma(1-z).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

import numpy as np
from scipy.linalg import solve_triangular
from scipy.special import zeta

TAYLOR_ORDER = 30


@lru_cache(maxsize=8)
def _recip_gamma_series(order):
    # log Gamma(1 - z) = euler_gamma z + sum_{k>=2} zeta(k) z^k / k, so
    # 1/Gamma(1 - z) = exp(a(z)) with the negated coefficients
    a = np.zeros(order + 1)
    a[1] = -np.euler_gamma
    k = np.arange(2, order + 1)
    a[2:] = -zeta(k) / k
    # exponentiate the power series: n f_n = sum_{i=1}^n i a_i f_{n-i}
    f = np.zeros(order + 1)
    f[0] = 1.0
    for n in range(1, order + 1):
        i = np.arange(1, n + 1)
        f[n] = np.dot(i * a[1:n + 1], f[n - i]) / n
    return f


def recip_gamma_derivatives(order=TAYLOR_ORDER):
    """Derivatives gamma^{(k)}(0), k = 0..order, of gamma(z) = 1/Gamma(1 - z)."""
    f = _recip_gamma_series(TAYLOR_ORDER if order <= TAYLOR_ORDER else order)
    return np.array([factorial(k) * f[k] for k in range(order + 1)])


def carleman_Q_from_P(p):
    """Coefficients of Q (ascending) such that L[Q(log lambda)](t) = P(log t)/t.

    Parameters
    ----------
    p : sequence of float
        Ascending coefficients p_0..p_n of P; the leading one must be nonzero.

    Returns
    -------
    ndarray
        q_0..q_n with q_n = (-1)^n p_n.
    """
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if p.ndim != 1 or p.size == 0:
        raise ValueError("p must be a non-empty coefficient list (degree n >= 0)")
    if p[-1] == 0:
        raise ValueError("leading coefficient of P must be nonzero")
    n = p.size - 1
    g = recip_gamma_derivatives(n)
    q = np.zeros(n + 1)
    for m in range(n + 1):
        q[m] = (-1) ** m * sum(comb(j, m) * g[j - m] * p[j] for j in range(m, n + 1))
    return q


def carleman_P_from_Q(q):
    """Inverse of :func:`carleman_Q_from_P` (the map is triangular)."""
    q = np.atleast_1d(np.asarray(q, dtype=float))
    n = q.size - 1
    g = recip_gamma_derivatives(n)
    T = np.zeros((n + 1, n + 1))
    for m in range(n + 1):
        for j in range(m, n + 1):
            T[m, j] = (-1) ** m * comb(j, m) * g[j - m]
    return solve_triangular(T, q, lower=False)
