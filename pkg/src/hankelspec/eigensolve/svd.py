"""Largest singular values by Golub-Kahan-Lanczos bidiagonalization."""

from __future__ import annotations

import numpy as np
import scipy.linalg as sla

from .lanczos import _reorthogonalize, start_vector
from .result import ConvergenceError, SpectrumResult


def singular_values(matvec, rmatvec, n, k, max_iter=None, tol=1e-8, seed=0, dtype=complex,
                    zero_tol=None, check_every=10) -> SpectrumResult:
    """Up to ``k`` largest singular values of the square operator with products ``matvec``/``rmatvec``.

    Both Krylov bases are fully reorthogonalized.  A triplet (s, u, v) is
    accepted when max(||A v - s u||, ||A^* u - s v||) <= tol ||A||; values
    below ``zero_tol ||A||`` (default ``10 tol``) are treated as zero.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    zero_tol = 10 * tol if zero_tol is None else zero_tol
    max_iter = min(n, max(10 * k + 100, 300)) if max_iter is None else min(max_iter, n)
    dtype = np.result_type(dtype, float)

    U = np.zeros((max_iter + 1, n), dtype=dtype)
    V = np.zeros((max_iter + 1, n), dtype=dtype)
    a = np.zeros(max_iter)
    b = np.zeros(max_iter)
    V[0] = start_vector(n, seed)
    w = np.asarray(matvec(V[0]), dtype=dtype)
    m = 0
    done = False
    while m < max_iter:
        w = _reorthogonalize(w, U[:m]) if m else w
        a[m] = np.linalg.norm(w)
        if a[m] <= 1e-14 * max(a[:m].max(initial=0), b[:m].max(initial=0)):
            if m == 0:
                return SpectrumResult(method="golub-kahan", dimension=n, norm=0.0)
            # no new left direction: A V_{m+1} = U_m B with B of size m x (m + 1)
            B = np.zeros((m, m + 1))
            B[np.arange(m), np.arange(m)] = a[:m]
            B[np.arange(m), np.arange(1, m + 1)] = b[:m]
            P, s, Qh = sla.svd(B, full_matrices=False)
            nv = m + 1
            anorm = s[0]
            live = np.flatnonzero(s > zero_tol * anorm)[:k]
            done = True
            break
        U[m] = w / a[m]
        z = np.asarray(rmatvec(U[m]), dtype=dtype) - a[m] * V[m]
        z = _reorthogonalize(z, V[:m + 1])
        b[m] = np.linalg.norm(z)
        m += 1
        scale = max(a[:m].max(), b[:m].max())
        breakdown = b[m - 1] <= 1e-14 * scale
        if not breakdown:
            V[m] = z / b[m - 1]
        if breakdown or m == max_iter or m % check_every == 0:
            B = np.diag(a[:m]) + np.diag(b[:m - 1], 1)
            P, s, Qh = sla.svd(B)
            anorm = max(s[0], 1e-300)
            nv = m
            est = np.abs(b[m - 1] * P[-1]) if not breakdown else np.zeros(m)
            live = np.flatnonzero(s > zero_tol * anorm)[:k]
            ok = np.all(est[live] <= tol * anorm)
            if breakdown or (ok and (live.size == k or np.any(s <= zero_tol * anorm))):
                done = True
                break
        w = np.asarray(matvec(V[m]), dtype=dtype) - b[m - 1] * U[m - 1]
    if not done:
        raise ConvergenceError(f"Golub-Kahan: {k} singular values not converged after {m} steps")

    Uk = U[:m].T @ P[:, live]
    Vk = V[:nv].T @ Qh[live].conj().T
    res = np.zeros(live.size)
    for i, j in enumerate(live):
        r1 = np.linalg.norm(np.asarray(matvec(Vk[:, i])) - s[j] * Uk[:, i])
        r2 = np.linalg.norm(np.asarray(rmatvec(Uk[:, i])) - s[j] * Vk[:, i])
        res[i] = max(r1, r2)
    if np.any(res > tol * anorm):
        raise ConvergenceError(f"Golub-Kahan: explicit residual {res.max():.2e} exceeds {tol * anorm:.2e}")
    return SpectrumResult(singular=s[live], residual_singular=res, norm=float(anorm), iterations=m,
                          method="golub-kahan", dimension=n)
