"""Lanczos iteration with full reorthogonalization for extreme eigenvalues."""

from __future__ import annotations

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .result import ConvergenceError, SpectrumResult, split_branches


def start_vector(n, seed=0):
    """Deterministic start: alternating signs with seeded magnitudes in [1, 2), unit norm."""
    rng = np.random.default_rng(seed)
    v = np.where(np.arange(n) % 2 == 0, 1.0, -1.0) * (1.0 + rng.random(n))
    return v / np.linalg.norm(v)


def _reorthogonalize(w, V):
    # classical Gram-Schmidt, applied twice
    for _ in range(2):
        w -= V.T @ (V.conj() @ w)
    return w


def _select(theta, k, which, zthr):
    pos = np.flatnonzero(theta > zthr)
    neg = np.flatnonzero(theta < -zthr)
    pos = pos[np.argsort(-theta[pos])][:k] if which in ("both", "plus") else pos[:0]
    neg = neg[np.argsort(theta[neg])][:k] if which in ("both", "minus") else neg[:0]
    return pos, neg


def lanczos_extreme(matvec, n, k, max_iter=None, tol=1e-8, seed=0, dtype=float, which="both",
                    zero_tol=None, check_every=10) -> SpectrumResult:
    """Up to ``k`` eigenvalues of largest modulus in each sign branch.

    Parameters
    ----------
    matvec : callable
        Self-adjoint product u -> A u on vectors of length ``n``.
    k : int
        Values wanted per branch.
    tol : float
        Residual target relative to the norm estimate, ||A y - theta y|| <= tol ||A||.
    zero_tol : float, optional
        Ritz values with |theta| <= zero_tol ||A|| count as the zero level and
        are not reported (default ``10 * tol``).
    which : {'both', 'plus', 'minus'}

    Raises
    ------
    ConvergenceError
        When the wanted values do not converge within ``max_iter`` steps.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if which not in ("both", "plus", "minus"):
        raise ValueError(f"which must be 'both', 'plus' or 'minus', got {which!r}")
    zero_tol = 10 * tol if zero_tol is None else zero_tol
    max_iter = min(n, max(10 * k + 100, 300)) if max_iter is None else min(max_iter, n)
    dtype = np.result_type(dtype, float)

    V = np.zeros((max_iter + 1, n), dtype=dtype)
    alpha = np.zeros(max_iter)
    beta = np.zeros(max_iter)
    V[0] = start_vector(n, seed)
    m = 0
    breakdown = False
    while m < max_iter:
        w = np.asarray(matvec(V[m]), dtype=dtype)
        alpha[m] = np.real(np.vdot(V[m], w))
        w = w - alpha[m] * V[m]
        if m > 0:
            w -= beta[m - 1] * V[m - 1]
        w = _reorthogonalize(w, V[:m + 1])
        beta[m] = np.linalg.norm(w)
        m += 1
        scale = max(np.max(np.abs(alpha[:m])), np.max(beta[:m]), 1e-300)
        breakdown = beta[m - 1] <= 1e-14 * scale
        if not breakdown:
            V[m] = w / beta[m - 1]
        if breakdown or m == max_iter or m % check_every == 0:
            theta, S = eigh_tridiagonal(alpha[:m], beta[:m - 1])
            anorm = max(np.max(np.abs(theta)), 1e-300)
            est = np.abs(beta[m - 1] * S[-1])
            zthr = zero_tol * anorm
            pos, neg = _select(theta, k, which, zthr)
            wanted = np.concatenate([pos, neg])
            ok = np.all(est[wanted] <= tol * anorm)
            # a branch with fewer than k values is complete once the zero level is resolved
            zero_band = np.flatnonzero(np.abs(theta) <= zthr)
            zero_seen = zero_band.size > 0 and np.any(est[zero_band] <= tol * anorm)
            full = all(idx.size == k or zero_seen or breakdown or m == n
                       for idx, br in ((pos, "plus"), (neg, "minus")) if which in ("both", br))
            if breakdown or (ok and full):
                break
    if not (breakdown or (ok and full)):
        raise ConvergenceError(f"Lanczos: {k} values per branch not converged after {m} steps "
                               f"(max residual estimate {np.max(est[wanted]) if wanted.size else 0:.2e})")

    # explicit residuals of the reported Ritz pairs
    Y = V[:m].T @ S[:, wanted]
    R = np.column_stack([np.asarray(matvec(Y[:, i]), dtype=dtype) for i in range(wanted.size)]) if wanted.size \
        else np.zeros((n, 0))
    R = R - Y * theta[wanted]
    res = np.linalg.norm(R, axis=0) if wanted.size else np.zeros(0)
    if np.any(res > tol * anorm):
        raise ConvergenceError(f"Lanczos: explicit residual {np.max(res):.2e} exceeds {tol * anorm:.2e}")
    p, rp, mm, rm = split_branches(theta[wanted], res, zthr)
    order = np.argsort(-np.abs(theta[wanted]), kind="stable")
    return SpectrumResult(p, mm, np.abs(theta[wanted])[order], rp, rm, res[order],
                          norm=float(anorm), iterations=m, method="lanczos", dimension=n)
