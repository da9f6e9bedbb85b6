"""Full spectra of dense self-adjoint matrices."""

from __future__ import annotations

import numpy as np
import scipy.linalg as sla

from .._validation import check_self_adjoint
from .result import SpectrumResult, split_branches


def _as_array(A):
    return A.todense() if hasattr(A, "todense") and not isinstance(A, np.ndarray) else np.asarray(A)


def dense_sym_eig(A, zero_tol=0.0, check=True) -> SpectrumResult:
    """All eigenvalues of a symmetric/Hermitian matrix, split into sign branches.

    Uses LAPACK ``?syev``/``?heev`` (Householder tridiagonalization followed by
    implicit QL/QR).  ``A`` may also be any object with ``todense()``.  The
    reported residual is the backward-error bound eps * ||A||_F * sqrt(N).
    """
    A = _as_array(A)
    if check:
        check_self_adjoint(A)
    n = A.shape[0]
    lam = sla.eigh(A, eigvals_only=True, driver="ev", check_finite=False, overwrite_a=False)
    norm = float(np.max(np.abs(lam))) if lam.size else 0.0
    bound = np.finfo(float).eps * np.sqrt(n) * float(np.linalg.norm(A))
    p, rp, m, rm = split_branches(lam, np.full(n, bound), zero_tol)
    s = np.sort(np.abs(lam))[::-1]
    return SpectrumResult(p, m, s, rp, rm, np.full(n, bound), norm=norm, iterations=0,
                          method="dense", dimension=n)
