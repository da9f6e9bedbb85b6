"""Nyström discretization of integral Hankel operators on (0, T)."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .._validation import check_positive
from ..funcspace.kernels import KernelSpec, eval_kernel
from ..transforms.quadrature import composite_rule, panel_edges
from .hankel import HankelMatrix


class NystromHankel:
    """Symmetrized Nyström matrix W^1/2 h(t_i + t_j) W^1/2 on nodes in (0, T).

    With the uniform midpoint rule every node sum t_i + t_j lies on the grid
    (k + 1) T / M, so the matrix is itself a Hankel matrix with generating
    values h((k + 1) T / M) T / M; ``hankel`` then holds it and gives an FFT
    matvec.  For other rules the dense matrix is assembled directly.
    """

    def __init__(self, nodes, weights, kernel: Callable, hankel: HankelMatrix | None = None):
        self.nodes = nodes
        self.weights = weights
        self.kernel = kernel
        self.hankel = hankel
        self.n = nodes.size

    @property
    def shape(self):
        return (self.n, self.n)

    def todense(self):
        if self.hankel is not None:
            return self.hankel.todense()
        sw = np.sqrt(self.weights)
        K = np.asarray(self.kernel(self.nodes[:, None] + self.nodes[None, :]))
        A = sw[:, None] * K * sw[None, :]
        return (A + A.T) / 2

    def matvec(self, u):
        if self.hankel is not None:
            return self.hankel.matvec(u)
        return self.todense() @ u


def _kernel_fn(h) -> Callable:
    if isinstance(h, KernelSpec):
        return lambda t: eval_kernel(h, t)
    if callable(h):
        return h
    raise TypeError("h must be a KernelSpec or a callable")


def build_nystrom(h, T, M, q=None, rule="midpoint") -> NystromHankel:
    """Nyström matrix of the kernel ``h`` restricted to (0, T) with ``M`` nodes.

    ``rule='midpoint'`` (default) uses t_i = (i + 1/2) T / M.  A jump of h at
    a node sum then sits exactly on the anti-diagonal, where the kernel's
    midpoint value makes the rule coincide with piecewise-constant Galerkin.
    ``rule='gauss'`` uses composite Gauss-Legendre panels from ``q``.
    """
    T = check_positive(T, "T")
    if M < 1:
        raise ValueError("M must be >= 1")
    f = _kernel_fn(h)
    if rule == "midpoint":
        k = np.arange(2 * M - 1)
        g = np.asarray(f(T * (k + 1) / M)) * (T / M)
        if not np.all(np.isfinite(g)):
            raise ValueError("kernel is not finite at the Nyström node sums")
        nodes = T * (np.arange(M) + 0.5) / M
        return NystromHankel(nodes, np.full(M, T / M), f, HankelMatrix(g, M))
    if rule == "gauss":
        p = 10 if q is None else q.nodes_per_panel
        nodes, weights = composite_rule(panel_edges(0.0, T, T * p / M), p)
        out = NystromHankel(nodes, weights, f)
        if not np.all(np.isfinite(out.todense())):
            raise ValueError("kernel is not finite at the Nyström node sums")
        return out
    raise ValueError(f"unknown rule {rule!r}")
