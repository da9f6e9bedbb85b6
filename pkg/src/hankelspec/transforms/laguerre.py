"""Laguerre-basis projection linking integral kernels h(t) to Hankel matrices.

With the orthonormal system l_j(t) = L_j^1(t) exp(-t/2) / sqrt(j + 1) in
L^2(t dt), the kernel h(t) = sum_j g(j) L_j^1(t) exp(-t/2) has coefficients
g(j) = (j + 1)^-1 int_0^inf h(t) L_j^1(t) t exp(-t/2) dt.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..funcspace.kernels import KernelSpec
from ..funcspace.sigma import SigmaSpec
from .laplace import laplace_forward
from .quadrature import (DEFAULT_QUADRATURE, QuadratureConfig, composite_rule, panel_edges,
                         refine_until)

# t-range of the projection quadrature: log-uniform panels on [T_MIN, 1], uniform beyond
T_MIN = 1e-24


def weighted_laguerre(t, j_max):
    """Rows L_j^1(t) exp(-t/2) for j = 0..j_max, by the three-term recurrence.

    The recurrence is linear, so the exp(-t/2) factor is carried by the seeds and
    nothing overflows for t up to a few thousand.
    """
    t = np.asarray(t, dtype=float)
    out = np.empty((j_max + 1,) + t.shape)
    out[0] = np.exp(-t / 2)
    if j_max >= 1:
        out[1] = (2 - t) * out[0]
    for j in range(1, j_max):
        out[j + 1] = ((2 * j + 2 - t) * out[j] - (j + 1) * out[j - 1]) / (j + 1)
    return out


def laguerre_functions(t, j_max):
    """Orthonormal functions l_j(t) = L_j^1(t) exp(-t/2) / sqrt(j + 1)."""
    return weighted_laguerre(t, j_max) / np.sqrt(np.arange(1, j_max + 2))[:, None]


def _projection_rule(j_max, cfg):
    # L_j^1 e^{-t/2} is negligible beyond t ~ 4j + 120; oscillation scale ~ 1/sqrt(j)
    t_max = 4.0 * j_max + 150.0
    width = min(1.0, 8.0 / np.sqrt(j_max + 1)) * cfg.panel_width / 0.5
    log_edges = panel_edges(np.log(T_MIN), 0.0, cfg.panel_width)
    y, wy = composite_rule(log_edges, cfg.nodes_per_panel)
    t_lin, w_lin = composite_rule(panel_edges(1.0, t_max, width), cfg.nodes_per_panel)
    t = np.concatenate([np.exp(y), t_lin])
    w = np.concatenate([wy * np.exp(y), w_lin])
    return t, w


def _kernel_callable(h) -> Callable:
    if isinstance(h, SigmaSpec):
        return lambda t: laplace_forward(h, t)
    if isinstance(h, KernelSpec) or callable(h):
        return h
    raise TypeError("h must be a KernelSpec, SigmaSpec or callable")


def laguerre_project(h, j_max, q: QuadratureConfig | None = None):
    """Hankel generating sequence g(0..j_max) of the integral kernel ``h``.

    ``h`` may be a :class:`KernelSpec`, a callable, or a :class:`SigmaSpec`
    (whose kernel is then obtained by :func:`laplace_forward`).
    """
    if j_max < 0:
        raise ValueError("j_max must be >= 0")
    cfg = q or DEFAULT_QUADRATURE
    f = _kernel_callable(h)
    scale = 1.0 / np.arange(1, j_max + 2)

    def evaluate(c):
        t, w = _projection_rule(j_max, c)
        vals = np.asarray(f(t)) * t * w
        return (weighted_laguerre(t, j_max) @ vals) * scale

    return refine_until(evaluate, cfg)


def laguerre_gram(j_max, q: QuadratureConfig | None = None):
    """Quadrature Gram matrix int L_j^1 L_k^1 t e^-t dt; exact value (j + 1) delta_jk."""
    t, w = _projection_rule(j_max, q or DEFAULT_QUADRATURE)
    L = weighted_laguerre(t, j_max)
    return (L * (t * w)) @ L.T
