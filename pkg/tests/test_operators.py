import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hankelspec.eigensolve import lanczos_extreme
from hankelspec.funcspace import (Jump, KernelSpec, PowerSeq, SequenceSpec, constant_sigma, indicator_eta,
                                  model_sigma_star, power_sigma)
from hankelspec.operators import (HankelMatrix, apply_hankel_via_psido, build_carleman_psido, build_hankel,
                                  build_nystrom, build_psido, build_sigma_psido, gamma_phase, hankel_matvec,
                                  inverse_modified_mellin, modified_mellin, rolloff, standard_weight)
from hankelspec.transforms import LogGrid, laplace_forward, moments_from_eta
from hankelspec.transforms.mellin import l2_norm_t, l2_norm_x

# Hankel matrices ------------------------------------------------------------------


def test_hilbert_two_by_two():
    H = build_hankel(np.array([1, 1 / 2, 1 / 3]), 2)
    np.testing.assert_array_equal(H.todense(), [[1, 0.5], [0.5, 1 / 3]])
    assert H.hermitian


def test_delta_single_entry():
    H = build_hankel(np.eye(7)[0], 4)
    D = H.todense()
    assert D[0, 0] == 1 and np.count_nonzero(D) == 1


def test_build_from_sequence_spec():
    H = build_hankel(SequenceSpec([PowerSeq(2.0)]), 3)
    assert H.todense()[2, 2] == pytest.approx(1 / 25)


def test_missing_values():
    with pytest.raises(ValueError):
        HankelMatrix(np.ones(4), 3)
    with pytest.raises(ValueError):
        HankelMatrix(np.ones(4), 0)


def test_complex_values_not_hermitian():
    assert not HankelMatrix(np.array([1, 1j, 2]), 2).hermitian
    assert HankelMatrix(np.array([1, 2, 3], dtype=complex), 2).hermitian


def test_matvec_examples():
    H = build_hankel(np.array([1, 1 / 2, 1 / 3]), 2)
    np.testing.assert_allclose(hankel_matvec(H, np.array([1.0, 1.0])), [1.5, 5 / 6], rtol=1e-15)
    np.testing.assert_allclose(hankel_matvec(build_hankel(np.eye(3)[0], 2), np.array([3.0, 5.0])), [3, 0],
                               atol=1e-15)
    np.testing.assert_array_equal(hankel_matvec(H, np.zeros(2)), 0)


def test_matvec_dimension_mismatch():
    with pytest.raises(ValueError):
        hankel_matvec(build_hankel(np.ones(5), 3), np.ones(4))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([16, 64, 256]), st.integers(0, 2 ** 32 - 1), st.booleans())
def test_fft_matvec_equals_naive(n, seed, complex_g):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal(2 * n - 1)
    if complex_g:
        g = g + 1j * rng.standard_normal(2 * n - 1)
    u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    H = HankelMatrix(g, n)
    ref = H.todense() @ u
    np.testing.assert_allclose(H.matvec(u), ref, atol=1e-12 * np.linalg.norm(ref))
    np.testing.assert_allclose(H.matvec_naive(u), ref, atol=1e-12 * np.linalg.norm(ref))


def test_rmatvec_is_adjoint():
    rng = np.random.default_rng(3)
    H = HankelMatrix(rng.standard_normal(63) + 1j * rng.standard_normal(63), 32)
    u = rng.standard_normal(32) + 1j * rng.standard_normal(32)
    np.testing.assert_allclose(H.rmatvec(u), H.todense().conj().T @ u, atol=1e-12)


@settings(max_examples=20, deadline=None)
@given(arrays(np.float64, st.integers(1, 80).map(lambda n: 2 * n - 1),
              elements=st.floats(-1e3, 1e3, allow_nan=False)))
def test_real_hankel_exactly_symmetric(g):
    D = HankelMatrix(g, (g.size + 1) // 2).todense()
    assert np.array_equal(D, D.T)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 128), st.integers(0, 2 ** 32 - 1))
def test_twist_preserves_spectrum(n, seed):
    g = np.random.default_rng(seed).standard_normal(2 * n - 1)
    H = HankelMatrix(g, n)
    a = np.linalg.eigvalsh(H.todense())
    b = np.linalg.eigvalsh(H.twisted().todense())
    np.testing.assert_allclose(a, b, atol=1e-10 * max(1.0, np.max(np.abs(a))))


def test_twist_preserves_hilbert_spectrum_n512():
    H = HankelMatrix(1 / np.arange(1, 1024), 512)
    np.testing.assert_allclose(np.linalg.eigvalsh(H.todense()), np.linalg.eigvalsh(H.twisted().todense()),
                               atol=1e-10)


def test_hilbert_norm_below_pi_and_increasing():
    norms = [np.linalg.norm(HankelMatrix(1 / np.arange(1, 2 * n), n).todense(), 2) for n in (2, 8, 32, 128, 512)]
    assert all(x < math.pi for x in norms)
    assert np.all(np.diff(norms) > 0)


# grid ΨDO -------------------------------------------------------------------------


def test_standard_weight():
    assert standard_weight(0.0) ** 2 == pytest.approx(math.pi)
    x = np.array([-3.0, 0.5, 2.0, 40.0])
    np.testing.assert_allclose(standard_weight(x), np.sqrt(math.pi / np.cosh(math.pi * x)), rtol=1e-14)
    # no overflow where cosh(pi x) is not representable
    assert 0 < standard_weight(300.0) < 1e-200


def test_rolloff_profile():
    xi = np.array([0.0, 0.5, 0.8, 0.9, 1.0])
    r = rolloff(xi, 1.0)
    assert r[0] == r[1] == r[2] == 1 and r[-1] == 0 and 0 < r[3] < 1


def test_identity_multiplier_is_diagonal():
    A = build_psido(None, lambda xi: np.ones_like(xi), 24, 256)
    D = A.todense()
    np.testing.assert_allclose(D, np.diag(A.v ** 2), atol=1e-15)
    ev = np.linalg.eigvalsh(D)
    np.testing.assert_allclose(ev, np.sort(A.v ** 2), atol=1e-14)
    assert ev.max() == pytest.approx(math.pi, rel=1e-14) and ev.min() > 0


def test_psido_self_adjoint_and_matvec():
    # s is real but not even: the operator is Hermitian with a complex kernel
    A = build_sigma_psido(model_sigma_star(1, 1, 1), 24, 512)
    D = A.todense()
    assert A.is_self_adjoint and A.dtype == np.complex128
    assert np.linalg.norm(D - D.conj().T) <= 1e-12 * np.linalg.norm(D)
    u = np.random.default_rng(0).standard_normal(512)
    np.testing.assert_allclose(A.matvec(u), D @ u, atol=1e-13)


def test_psido_even_multiplier_is_real():
    A = build_psido(None, lambda xi: 1 / (1 + xi ** 2), 24, 256)
    D = A.todense()
    assert A.dtype == np.float64 and np.linalg.norm(D - D.T) <= 1e-12 * np.linalg.norm(D)


def test_psido_complex_multiplier_dtype():
    A = build_psido(None, lambda xi: np.exp(1j * xi), 24, 128)
    assert A.dtype == np.complex128 and not A.is_self_adjoint


def test_psido_decay_error():
    with pytest.raises(ValueError, match="decay"):
        build_psido(None, lambda xi: np.ones_like(xi), 5, 256)


def test_psido_grid_validation():
    with pytest.raises(ValueError):
        build_psido(None, lambda xi: np.ones_like(xi), 24, 1000)


def test_linear_multiplier_spreads_over_both_signs():
    tops = []
    for M in (256, 512, 1024):
        ev = np.linalg.eigvalsh(build_psido(None, lambda xi: xi, 24, M, polynomial=True).todense())
        assert ev.min() < -1 and ev.max() > 1
        tops.append(min(ev.max(), -ev.min()))
    assert tops[0] < tops[1] < tops[2]


def test_carleman_psido_rolloff_and_constant_case():
    A = build_carleman_psido((1.0,), 24, 256)
    assert A.damping is None
    np.testing.assert_allclose(np.linalg.eigvalsh(A.todense()).max(), math.pi, rtol=1e-12)
    B = build_carleman_psido((0.0, 1.0), 24, 256)
    assert B.damping is not None
    # a smooth vector has no mass in the roll-off band; a grid delta spreads evenly (band is 20%)
    smooth = np.exp(-A.x ** 2)[:, None]
    delta = np.eye(256)[:, [128]]
    assert A.rolloff_mass(smooth)[0] < 1e-12
    assert A.rolloff_mass(delta)[0] == pytest.approx(0.2, abs=0.01)


def test_hilbert_psido_matches_hilbert_top_eigenvalue_roughly():
    # both representations converge to norm pi; finite sections converge like 1/log^2 N
    A = build_sigma_psido(indicator_eta(0, 1), 24, 4096)
    top = lanczos_extreme(A.matvec, 4096, 3, dtype=A.dtype, which="plus").plus[0]
    assert 2.5 < top <= math.pi


@pytest.mark.xfail(strict=True, reason="finite sections of the continuous spectrum [0, pi] converge like "
                                      "1/log^2 N; at N=2048 the Hilbert matrix top eigenvalue is 2.50 while "
                                      "the ΨDO at M=4096 resolves about 3.1")
def test_representation_equivalence_top10_hilbert():
    N, M = 2048, 4096
    sigma = indicator_eta(0, 1)
    hank = np.linalg.eigvalsh(HankelMatrix(moments_from_eta(sigma, 2 * N - 2), N).todense())[::-1][:10]
    A = build_sigma_psido(sigma, 24, M)
    psido = lanczos_extreme(A.matvec, M, 10, dtype=A.dtype, which="plus").plus[:10]
    np.testing.assert_allclose(hank, psido, rtol=1e-2)


# Nyström ---------------------------------------------------------------------------


def test_nystrom_zero_kernel():
    A = build_nystrom(lambda t: np.zeros_like(t), 1.0, 50)
    np.testing.assert_array_equal(A.todense(), 0)


def test_nystrom_nodes_inside_support():
    A = build_nystrom(KernelSpec([Jump(1.0, 0, 0.7)]), 0.7, 100)
    assert A.nodes.min() > 0 and A.nodes.max() < 0.7


def test_nystrom_symmetric_and_gauss_rule():
    h = lambda t: np.exp(-t)  # noqa: E731
    A = build_nystrom(h, 3.0, 120, rule="gauss")
    D = A.todense()
    assert np.array_equal(D, D.T)
    # exp(-(t+s)) on (0, 3) is rank one with eigenvalue int_0^3 e^{-2t} dt
    assert np.linalg.eigvalsh(D).max() == pytest.approx((1 - math.exp(-6)) / 2, rel=1e-12)
    u = np.ones(120)
    np.testing.assert_allclose(A.matvec(u), D @ u)
    with pytest.raises(ValueError):
        build_nystrom(h, 1.0, 10, rule="simpson")


def test_nystrom_rejects_singular_kernel():
    with pytest.raises(ValueError):
        build_nystrom(lambda t: 1 / (t - 1.0), 1.0, 2)


@pytest.mark.parametrize("l, limit", [(0, 1 / (2 * math.pi)), (1, 1 / (4 * math.pi ** 2))])
def test_nystrom_jump_law(l, limit):
    A = build_nystrom(KernelSpec([Jump(1.0, l, 1.0)]), 1.0, 4000)
    ev = np.linalg.eigvalsh(A.todense())
    plus, minus = np.sort(ev)[::-1], np.sort(-ev)[::-1]
    n = np.arange(20, 61)
    for br in (plus, minus):
        np.testing.assert_allclose(n ** (l + 1) * br[n - 1], limit, rtol=0.08)
    assert limit == pytest.approx((0.15915, 0.025330)[l], abs=1e-5)


def test_nystrom_refinement_top50():
    h = KernelSpec([Jump(1.0, 0, 1.0)])
    r = [lanczos_extreme(build_nystrom(h, 1.0, M).matvec, M, 60, seed=0) for M in (8000, 16000)]
    assert np.max(np.abs(r[0].plus[:50] - r[1].plus[:50])) < 1e-6
    assert np.max(np.abs(r[0].minus[:50] - r[1].minus[:50])) < 1e-6


# modified Mellin and the ΨDO route ----------------------------------------------------


def test_gamma_phase():
    x = np.linspace(-30, 30, 101)
    np.testing.assert_allclose(np.abs(gamma_phase(x)), 1, rtol=1e-14)
    assert gamma_phase(0.0) == pytest.approx(1.0)
    np.testing.assert_allclose(gamma_phase(-x), np.conj(gamma_phase(x)), atol=1e-14)


def test_modified_mellin_is_unitary():
    grid = LogGrid(40, 2048)
    u = np.exp(-(grid.y - 1) ** 2) / np.sqrt(grid.t)
    f = modified_mellin(u, grid)
    assert l2_norm_x(f, grid) == pytest.approx(l2_norm_t(u, grid), rel=1e-10)
    w = np.sqrt(grid.t)
    np.testing.assert_allclose(w * inverse_modified_mellin(f, grid).real, w * u, atol=1e-12)


def _bump(grid, center=0.3):
    return np.exp(-(grid.y - center) ** 2 / 2) / np.sqrt(grid.t)


def _direct(h, grid, idx, center=0.3):
    # trapezoid in log s; the integrand is a Gaussian in log s, so the rule is spectrally accurate
    ys = np.linspace(center - 12, center + 12, 2401)
    s = np.exp(ys)
    wq = (ys[1] - ys[0]) * np.exp(-(ys - center) ** 2 / 2) * np.sqrt(s)
    t = grid.t[idx]
    return h(t[:, None] + s[None, :]) @ wq


def test_psido_route_zero_input():
    grid = LogGrid(40, 1024)
    np.testing.assert_array_equal(apply_hankel_via_psido(constant_sigma(), np.zeros(1024), grid), 0)


def test_psido_route_rejects_unbounded_sigma():
    grid = LogGrid(40, 1024)
    with pytest.raises(ValueError):
        apply_hankel_via_psido(power_sigma(2.0), _bump(grid), grid)


@pytest.mark.parametrize("sigma, h, tol", [
    (constant_sigma(), lambda t: 1 / t, 1e-4),
    (model_sigma_star(1, 1, 1), None, 1e-3),
], ids=["carleman", "sigma_star"])
def test_psido_route_matches_direct_quadrature(sigma, h, tol):
    grid = LogGrid(40, 4096)
    if h is None:
        h = lambda t: laplace_forward(sigma, t.ravel()).reshape(t.shape)  # noqa: E731
    idx = np.arange(0, grid.M, 64)
    fast = apply_hankel_via_psido(sigma, _bump(grid), grid)[idx]
    ref = _direct(h, grid, idx)
    # bulk: where t^(1/2) Hu is at least 1e-3 of its peak
    wref = np.abs(ref) * np.sqrt(grid.t[idx])
    bulk = wref > 1e-3 * wref.max()
    assert bulk.sum() > 20
    np.testing.assert_allclose(fast[bulk], ref[bulk], rtol=tol)
