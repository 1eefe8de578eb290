import numpy as np
import pytest
from scipy.integrate import trapezoid
from scipy.stats import multivariate_normal

import cvgauss as cg
from conftest import fourier_wigner, grid_integral, random_op, random_state


def _box(state, k=8.0):
    return state.mean, k * np.sqrt(np.diag(state.cov))


def test_wigner_examples():
    assert cg.wigner(cg.vacuum(1), [0, 0]) == pytest.approx(1 / np.pi, rel=1e-15)
    assert cg.wigner(cg.vacuum(2), np.zeros(4)) == pytest.approx(1 / np.pi**2, rel=1e-15)
    assert cg.wigner(cg.vacuum(1), [1, 0]) == pytest.approx(np.exp(-1) / np.pi, rel=1e-14)
    # thermal peak is 1 / (pi (2 nbar + 1))
    assert cg.wigner(cg.thermal(2), [0, 0]) == pytest.approx(1 / (5 * np.pi), rel=1e-14)
    c = cg.coherent(1 - 1j)
    assert cg.wigner(c, c.mean) == pytest.approx(1 / np.pi, rel=1e-15)


def test_wigner_matches_scipy_density(rng):
    for n in (1, 2, 3):
        s = random_state(rng, n)
        pts = rng.normal(size=(20, 2 * n)) + s.mean
        np.testing.assert_allclose(cg.wigner(s, pts), multivariate_normal(s.mean, s.cov).pdf(pts), rtol=1e-10)


def test_wigner_shapes():
    s = cg.vacuum(1)
    assert isinstance(cg.wigner(s, [0.1, 0.2]), float)
    assert cg.wigner(s, np.zeros((3, 5, 2))).shape == (3, 5)
    with pytest.raises(cg.DimensionError):
        cg.wigner(s, np.zeros(4))


@pytest.mark.parametrize(
    "state",
    [cg.vacuum(1), cg.coherent(1.2 - 0.4j), cg.thermal(1.5), cg.squeezed_vacuum(1.5, 0.7)],
    ids=["vacuum", "coherent", "thermal", "squeezed"],
)
def test_wigner_normalised(state):
    # 8 marginal standard deviations each way covers even rotated squeezed ellipses
    total = grid_integral(lambda r: cg.wigner(state, r), *_box(state))
    assert total == pytest.approx(1.0, abs=1e-3)


def test_characteristic_examples():
    assert cg.characteristic(cg.vacuum(1), [0, 0]) == 1.0
    s = np.array([0.3, -1.1])
    assert cg.characteristic(cg.vacuum(1), s) == pytest.approx(np.exp(-s @ s / 4), rel=1e-14)
    c = cg.coherent(0.8 + 0.2j)
    chi = cg.characteristic(c, s)
    assert abs(chi) == pytest.approx(np.exp(-s @ s / 4), rel=1e-14)
    assert np.angle(chi) == pytest.approx(c.mean @ cg.omega(1) @ s, abs=1e-14)


def test_characteristic_bounded(rng):
    for n in (1, 2):
        st = random_state(rng, n)
        pts = rng.normal(scale=3.0, size=(10_000, 2 * n))
        assert np.all(np.abs(cg.characteristic(st, pts)) <= 1 + 1e-15)


@pytest.mark.parametrize(
    "state", [cg.vacuum(1), cg.coherent(1), cg.squeezed_vacuum(1, 0)], ids=["vacuum", "coherent", "squeezed"]
)
def test_characteristic_fourier_oracle(rng, state):
    pts = rng.multivariate_normal(state.mean, state.cov, size=200)
    np.testing.assert_allclose(fourier_wigner(state, pts), cg.wigner(state, pts), atol=1e-4)


def test_gaussian_integral_1d():
    assert cg.gaussian_integral_1d(1, 0) == pytest.approx(np.sqrt(np.pi), rel=1e-15)
    assert cg.gaussian_integral_1d(0.5, 1, 0.2) == pytest.approx(np.sqrt(2 * np.pi) * np.exp(0.5 + 0.2), rel=1e-14)
    x = np.linspace(-30, 30, 200_001)
    numeric = trapezoid(np.exp(-0.3 * x**2 + 0.7 * x - 0.1), x)
    assert cg.gaussian_integral_1d(0.3, 0.7, -0.1) == pytest.approx(numeric, rel=1e-10)
    for a in (0.0, -1.0):
        with pytest.raises(ValueError):
            cg.gaussian_integral_1d(a, 0)


def test_gaussian_integral_nd():
    assert cg.gaussian_integral_nd(np.eye(3)) == pytest.approx((2 * np.pi) ** 1.5, rel=1e-14)
    A = np.array([[2.0, 0.3], [0.3, 1.0]])
    b = np.array([0.4, -0.2])
    got = cg.gaussian_integral_nd(A, b)
    numeric = grid_integral(lambda r: np.exp(-0.5 * np.einsum("...i,ij,...j", r, A, r) + r @ b), (0, 0), (12, 12), 801)
    assert got == pytest.approx(numeric, rel=1e-10)
    # diagonal A factorises into 1-d integrals
    d = cg.gaussian_integral_nd(np.diag([2.0, 4.0]), b)
    assert d == pytest.approx(cg.gaussian_integral_1d(1.0, 0.4) * cg.gaussian_integral_1d(2.0, -0.2), rel=1e-14)
    with pytest.raises(ValueError):
        cg.gaussian_integral_nd(np.diag([1.0, -1.0]))
    with pytest.raises(ValueError):
        cg.gaussian_integral_nd([[1.0, 0.5], [0.0, 1.0]])


def test_overlap_examples():
    assert cg.overlap(cg.vacuum(1), cg.vacuum(1)) == pytest.approx(1.0, abs=1e-15)
    for alpha in (0.5, 1 + 1j, -2):
        assert cg.overlap(cg.coherent(alpha), cg.vacuum(1)) == pytest.approx(np.exp(-abs(alpha) ** 2), abs=1e-12)
    nbar = 1.3
    assert cg.overlap(cg.thermal(nbar), cg.thermal(nbar)) == pytest.approx(1 / (2 * nbar + 1), rel=1e-14)
    with pytest.raises(cg.DimensionError):
        cg.overlap(cg.vacuum(1), cg.vacuum(2))


def test_overlap_trace_rule(rng):
    for _ in range(5):
        a, b = random_state(rng, 1), random_state(rng, 1)
        ca, ha = _box(a)
        cb, hb = _box(b)
        lo = np.minimum(ca - ha, cb - hb)
        hi = np.maximum(ca + ha, cb + hb)
        val = 2 * np.pi * grid_integral(lambda r: cg.wigner(a, r) * cg.wigner(b, r), (lo + hi) / 2, (hi - lo) / 2, 601)
        assert val == pytest.approx(cg.overlap(a, b), abs=1e-3)


def test_overlap_symmetry_and_purity(rng):
    for n in (1, 2, 3):
        for _ in range(10):
            a, b = random_state(rng, n), random_state(rng, n)
            assert cg.overlap(a, b) == pytest.approx(cg.overlap(b, a), rel=1e-12)
            assert cg.overlap(a, a) == pytest.approx(cg.purity(a), rel=1e-10)


def test_wigner_covariance_under_gates(rng):
    # W'(F r + d) = W(r) for a symplectic (det F = 1) map
    for n in (1, 2):
        s = random_state(rng, n)
        op = random_op(rng, n)
        t = cg.apply(s, op)
        pts = rng.normal(size=(10, 2 * n)) + s.mean
        np.testing.assert_allclose(cg.wigner(t, pts @ op.F.T + op.d), cg.wigner(s, pts), rtol=1e-9)


def test_wigner_grid():
    x, p, W = cg.wigner_grid(cg.vacuum(1), extent=5, points=101)
    assert W.shape == (101, 101)
    assert W[50, 50] == pytest.approx(1 / np.pi, rel=1e-15)
    assert W.sum() * (x[1] - x[0]) * (p[1] - p[0]) == pytest.approx(1.0, abs=1e-3)
    # W[i, j] is the value at (x[i], p[j])
    c = cg.coherent(1.0)
    x, p, W = cg.wigner_grid(c, extent=3, points=7)
    assert W[5, 3] == pytest.approx(cg.wigner(c, [x[5], p[3]]), rel=1e-15)
    _, _, Wt = cg.wigner_grid(cg.two_mode_squeezed_vacuum(0.6), mode=1, extent=4, points=21)
    _, _, Wth = cg.wigner_grid(cg.thermal(np.sinh(0.6) ** 2), extent=4, points=21)
    np.testing.assert_allclose(Wt, Wth, rtol=1e-12)
    with pytest.raises(ValueError):
        cg.wigner_grid(c, extent=0)
    with pytest.raises(ValueError):
        cg.wigner_grid(c, points=1)
