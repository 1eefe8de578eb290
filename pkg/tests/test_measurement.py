import numpy as np
import pytest

import cvgauss as cg
from conftest import condition_mvn, random_state


def _oracle(state, mode, phi, u):
    """Condition on the full phase-space vector, then drop the measured mode."""
    L = np.zeros(2 * state.n_modes)
    L[2 * mode : 2 * mode + 2] = [np.cos(phi), np.sin(phi)]
    mean, cov = condition_mvn(state.mean, state.cov, L, u)
    keep = [k for k in range(2 * state.n_modes) if k // 2 != mode]
    return mean[keep], cov[np.ix_(keep, keep)]


def test_partial_trace_examples():
    t = cg.two_mode_squeezed_vacuum(0.7)
    for m in (0, 1):
        red = cg.partial_trace(t, [m])
        np.testing.assert_allclose(red.cov, cg.thermal(np.sinh(0.7) ** 2).cov, atol=1e-14)
    s = cg.tensor(cg.coherent(1), cg.thermal(0.3), cg.squeezed_vacuum(0.2))
    red = cg.partial_trace(s, [2, 0])
    np.testing.assert_array_equal(red.cov, cg.tensor(cg.squeezed_vacuum(0.2), cg.coherent(1)).cov)
    np.testing.assert_array_equal(red.mean, cg.tensor(cg.squeezed_vacuum(0.2), cg.coherent(1)).mean)


def test_measurement_blocks_examples():
    s = cg.tensor(cg.coherent(1), cg.thermal(0.3), cg.squeezed_vacuum(0.2))
    blk = cg.measurement_blocks(s, 1)
    np.testing.assert_array_equal(blk.B, cg.thermal(0.3).cov)
    np.testing.assert_array_equal(blk.A, cg.tensor(cg.coherent(1), cg.squeezed_vacuum(0.2)).cov)
    np.testing.assert_array_equal(blk.C, np.zeros((4, 2)))
    mean, cov = blk.assemble()
    P = cg.ModeSelector((0, 2, 1), 3).permutation()
    np.testing.assert_array_equal(cov, P @ s.cov @ P.T)
    np.testing.assert_array_equal(mean, P @ s.mean)
    with pytest.raises(cg.DimensionError):
        cg.measurement_blocks(cg.vacuum(1), 0)


def test_homodyne_distribution_examples():
    assert cg.homodyne_distribution(cg.vacuum(1), 0) == (0.0, 0.5)
    mu, var = cg.homodyne_distribution(cg.coherent(2 + 1j), 0, np.pi / 2)
    assert mu == pytest.approx(np.sqrt(2), abs=1e-15)
    assert var == pytest.approx(0.5, abs=1e-15)
    mu, var = cg.homodyne_distribution(cg.squeezed_vacuum(0.5), 0, 0.0)
    assert var == pytest.approx(np.exp(-1) / 2, abs=1e-15)


@pytest.mark.parametrize("n", [2, 3])
def test_condition_matches_oracle(rng, n):
    for _ in range(100):
        s = random_state(rng, n)
        mode = int(rng.integers(n))
        phi = rng.uniform(0, 2 * np.pi)
        u = rng.normal() * 2
        got = cg.homodyne_condition(s, mode, phi, u)
        mean, cov = _oracle(s, mode, phi, u)
        np.testing.assert_allclose(got.mean, mean, atol=1e-10)
        np.testing.assert_allclose(got.cov, cov, atol=1e-10)


@pytest.mark.parametrize("r", [0.2, 1.0, 2.0])
@pytest.mark.parametrize("u", [-3.0, 0.0, 3.0])
def test_tmsv_closed_form(r, u):
    got = cg.homodyne_condition(cg.two_mode_squeezed_vacuum(r), 1, 0.0, u)
    np.testing.assert_allclose(got.mean, [-u * np.tanh(2 * r), 0.0], atol=1e-12)
    np.testing.assert_allclose(got.cov, np.diag([1 / (2 * np.cosh(2 * r)), np.cosh(2 * r) / 2]), atol=1e-12)


def test_conditional_cov_independent_of_outcome(rng):
    for _ in range(50):
        s = random_state(rng, 3)
        phi = rng.uniform(0, 6)
        a = cg.homodyne_condition(s, 2, phi, -4.0)
        b = cg.homodyne_condition(s, 2, phi, 7.5)
        assert np.max(np.abs(a.cov - b.cov)) <= 1e-14


def test_rotation_consistency(rng):
    # Measuring q(phi) equals measuring x after the phase-shift gate with angle +phi.
    for _ in range(50):
        s = random_state(rng, 2)
        phi, u = rng.uniform(0, 2 * np.pi), rng.normal()
        direct = cg.homodyne_condition(s, 0, phi, u)
        rotated = cg.homodyne_condition(cg.apply_on(s, cg.phase_shift(phi), 0), 0, 0.0, u)
        np.testing.assert_allclose(direct.mean, rotated.mean, atol=1e-10)
        np.testing.assert_allclose(direct.cov, rotated.cov, atol=1e-10)


def test_p_measurement_sign():
    s = cg.apply(cg.vacuum(2), cg.two_mode_squeeze(0.6, 0.0).then(cg.displacement([0.3j, -0.5j])))
    u = 1.7
    blk = cg.measurement_blocks(s, 1)
    Pi_p = np.diag([0.0, 1.0])
    got = cg.homodyne_condition(s, 1, np.pi / 2, u)
    expected = blk.a - blk.C @ Pi_p @ (blk.b - np.array([0.0, u])) / blk.B[1, 1]
    np.testing.assert_allclose(got.mean, expected, atol=1e-13)
    np.testing.assert_allclose(got.cov, blk.A - blk.C @ Pi_p @ blk.C.T / blk.B[1, 1], atol=1e-13)


def test_law_of_total_expectation(rng):
    s = random_state(rng, 2)
    mu, var = cg.homodyne_distribution(s, 1, 0.4)
    nodes, weights = np.polynomial.hermite_e.hermegauss(20)
    weights = weights / weights.sum()
    means = np.array([cg.homodyne_condition(s, 1, 0.4, mu + np.sqrt(var) * z).mean for z in nodes])
    np.testing.assert_allclose(weights @ means, s.mean[:2], atol=1e-12)


def test_degenerate_measurement():
    F = np.diag([1e-7, 1e7])
    s = cg.apply(cg.vacuum(2), cg.embed(cg.SymplecticOp(F, np.zeros(2)), [1], 2))
    with pytest.raises(cg.DegenerateMeasurementError):
        cg.homodyne_condition(s, 1, 0.0, 0.0)
    with pytest.raises(cg.DegenerateMeasurementError):
        cg.sample_homodyne(s, 1, 0.0, seed=1)


def test_sample_homodyne():
    s = cg.two_mode_squeezed_vacuum(0.5)
    a = cg.sample_homodyne(s, 0, 0.3, seed=42)
    b = cg.sample_homodyne(s, 0, 0.3, seed=42)
    assert a.outcome == b.outcome
    np.testing.assert_array_equal(a.conditional.cov, b.conditional.cov)
    np.testing.assert_array_equal(a.conditional.mean, cg.homodyne_condition(s, 0, 0.3, a.outcome).mean)
    assert (a.dist_mean, a.dist_var) == cg.homodyne_distribution(s, 0, 0.3)
    assert cg.sample_homodyne(cg.vacuum(1), 0, 0.0, seed=1).conditional is None


def test_sample_outcomes_statistics():
    s = cg.squeezed_vacuum(0.4, 0.9)
    mu, var = cg.homodyne_distribution(s, 0, 1.2)
    x = cg.sample_outcomes(s, 0, 1.2, 100_000, seed=3)
    assert abs(x.mean() - mu) <= 0.007
    assert abs(x.var() - var) <= 0.01
    np.testing.assert_array_equal(x, cg.sample_outcomes(s, 0, 1.2, 100_000, seed=3))
    assert not np.array_equal(x, cg.sample_outcomes(s, 0, 1.2, 100_000, seed=4))
    with pytest.raises(ValueError):
        cg.sample_outcomes(s, 0, 0.0, -1, seed=0)
