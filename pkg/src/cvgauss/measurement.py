"""Partial traces and ideal homodyne measurements.

A homodyne measurement of ``q(phi) = cos(phi) x + sin(phi) p`` on a Gaussian
state is classical Gaussian conditioning of the remaining quadratures on the
observed value. Conditional covariances never depend on the outcome.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .core import DimensionError, GaussianError, GaussianState
from .unitaries import ModeSelector, as_selector

#: Measured-quadrature variances below this are rejected as degenerate.
DEGENERATE_VAR = 1e-12

#: Identifier recorded alongside sampled outcomes.
RNG_NAME = f"numpy.random.PCG64 (numpy {np.__version__})"

PI_X = np.array([[1.0, 0.0], [0.0, 0.0]])


class DegenerateMeasurementError(GaussianError):
    """The measured quadrature has (numerically) zero variance."""


@dataclass(frozen=True, eq=False)
class MeasurementBlocks:
    """``cov = [[A, C], [C^T, B]]`` and ``mean = (a, b)`` with the measured mode last."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    a: np.ndarray
    b: np.ndarray
    pi: np.ndarray = PI_X

    def assemble(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(mean, cov)`` in the permuted ordering."""
        cov = np.block([[self.A, self.C], [self.C.T, self.B]])
        return np.concatenate([self.a, self.b]), cov


@dataclass(frozen=True, eq=False)
class HomodyneResult:
    """Outcome of one sampled homodyne measurement.

    ``conditional`` is ``None`` when the measured mode was the only one.
    """

    outcome: float
    conditional: GaussianState | None
    dist_mean: float
    dist_var: float


def _reorder(state: GaussianState, selector: ModeSelector) -> tuple[np.ndarray, np.ndarray]:
    P = selector.permutation()
    return P @ state.mean, P @ state.cov @ P.T


def partial_trace(state: GaussianState, keep: ModeSelector | int | Sequence[int]) -> GaussianState:
    """Reduced state on the modes in ``keep`` (in the order given)."""
    selector = as_selector(keep, state.n_modes)
    mean, cov = _reorder(state, selector)
    k = 2 * len(selector.indices)
    return GaussianState(mean[:k], cov[:k, :k])


def measurement_blocks(state: GaussianState, mode: int) -> MeasurementBlocks:
    """Split ``state`` into kept subsystem A and measured mode B.

    The kept modes stay in ascending order.
    """
    if state.n_modes < 2:
        raise DimensionError("measurement_blocks needs at least two modes")
    selector = ModeSelector((int(mode),), state.n_modes)
    selector = ModeSelector(selector.rest + (int(mode),), state.n_modes)
    mean, cov = _reorder(state, selector)
    k = mean.size - 2
    return MeasurementBlocks(
        A=cov[:k, :k], B=cov[k:, k:], C=cov[:k, k:], a=mean[:k], b=mean[k:]
    )


def _direction(phi: float) -> np.ndarray:
    return np.array([np.cos(phi), np.sin(phi)])


def homodyne_distribution(state: GaussianState, mode: int, phi: float = 0.0) -> tuple[float, float]:
    """Mean and variance of the outcome of measuring ``q(phi)`` on ``mode``."""
    i = as_selector(mode, state.n_modes).indices[0]
    w = _direction(phi)
    b = state.mean[2 * i : 2 * i + 2]
    B = state.cov[2 * i : 2 * i + 2, 2 * i : 2 * i + 2]
    return float(w @ b), float(w @ B @ w)


def homodyne_condition(state: GaussianState, mode: int, phi: float, outcome: float) -> GaussianState:
    """State of the unmeasured modes after observing ``q(phi) = outcome`` on ``mode``.

    With ``w = (cos phi, sin phi)`` and the blocks of :func:`measurement_blocks`,

        cov_A  = A - (C w)(C w)^T / (w^T B w)
        mean_A = a + (C w) (outcome - w^T b) / (w^T B w)

    For ``phi = 0`` this is ``A - C Pi C^T / B_11`` and
    ``a - C Pi (b - u) / B_11`` with ``Pi = diag(1, 0)``, ``u = (outcome, 0)``.

    Raises:
        DimensionError: the state has a single mode.
        DegenerateMeasurementError: ``w^T B w < DEGENERATE_VAR``.
    """
    blocks = measurement_blocks(state, mode)
    w = _direction(phi)
    var = float(w @ blocks.B @ w)
    if var < DEGENERATE_VAR:
        raise DegenerateMeasurementError(f"measured quadrature variance {var:.3g} is below {DEGENERATE_VAR:g}")
    cw = blocks.C @ w
    cov = blocks.A - np.outer(cw, cw) / var
    mean = blocks.a + cw * (float(outcome) - float(w @ blocks.b)) / var
    return GaussianState(mean, cov)


def sample_homodyne(state: GaussianState, mode: int, phi: float, seed: int) -> HomodyneResult:
    """Draw one homodyne outcome and condition on it.

    The outcome is drawn from the exact marginal with a PCG64 generator seeded
    by ``seed``; equal inputs give bit-identical results.
    """
    mu, var = homodyne_distribution(state, mode, phi)
    if var < DEGENERATE_VAR:
        raise DegenerateMeasurementError(f"measured quadrature variance {var:.3g} is below {DEGENERATE_VAR:g}")
    u = float(np.random.default_rng(seed).normal(mu, np.sqrt(var)))
    conditional = homodyne_condition(state, mode, phi, u) if state.n_modes > 1 else None
    return HomodyneResult(outcome=u, conditional=conditional, dist_mean=mu, dist_var=var)


def sample_outcomes(state: GaussianState, mode: int, phi: float, count: int, seed: int) -> np.ndarray:
    """``count`` independent outcomes of measuring ``q(phi)`` on fresh copies of ``state``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    mu, var = homodyne_distribution(state, mode, phi)
    return np.random.default_rng(seed).normal(mu, np.sqrt(var), size=int(count))
