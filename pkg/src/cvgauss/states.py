"""Factories for common Gaussian states."""

from __future__ import annotations

import numpy as np
from scipy.linalg import block_diag

from .core import GaussianState
from .unitaries import _normalize_squeezing, _s_theta


def vacuum(n: int = 1) -> GaussianState:
    if int(n) != n or n < 1:
        raise ValueError(f"number of modes must be a positive integer, got {n!r}")
    return GaussianState(np.zeros(2 * int(n)), 0.5 * np.eye(2 * int(n)))


def coherent(alpha: complex) -> GaussianState:
    alpha = complex(alpha)
    return GaussianState(np.sqrt(2.0) * np.array([alpha.real, alpha.imag]), 0.5 * np.eye(2))


def thermal(nbar: float) -> GaussianState:
    """Thermal state with mean photon number ``nbar``."""
    if not nbar >= 0:
        raise ValueError(f"mean photon number must be non-negative, got {nbar!r}")
    return GaussianState(np.zeros(2), (nbar + 0.5) * np.eye(2))


def nbar_from_temperature(beta: float, omega: float = 1.0) -> float:
    """Mean photon number of a mode of frequency ``omega`` at inverse temperature ``beta``.

    Inverts ``exp(-beta omega) = nbar / (1 + nbar)``.
    """
    if beta <= 0 or omega <= 0:
        raise ValueError("beta and omega must be positive")
    return float(1.0 / np.expm1(beta * omega))


def squeezed_vacuum(r: float, theta: float = 0.0) -> GaussianState:
    """``(cosh 2r I - sinh 2r S_theta) / 2``.

    The diagonal is evaluated as ``e^{-2r} + 2 sinh(2r) sin^2(theta/2)`` (and
    the cos^2 counterpart), which equals the textbook form but avoids the
    cancellation of ``cosh 2r - sinh 2r`` for strong squeezing.
    """
    r, theta = _normalize_squeezing(r, theta)
    e, sh = np.exp(-2 * r), np.sinh(2 * r)
    xx = e + 2 * sh * np.sin(theta / 2) ** 2
    pp = e + 2 * sh * np.cos(theta / 2) ** 2
    xp = -sh * np.sin(theta)
    cov = 0.5 * np.array([[xx, xp], [xp, pp]])
    return GaussianState(np.zeros(2), cov)


def two_mode_squeezed_vacuum(r: float, theta: float = 0.0) -> GaussianState:
    r, theta = _normalize_squeezing(r, theta)
    a = 0.5 * np.cosh(2 * r) * np.eye(2)
    c = -0.5 * np.sinh(2 * r) * _s_theta(theta)
    return GaussianState(np.zeros(4), np.block([[a, c], [c, a]]))


def tensor(*states: GaussianState) -> GaussianState:
    """Product state: direct sum of covariances, concatenated means."""
    if not states:
        raise ValueError("tensor needs at least one state")
    return GaussianState(
        np.concatenate([s.mean for s in states]),
        block_diag(*(s.cov for s in states)),
    )
