"""Fidelity ``F = Tr sqrt(sqrt(rho_1) rho_2 sqrt(rho_1))`` between Gaussian states.

The non-squared convention is used everywhere. :func:`fidelity` picks the
cheapest exact formula: the single-mode closed form, the pure-state form,
or the general expression built from

    V = Omega^T (cov_1 + cov_2)^{-1} (Omega/4 + cov_2 Omega cov_1),
    F_0 = (det(2 (sqrt(I + (V Omega)^{-2}/4) + I) V) / det(cov_1 + cov_2))^{1/4}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve, eigvals, LinAlgError

from .core import (
    DimensionError,
    GaussianError,
    GaussianState,
    PhysicalityError,
    is_pure,
    omega,
    require_physical,
)

#: Allowed overshoot above 1 before clamping; anything larger is an error.
CLAMP_SLACK = 1e-9
#: Spectral terms of ``I + (V Omega)^{-2}/4`` below ``PURE_TERM_SCALE * eps *
#: cond`` (largest condition number of the two covariance matrices) belong to
#: a pure symplectic mode and are set to zero. Round-off alone leaves such
#: terms at roughly ``100 * eps * cond``.
PURE_TERM_SCALE = 1024.0


class FidelityError(GaussianError):
    """The fidelity could not be evaluated reliably."""


@dataclass(frozen=True, eq=False)
class FidelityIntermediates:
    V: np.ndarray
    W: np.ndarray
    delta: float  # det(cov_1 + cov_2)
    f0: float
    gamma: float | None = None  # single-mode only
    lam: float | None = None  # single-mode only


def _check_pair(s1: GaussianState, s2: GaussianState) -> None:
    if s1.n_modes != s2.n_modes:
        raise DimensionError(f"states have {s1.n_modes} and {s2.n_modes} modes")


def _displacement_factor(s1: GaussianState, s2: GaussianState):
    """Cholesky factor of ``cov_1 + cov_2``, its determinant and the displacement exponential."""
    total = s1.cov + s2.cov
    try:
        fac = cho_factor(total, lower=True)
    except LinAlgError:
        raise PhysicalityError("cov_1 + cov_2 is not positive definite") from None
    dr = s2.mean - s1.mean
    delta = float(np.prod(np.diag(fac[0])) ** 2)
    return fac, delta, float(np.exp(-0.25 * dr @ cho_solve(fac, dr)))


def _finish(value: float) -> float:
    if value > 1.0 + CLAMP_SLACK or not value >= 0.0:
        raise FidelityError(f"fidelity {value!r} outside [0, 1]")
    return min(value, 1.0)


def fidelity_pure(s1: GaussianState, s2: GaussianState) -> float:
    """Fidelity when at least one of the states is pure."""
    _check_pair(s1, s2)
    if not (is_pure(s1) or is_pure(s2)):
        raise GaussianError("fidelity_pure requires at least one pure state")
    _, delta, disp = _displacement_factor(s1, s2)
    return _finish(delta**-0.25 * disp)


def _excess_det(cov: np.ndarray) -> float:
    """``det(cov) - 1/4``, zero for a pure mode, clipped and snapped against round-off."""
    excess = float(np.linalg.det(cov)) - 0.25
    # Gamma contains sqrt(Lambda), so round-off left here would be amplified to ~sqrt(eps)
    scale = abs(cov[0, 0] * cov[1, 1]) + cov[0, 1] ** 2
    return 0.0 if excess < PURE_TERM_SCALE * np.finfo(float).eps * scale else excess


def _single_mode_terms(s1: GaussianState, s2: GaussianState) -> tuple[float, float, float]:
    delta = float(np.linalg.det(s1.cov + s2.cov))
    lam = 4.0 * _excess_det(s1.cov) * _excess_det(s2.cov)
    gamma = np.sqrt(delta + lam) - np.sqrt(lam)
    return delta, lam, float(gamma)


def fidelity_single_mode(s1: GaussianState, s2: GaussianState) -> float:
    """Closed form for two single-mode states, pure or mixed."""
    _check_pair(s1, s2)
    if s1.n_modes != 1:
        raise DimensionError("fidelity_single_mode requires single-mode states")
    _, _, disp = _displacement_factor(s1, s2)
    _, _, gamma = _single_mode_terms(s1, s2)
    return _finish(gamma**-0.5 * disp)


def _aux_matrix(s1: GaussianState, s2: GaussianState, fac) -> np.ndarray:
    Om = omega(s1.n_modes)
    return Om.T @ cho_solve(fac, 0.25 * Om + s2.cov @ Om @ s1.cov)


def _snap_tol(s1: GaussianState, s2: GaussianState) -> float:
    cond = max(np.linalg.cond(s1.cov), np.linalg.cond(s2.cov))
    return PURE_TERM_SCALE * np.finfo(float).eps * cond


def _root_terms(terms: np.ndarray, tol: float) -> np.ndarray:
    """``1 + sqrt(terms)`` on the principal branch, snapping pure-mode terms to zero."""
    terms = np.where(np.abs(terms) < tol, 0.0, terms)
    return 1.0 + np.sqrt(terms.astype(complex))


def _f0_from_v(s1: GaussianState, s2: GaussianState, V: np.ndarray, delta: float) -> float:
    Om = omega(s1.n_modes)
    # V Omega = Omega^T (S^{-1} M) Omega, so its spectrum is that of the pencil (M, S);
    # QZ avoids forming S^{-1} and keeps pure-mode terms near round-off
    lam = eigvals(0.25 * Om + s2.cov @ Om @ s1.cov, s1.cov + s2.cov).astype(complex)
    if not np.all(np.isfinite(lam)) or np.min(np.abs(lam)) < 1e-14 * max(1.0, np.max(np.abs(lam))):
        raise FidelityError("V Omega is numerically singular")
    # det(2 (sqrt(I + (V Omega)^{-2}/4) + I) V) = det(2V) * prod over the spectrum of V Omega
    num = np.prod(_root_terms(1.0 + 0.25 / lam**2, _snap_tol(s1, s2))) * np.linalg.det(2.0 * V)
    return _real_quartic_root(num / delta)


def _f0_from_w(s1: GaussianState, s2: GaussianState, V: np.ndarray, delta: float) -> float:
    Om = omega(s1.n_modes)
    W = -2j * V @ Om
    mu = np.linalg.eigvals(W)
    if np.min(np.abs(mu)) < 1e-14 * max(1.0, np.max(np.abs(mu))):
        raise FidelityError("W is numerically singular")
    # det((sqrt(I - W^{-2}) + I) W i Omega) = det(W i Omega) * prod over the spectrum of W
    num = np.prod(_root_terms(1.0 - 1.0 / mu**2, _snap_tol(s1, s2))) * np.linalg.det(1j * W @ Om)
    return _real_quartic_root(num / delta)


def _real_quartic_root(ratio: complex) -> float:
    ratio = complex(ratio)
    if abs(ratio.imag) > 1e-8 * max(1.0, abs(ratio.real)) or ratio.real <= 0:
        raise FidelityError(f"F_0^4 = {ratio!r} is not a positive real number")
    return ratio.real**0.25


def fidelity_intermediates(s1: GaussianState, s2: GaussianState) -> FidelityIntermediates:
    """The auxiliary quantities behind :func:`fidelity_general`."""
    _check_pair(s1, s2)
    fac, delta, _ = _displacement_factor(s1, s2)
    V = _aux_matrix(s1, s2, fac)
    gamma = lam = None
    if s1.n_modes == 1:
        _, lam, gamma = _single_mode_terms(s1, s2)
    return FidelityIntermediates(
        V=V, W=-2j * V @ omega(s1.n_modes), delta=delta, f0=_f0_from_v(s1, s2, V, delta), gamma=gamma, lam=lam
    )


def fidelity_general(s1: GaussianState, s2: GaussianState, method: str = "V") -> float:
    """General formula for arbitrary (mixed) states.

    Args:
        method: ``"V"`` evaluates the matrix functions of ``V Omega``;
            ``"W"`` uses the equivalent form in ``W = -2 i V Omega`` and exists
            as an independent cross-check.
    """
    _check_pair(s1, s2)
    fac, delta, disp = _displacement_factor(s1, s2)
    V = _aux_matrix(s1, s2, fac)
    if method == "V":
        f0 = _f0_from_v(s1, s2, V, delta)
    elif method == "W":
        f0 = _f0_from_w(s1, s2, V, delta)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(f0 * disp)


def fidelity_path(s1: GaussianState, s2: GaussianState) -> str:
    """Name of the formula :func:`fidelity` uses for this pair."""
    if s1.n_modes == 1:
        return "single-mode"
    if is_pure(s1) or is_pure(s2):
        return "pure"
    return "general"


def fidelity(s1: GaussianState, s2: GaussianState) -> float:
    """Fidelity between two physical Gaussian states with equal mode counts."""
    _check_pair(s1, s2)
    require_physical(s1, "first state")
    require_physical(s2, "second state")
    path = fidelity_path(s1, s2)
    if path == "single-mode":
        return fidelity_single_mode(s1, s2)
    if path == "pure":
        return fidelity_pure(s1, s2)
    return fidelity_general(s1, s2)
