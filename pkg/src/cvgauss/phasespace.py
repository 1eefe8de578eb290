"""Wigner and characteristic functions, Gaussian integrals, state overlaps."""

from __future__ import annotations

import numpy as np
from scipy.linalg import cho_factor, cho_solve, LinAlgError

from .core import DimensionError, GaussianState, PhysicalityError, omega
from .measurement import partial_trace


def _points(state: GaussianState, r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.shape[-1:] != (2 * state.n_modes,):
        raise DimensionError(f"phase-space points must have last dimension {2 * state.n_modes}, got shape {r.shape}")
    return r


def _cholesky(cov: np.ndarray, what: str = "cov"):
    try:
        return cho_factor(cov, lower=True)
    except LinAlgError:
        raise PhysicalityError(f"{what} is not positive definite") from None


def wigner(state: GaussianState, r) -> np.ndarray | float:
    """Wigner function of ``state`` at phase-space point(s) ``r``.

    ``r`` has shape ``(..., 2n)``; the result has shape ``r.shape[:-1]``.
    """
    r = _points(state, r)
    fac = _cholesky(state.cov)
    dr = (r - state.mean).reshape(-1, r.shape[-1])
    quad = np.einsum("ij,ji->i", dr, cho_solve(fac, dr.T))
    # sqrt(det cov) from the Cholesky diagonal
    sqrt_det = np.prod(np.diag(fac[0]))
    w = np.exp(-0.5 * quad) / ((2 * np.pi) ** state.n_modes * sqrt_det)
    w = w.reshape(r.shape[:-1])
    return float(w) if w.ndim == 0 else w


def characteristic(state: GaussianState, s) -> np.ndarray | complex:
    """``chi(s) = Tr[rho D(s)]`` with ``D(s) = exp(i r^T Omega s)``.

    For a Gaussian state ``chi(s) = exp(i mean^T Omega s - s^T Omega^T cov Omega s / 2)``.
    """
    s = _points(state, s)
    Om = omega(state.n_modes)
    k = s @ Om.T  # rows are (Omega s)^T
    phase = k @ state.mean
    quad = np.einsum("...i,ij,...j->...", k, state.cov, k)
    chi = np.exp(1j * phase - 0.5 * quad)
    return complex(chi) if np.ndim(chi) == 0 else chi


def gaussian_integral_1d(a: float, b: float, c: float = 0.0) -> float:
    """``int exp(-a x^2 + b x + c) dx`` over the real line, for ``a > 0``."""
    if not a > 0:
        raise ValueError(f"a must be positive, got {a!r}")
    return float(np.sqrt(np.pi / a) * np.exp(b * b / (4 * a) + c))


def gaussian_integral_nd(A, b=None) -> float:
    """``int exp(-r^T A r / 2 + b^T r) dr`` over R^n for symmetric positive-definite ``A``."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"A must be square, got shape {A.shape}")
    if np.max(np.abs(A - A.T), initial=0.0) > 1e-12 * max(1.0, np.max(np.abs(A))):
        raise ValueError("A must be symmetric")
    n = A.shape[0]
    b = np.zeros(n) if b is None else np.asarray(b, dtype=float)
    if b.shape != (n,):
        raise DimensionError(f"b must have shape {(n,)}, got {b.shape}")
    try:
        fac = cho_factor(A, lower=True)
    except LinAlgError:
        raise ValueError("A must be positive definite") from None
    det = np.prod(np.diag(fac[0])) ** 2
    return float(np.sqrt((2 * np.pi) ** n / det) * np.exp(0.5 * b @ cho_solve(fac, b)))


def overlap(s1: GaussianState, s2: GaussianState) -> float:
    """``Tr[rho_1 rho_2]``."""
    if s1.n_modes != s2.n_modes:
        raise DimensionError(f"states have {s1.n_modes} and {s2.n_modes} modes")
    total = s1.cov + s2.cov
    fac = _cholesky(total, "cov_1 + cov_2")
    dr = s1.mean - s2.mean
    det = np.prod(np.diag(fac[0])) ** 2
    return float(np.exp(-0.5 * dr @ cho_solve(fac, dr)) / np.sqrt(det))


def wigner_grid(state: GaussianState, mode: int = 0, extent: float = 5.0, points: int = 101):
    """Single-mode Wigner function on a uniform ``points x points`` grid.

    Other modes are traced out first. Returns ``(x, p, W)`` where ``x`` and
    ``p`` are the 1-d axes on ``[-extent, extent]`` and ``W[i, j]`` is the
    value at ``(x[i], p[j])``.
    """
    if not extent > 0:
        raise ValueError(f"extent must be positive, got {extent!r}")
    if int(points) != points or points < 2:
        raise ValueError(f"points must be an integer >= 2, got {points!r}")
    reduced = partial_trace(state, [mode])
    axis = np.linspace(-extent, extent, int(points))
    X, P = np.meshgrid(axis, axis, indexing="ij")
    return axis, axis.copy(), wigner(reduced, np.stack([X, P], axis=-1))
