"""Gaussian state and symplectic operation types.

Conventions used throughout the package:

* quadratures are interleaved, ``r = (x_1, p_1, ..., x_n, p_n)``;
* ``hbar = 1`` and ``x = (a + a^dag)/sqrt(2)``, so the vacuum covariance
  matrix is ``I/2``;
* mode indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Largest asymmetry ``max|M - M^T|`` silently removed by symmetrization.
SYMMETRY_TOL = 1e-10
#: Smallest allowed eigenvalue of ``cov + i/2 Omega``.
PHYSICAL_TOL = 1e-9
#: Largest allowed entry of ``F Omega F^T - Omega``.
SYMPLECTIC_TOL = 1e-12
#: States with purity at or above ``1 - PURITY_TOL`` count as pure.
PURITY_TOL = 1e-9

CONVENTION = "hbar=1, vacuum-variance=1/2, ordering=x1 p1 ... xn pn"


class GaussianError(ValueError):
    """Base class for invalid input to a Gaussian-state operation."""


class DimensionError(GaussianError):
    """Array shapes or mode counts do not match."""


class PhysicalityError(GaussianError):
    """A covariance matrix violates the uncertainty relation or is not positive definite."""


class SymplecticError(GaussianError):
    """A matrix fails the symplectic condition."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GaussianState:
    """An n-mode Gaussian state given by its first and second moments.

    Args:
        mean: displacement vector of length ``2n``.
        cov: covariance matrix of shape ``(2n, 2n)``. Asymmetry up to
            ``SYMMETRY_TOL`` is removed by storing ``(M + M^T)/2``.

    Physicality is not enforced on construction so that candidate
    matrices can be inspected with :func:`validate_physical`.
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float)
        cov = np.asarray(self.cov, dtype=float)
        if mean.ndim != 1 or mean.size == 0 or mean.size % 2:
            raise DimensionError(f"mean must be a non-empty vector of even length, got shape {mean.shape}")
        dim = mean.size
        if cov.shape != (dim, dim):
            raise DimensionError(f"cov must have shape {(dim, dim)}, got {cov.shape}")
        if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov))):
            raise GaussianError("mean and cov must be finite")
        asym = np.max(np.abs(cov - cov.T))
        if asym > SYMMETRY_TOL:
            raise GaussianError(f"cov is not symmetric (max asymmetry {asym:.3g})")
        object.__setattr__(self, "mean", _frozen(mean))
        object.__setattr__(self, "cov", _frozen(0.5 * (cov + cov.T)))

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2

    def __repr__(self):
        return f"GaussianState(n_modes={self.n_modes}, mean={self.mean.tolist()}, cov={self.cov.tolist()})"


@dataclass(frozen=True, eq=False)
class SymplecticOp:
    """A Gaussian unitary acting as ``cov -> F cov F^T`` and ``mean -> F mean + d``."""

    F: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        F = np.asarray(self.F, dtype=float)
        d = np.asarray(self.d, dtype=float)
        if d.ndim != 1 or d.size == 0 or d.size % 2:
            raise DimensionError(f"d must be a non-empty vector of even length, got shape {d.shape}")
        if F.shape != (d.size, d.size):
            raise DimensionError(f"F must have shape {(d.size, d.size)}, got {F.shape}")
        object.__setattr__(self, "F", _frozen(F))
        object.__setattr__(self, "d", _frozen(d))

    @property
    def n_modes(self) -> int:
        return self.d.size // 2

    def then(self, other: SymplecticOp) -> SymplecticOp:
        """Return the op that applies ``self`` first and ``other`` second."""
        if other.n_modes != self.n_modes:
            raise DimensionError(f"cannot compose ops on {self.n_modes} and {other.n_modes} modes")
        return SymplecticOp(other.F @ self.F, other.F @ self.d + other.d)

    def inverse(self) -> SymplecticOp:
        # F^{-1} = Omega^T F^T Omega for symplectic F
        Om = omega(self.n_modes)
        Finv = Om.T @ self.F.T @ Om
        return SymplecticOp(Finv, -Finv @ self.d)


def omega(n: int) -> np.ndarray:
    """Symplectic form on ``n`` modes in interleaved ordering."""
    if int(n) != n or n < 1:
        raise ValueError(f"number of modes must be a positive integer, got {n!r}")
    return np.kron(np.eye(int(n)), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def min_physical_eigenvalue(cov: np.ndarray) -> float:
    """Smallest eigenvalue of the Hermitian matrix ``cov + i/2 Omega``."""
    cov = np.asarray(cov, dtype=float)
    if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2:
        raise DimensionError(f"cov must be square with even dimension, got shape {cov.shape}")
    return float(np.linalg.eigvalsh(cov + 0.5j * omega(cov.shape[0] // 2))[0])


def validate_physical(state: GaussianState) -> tuple[bool, float]:
    """Check the uncertainty relation ``cov + i/2 Omega >= 0``.

    Returns:
        ``(ok, min_eig)`` where ``min_eig`` is the most negative eigenvalue
        of ``cov + i/2 Omega`` and ``ok`` is ``min_eig >= -PHYSICAL_TOL``.
    """
    lam = min_physical_eigenvalue(state.cov)
    return lam >= -PHYSICAL_TOL, lam


def require_physical(state: GaussianState, name: str = "state") -> None:
    ok, lam = validate_physical(state)
    if not ok:
        raise PhysicalityError(f"{name} is unphysical: min eigenvalue of cov + i/2 Omega is {lam:.3g}")


def symplectic_residual(F: np.ndarray) -> float:
    """``max |F Omega F^T - Omega|`` entrywise."""
    F = np.asarray(F, dtype=float)
    if F.ndim != 2 or F.shape[0] != F.shape[1] or F.shape[0] % 2:
        raise DimensionError(f"F must be square with even dimension, got shape {F.shape}")
    Om = omega(F.shape[0] // 2)
    return float(np.max(np.abs(F @ Om @ F.T - Om)))


def validate_symplectic(op: SymplecticOp) -> bool:
    return symplectic_residual(op.F) <= SYMPLECTIC_TOL


def purity(state: GaussianState) -> float:
    """``Tr[rho^2] = 1 / (2^n sqrt(det cov))``."""
    try:
        np.linalg.cholesky(state.cov)
    except np.linalg.LinAlgError:
        raise PhysicalityError("cov is not positive definite") from None
    return float(1.0 / (2.0**state.n_modes * np.sqrt(np.linalg.det(state.cov))))


def is_pure(state: GaussianState) -> bool:
    return purity(state) >= 1.0 - PURITY_TOL
