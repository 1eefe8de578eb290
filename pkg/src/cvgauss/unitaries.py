"""Symplectic representations of common Gaussian unitaries.

Every factory returns a :class:`~cvgauss.core.SymplecticOp` on the smallest
number of modes the gate needs. Use :func:`embed` to place it inside a
larger system and :func:`apply` to act on a state.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .core import (
    DimensionError,
    GaussianState,
    SymplecticError,
    SymplecticOp,
    symplectic_residual,
    SYMPLECTIC_TOL,
)


@dataclass(frozen=True)
class ModeSelector:
    """An ordered choice of distinct 0-based modes out of ``total_modes``."""

    indices: tuple[int, ...]
    total_modes: int

    def __post_init__(self):
        idx = tuple(int(i) for i in np.atleast_1d(self.indices))
        if int(self.total_modes) != self.total_modes or self.total_modes < 1:
            raise DimensionError(f"total_modes must be a positive integer, got {self.total_modes!r}")
        if not idx:
            raise DimensionError("at least one mode must be selected")
        if len(set(idx)) != len(idx):
            raise DimensionError(f"mode indices must be distinct, got {list(idx)}")
        bad = [i for i in idx if not 0 <= i < self.total_modes]
        if bad:
            raise DimensionError(f"mode indices {bad} out of range for {self.total_modes} modes")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "total_modes", int(self.total_modes))

    @property
    def rest(self) -> tuple[int, ...]:
        """Unselected modes in ascending order."""
        chosen = set(self.indices)
        return tuple(i for i in range(self.total_modes) if i not in chosen)

    def permutation(self) -> np.ndarray:
        """Permutation matrix ``P`` moving the selected modes to the front.

        ``P @ (x_1, p_1, ..., x_n, p_n)`` lists the selected modes' quadratures
        first, in selector order, followed by the rest in ascending order.
        """
        order = self.indices + self.rest
        P = np.zeros((2 * self.total_modes, 2 * self.total_modes))
        for row, mode in enumerate(order):
            P[2 * row, 2 * mode] = 1.0
            P[2 * row + 1, 2 * mode + 1] = 1.0
        return P


def as_selector(modes: ModeSelector | int | Sequence[int], total_modes: int) -> ModeSelector:
    if isinstance(modes, ModeSelector):
        if modes.total_modes != total_modes:
            raise DimensionError(f"selector is for {modes.total_modes} modes, state has {total_modes}")
        return modes
    return ModeSelector(tuple(np.atleast_1d(modes).tolist()), total_modes)


def _s_theta(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, s], [s, -c]])


def _normalize_squeezing(r: float, theta: float) -> tuple[float, float]:
    # S(-r, theta) == S(r, theta + pi)
    if r < 0:
        return -r, theta + np.pi
    return r, theta


def rotation_matrix(phi: float) -> np.ndarray:
    """``R(phi) = [[cos, sin], [-sin, cos]]``."""
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, s], [-s, c]])


def displacement(alphas) -> SymplecticOp:
    """Displacement by complex amplitudes ``alphas`` (one per mode)."""
    alphas = np.atleast_1d(np.asarray(alphas, dtype=complex))
    if alphas.ndim != 1 or alphas.size == 0:
        raise DimensionError("alphas must be a non-empty 1-d sequence")
    d = np.sqrt(2.0) * np.column_stack([alphas.real, alphas.imag]).ravel()
    return SymplecticOp(np.eye(d.size), d)


def phase_shift(phi: float) -> SymplecticOp:
    return SymplecticOp(rotation_matrix(phi), np.zeros(2))


def beamsplitter(eta: float) -> SymplecticOp:
    """Two-mode beam splitter with transmittivity ``eta`` in ``[0, 1]``."""
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"transmittivity must lie in [0, 1], got {eta!r}")
    t, s = np.sqrt(eta), np.sqrt(1.0 - eta)
    I2 = np.eye(2)
    F = np.block([[t * I2, s * I2], [-s * I2, t * I2]])
    return SymplecticOp(F, np.zeros(4))


def squeeze(r: float, theta: float = 0.0) -> SymplecticOp:
    """Single-mode squeezer with ``xi = r e^{i theta}``.

    ``theta = 0`` squeezes ``x`` by ``e^{-r}``. Negative ``r`` is mapped to
    ``(|r|, theta + pi)``.
    """
    r, theta = _normalize_squeezing(r, theta)
    # cosh r - sinh r cos(theta) rewritten without cancellation
    e, sh = np.exp(-r), np.sinh(r)
    off = -sh * np.sin(theta)
    F = np.array([[e + 2 * sh * np.sin(theta / 2) ** 2, off], [off, e + 2 * sh * np.cos(theta / 2) ** 2]])
    return SymplecticOp(F, np.zeros(2))


def two_mode_squeeze(r: float, theta: float = 0.0) -> SymplecticOp:
    r, theta = _normalize_squeezing(r, theta)
    c = np.cosh(r) * np.eye(2)
    s = np.sinh(r) * _s_theta(theta)
    F = np.block([[c, -s], [-s, c]])
    return SymplecticOp(F, np.zeros(4))


def embed(op: SymplecticOp, selector: ModeSelector | int | Sequence[int], n_modes: int | None = None) -> SymplecticOp:
    """Act with a k-mode ``op`` on the selected modes of an n-mode system.

    Builds ``P^{-1} (F (+) I) P`` with the permutation from
    :meth:`ModeSelector.permutation`; the op acts as the identity on every
    unselected mode.

    Args:
        op: operation on ``k`` modes.
        selector: a :class:`ModeSelector`, or mode indices together with
            ``n_modes``.
        n_modes: total number of modes, required unless ``selector`` is a
            :class:`ModeSelector`.
    """
    if not isinstance(selector, ModeSelector):
        if n_modes is None:
            raise TypeError("n_modes is required when selector is not a ModeSelector")
        selector = as_selector(selector, n_modes)
    k = len(selector.indices)
    if k != op.n_modes:
        raise DimensionError(f"op acts on {op.n_modes} modes but {k} were selected")
    n = selector.total_modes
    P = selector.permutation()
    big = np.eye(2 * n)
    big[: 2 * k, : 2 * k] = op.F
    d = np.zeros(2 * n)
    d[: 2 * k] = op.d
    # P is orthogonal, so P^{-1} = P^T
    return SymplecticOp(P.T @ big @ P, P.T @ d)


def compose(*ops: SymplecticOp) -> SymplecticOp:
    """Compose ops applied left to right: ``compose(a, b)`` is ``a`` then ``b``."""
    if not ops:
        raise ValueError("compose needs at least one op")
    out = ops[0]
    for op in ops[1:]:
        out = out.then(op)
    return out


def inverse(op: SymplecticOp) -> SymplecticOp:
    return op.inverse()


def apply(state: GaussianState, op: SymplecticOp) -> GaussianState:
    """Transform ``state`` by ``cov -> F cov F^T``, ``mean -> F mean + d``."""
    if op.n_modes != state.n_modes:
        raise DimensionError(f"op acts on {op.n_modes} modes, state has {state.n_modes}")
    res = symplectic_residual(op.F)
    if res > SYMPLECTIC_TOL:
        raise SymplecticError(f"F is not symplectic (max |F Omega F^T - Omega| = {res:.3g})")
    cov = op.F @ state.cov @ op.F.T
    return GaussianState(op.F @ state.mean + op.d, 0.5 * (cov + cov.T))


def apply_on(state: GaussianState, op: SymplecticOp, modes: ModeSelector | int | Sequence[int]) -> GaussianState:
    """Shorthand for ``apply(state, embed(op, modes, state.n_modes))``."""
    return apply(state, embed(op, modes, state.n_modes))
