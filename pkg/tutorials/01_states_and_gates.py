"""
States and Gaussian gates
=========================

A Gaussian state is fully described by its first moments and its
covariance matrix. This walkthrough builds the standard states, pushes them
through gates and checks the uncertainty relation along the way.

Quadratures are ordered ``x1, p1, x2, p2, ...`` with hbar = 1, so the vacuum
covariance is the identity over two.
"""

import numpy as np

import cvgauss as cg

np.set_printoptions(precision=4, suppress=True)

###############################################################################
# Building states
# ---------------
# Each factory returns an immutable :class:`cvgauss.GaussianState`.

vac = cg.vacuum(1)
coh = cg.coherent(1.0 + 0.5j)
hot = cg.thermal(2.0)
sq = cg.squeezed_vacuum(0.8, 0.0)

for name, s in [("vacuum", vac), ("coherent", coh), ("thermal", hot), ("squeezed", sq)]:
    print(f"{name:9s} mean={s.mean}  diag(cov)={np.diag(s.cov)}  purity={cg.purity(s):.4f}")

###############################################################################
# The squeezed state trades noise between quadratures while keeping the
# product of variances at the vacuum value 1/4.

print("Var(x) * Var(p) for the squeezed state:", sq.cov[0, 0] * sq.cov[1, 1])

###############################################################################
# Gates as symplectic maps
# ------------------------
# A gate acts as ``cov -> F cov F^T`` and ``mean -> F mean + d``. The matrix
# ``F`` must preserve the symplectic form, which ``validate_symplectic``
# checks.

bs = cg.beamsplitter(0.5)
print("beamsplitter is symplectic:", cg.validate_symplectic(bs))

###############################################################################
# Interfering a squeezed state with vacuum on a balanced beamsplitter spreads
# the squeezing over both output ports and entangles them: each port on its
# own looks mixed.

two = cg.tensor(sq, vac)
out = cg.apply(two, bs)
print("purity of the joint output:", round(cg.purity(out), 12))
print("purity of port 0 alone:   ", round(cg.purity(cg.partial_trace(out, [0])), 6))

###############################################################################
# Gates on a subset of modes
# --------------------------
# ``embed`` lifts a gate onto chosen modes of a larger register; ``apply_on``
# does the same in one step. Mode indices are 0-based.

three = cg.vacuum(3)
state = cg.apply_on(three, cg.two_mode_squeeze(0.6), [2, 0])
print("cross-correlation block between modes 0 and 2:")
print(state.cov[0:2, 4:6])

###############################################################################
# Composition runs left to right: ``a.then(b)`` applies ``a`` first.

circuit = cg.compose(cg.squeeze(0.3), cg.phase_shift(np.pi / 4), cg.displacement([1.0]))
direct = cg.apply(cg.apply(cg.apply(vac, cg.squeeze(0.3)), cg.phase_shift(np.pi / 4)), cg.displacement([1.0]))
print("composed == sequential:", np.allclose(cg.apply(vac, circuit).cov, direct.cov))

###############################################################################
# Two-mode squeezing
# ------------------
# The two-mode squeezed vacuum has correlated positions and anti-correlated
# momenta: ``Var(x1 + x2) = Var(p1 - p2) = e^{-2r}``.

r = 1.0
tmsv = cg.two_mode_squeezed_vacuum(r)
v = np.array([1.0, 0.0, 1.0, 0.0])
w = np.array([0.0, 1.0, 0.0, -1.0])
print(f"Var(x1+x2) = {v @ tmsv.cov @ v:.6f}, Var(p1-p2) = {w @ tmsv.cov @ w:.6f}, e^-2r = {np.exp(-2 * r):.6f}")

###############################################################################
# Physicality
# -----------
# Any real symmetric matrix can be stored, but only those satisfying
# ``cov + i Omega / 2 >= 0`` describe quantum states.

ok, lam = cg.validate_physical(cg.GaussianState(np.zeros(2), np.eye(2) / 4))
print("I/4 is physical?", ok, "smallest eigenvalue:", lam)
