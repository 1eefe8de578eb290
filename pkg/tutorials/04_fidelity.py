"""
Fidelity between Gaussian states
================================

The library uses the non-squared fidelity
``F = Tr sqrt(sqrt(rho1) rho2 sqrt(rho1))``. Depending on the inputs,
``fidelity`` picks one of three exact formulas. They agree where their
domains overlap.
"""

import numpy as np

import cvgauss as cg

###############################################################################
# Closed-form checks
# ------------------

print("coherent(0) vs coherent(2):", cg.fidelity(cg.coherent(0), cg.coherent(2)), " e^-2 =", np.exp(-2))
for nbar in (0.5, 1.0, 3.0):
    f = cg.fidelity(cg.vacuum(1), cg.thermal(nbar))
    print(f"vacuum vs thermal({nbar}): {f:.12f}  1/sqrt(1+nbar) = {1 / np.sqrt(1 + nbar):.12f}")

###############################################################################
# Which formula is used?
# ----------------------
# Single-mode pairs always use the single-mode closed form. For more modes,
# a pure input allows the simpler pure-state formula; otherwise the general
# expression is evaluated.

mixed2 = cg.tensor(cg.thermal(0.3), cg.thermal(0.8))
rotated = cg.apply(mixed2, cg.beamsplitter(0.7))
print(cg.fidelity_path(cg.thermal(1), cg.squeezed_vacuum(0.5)))
print(cg.fidelity_path(cg.vacuum(2), mixed2))
print(cg.fidelity_path(mixed2, rotated))

###############################################################################
# Cross-checking the formulas
# ---------------------------
# The general expression can be forced on any pair, and it has two
# equivalent algebraic forms.

a = cg.apply(cg.thermal(0.4), cg.squeeze(0.3, 1.0).then(cg.displacement([0.5j])))
b = cg.apply(cg.thermal(1.1), cg.squeeze(0.6, 0.2))
print("single-mode formula:", cg.fidelity_single_mode(a, b))
print("general, V form:    ", cg.fidelity_general(a, b, "V"))
print("general, W form:    ", cg.fidelity_general(a, b, "W"))

pure = cg.apply(cg.vacuum(2), cg.two_mode_squeeze(0.5).then(cg.displacement([0.3, -0.2j])))
print("pure formula:  ", cg.fidelity_pure(pure, rotated))
print("general form:  ", cg.fidelity_general(pure, rotated))

###############################################################################
# Intermediates
# -------------
# The auxiliary matrix ``V``, its ``W = -2 i V Omega`` counterpart and the
# displacement-free factor ``F0`` are exposed for inspection.

it = cg.fidelity_intermediates(mixed2, rotated)
print("det(cov1 + cov2) =", it.delta, " F0 =", it.f0)

###############################################################################
# Invariance
# ----------
# Applying the same gate to both states leaves the fidelity unchanged.

op = cg.embed(cg.squeeze(0.7, 0.4), [1], 2).then(cg.beamsplitter(0.2))
print("before:", cg.fidelity(mixed2, rotated), " after:", cg.fidelity(cg.apply(mixed2, op), cg.apply(rotated, op)))
