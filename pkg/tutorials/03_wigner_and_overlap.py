"""
Wigner functions and overlaps
=============================

For a Gaussian state the Wigner function is a normalised multivariate
Gaussian density, and the characteristic function is its Fourier transform.
Both are available pointwise; overlaps have a closed form.
"""

import numpy as np

import cvgauss as cg

###############################################################################
# Pointwise evaluation
# --------------------
# At the centre of a pure single-mode state the Wigner function equals
# ``1/pi``. Mixing lowers the peak.

print("vacuum peak: ", cg.wigner(cg.vacuum(1), [0.0, 0.0]), " 1/pi =", 1 / np.pi)
print("thermal peak:", cg.wigner(cg.thermal(1.0), [0.0, 0.0]))

###############################################################################
# Evaluation is vectorised over the leading axes.

pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
print("squeezed at three points:", cg.wigner(cg.squeezed_vacuum(0.5), pts))

###############################################################################
# Grids and normalisation
# -----------------------
# ``wigner_grid`` traces out other modes and tabulates one mode on a square
# grid. ``W[i, j]`` is the value at ``(x[i], p[j])``.

x, p, W = cg.wigner_grid(cg.coherent(1.0 + 1.0j), extent=6.0, points=201)
cell = (x[1] - x[0]) * (p[1] - p[0])
i, j = np.unravel_index(np.argmax(W), W.shape)
print(f"grid integral = {W.sum() * cell:.6f}, peak at x={x[i]:.2f}, p={p[j]:.2f}")

###############################################################################
# Characteristic function
# -----------------------
# ``chi(0) = 1`` and ``|chi| <= 1``; displacement only adds a phase.

s = np.array([0.4, -0.7])
print("chi_vac(s) =", cg.characteristic(cg.vacuum(1), s))
print("chi_coh(s) =", cg.characteristic(cg.coherent(1.0), s))

###############################################################################
# Overlaps and the trace rule
# ---------------------------
# ``Tr[rho1 rho2] = (2 pi)^n * integral of W1 W2``. Here the integral is done
# on a grid and compared to the closed form.

a, b = cg.squeezed_vacuum(0.4, 0.3), cg.coherent(0.8)
axis = np.linspace(-8, 8, 401)
X, P = np.meshgrid(axis, axis, indexing="ij")
grid = np.stack([X, P], axis=-1)
numeric = 2 * np.pi * np.sum(cg.wigner(a, grid) * cg.wigner(b, grid)) * (axis[1] - axis[0]) ** 2
print(f"overlap closed form {cg.overlap(a, b):.8f}, grid {numeric:.8f}")

###############################################################################
# The overlap of a state with itself is its purity, and coherent states
# overlap as ``exp(-|alpha - beta|^2)``.

print("Tr[rho^2] for thermal(1):", cg.overlap(cg.thermal(1.0), cg.thermal(1.0)))
print("coherent(1) vs vacuum:  ", cg.overlap(cg.coherent(1.0), cg.vacuum(1)), " e^-1 =", np.exp(-1))
