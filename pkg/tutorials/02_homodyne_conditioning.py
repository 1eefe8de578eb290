"""
Homodyne measurement and conditioning
=====================================

Measuring a quadrature of one mode and keeping the rest is Gaussian
conditioning: the remaining modes stay Gaussian, their covariance shrinks by
a fixed amount and their mean moves linearly with the outcome.
"""

import numpy as np

import cvgauss as cg

np.set_printoptions(precision=5, suppress=True)

###############################################################################
# Heralding from a two-mode squeezed vacuum
# -----------------------------------------
# Measure ``x`` on mode 1 and look at what is left on mode 0.

r = 1.0
tmsv = cg.two_mode_squeezed_vacuum(r)
for u in (-1.0, 0.0, 2.0):
    left = cg.homodyne_condition(tmsv, mode=1, phi=0.0, outcome=u)
    print(f"u = {u:+.1f}: mean = {left.mean}, cov diag = {np.diag(left.cov)}")

###############################################################################
# The conditional covariance is the same for every outcome and matches
# ``diag(1/(2 cosh 2r), cosh(2r)/2)``. The mean follows ``-u tanh 2r``.

print("expected cov diag:", np.array([1 / (2 * np.cosh(2 * r)), np.cosh(2 * r) / 2]))
print("expected mean slope:", -np.tanh(2 * r))

###############################################################################
# Before conditioning, mode 0 on its own was thermal with mean photon number
# ``sinh^2 r``. Conditioning took it to a state of purity 1, because the
# joint state was pure.

print("purity before:", cg.purity(cg.partial_trace(tmsv, [0])))
print("purity after: ", cg.purity(cg.homodyne_condition(tmsv, 1, 0.0, 0.3)))

###############################################################################
# Rotated quadratures
# -------------------
# ``phi`` selects ``q(phi) = cos(phi) x + sin(phi) p``. Measuring ``p`` on
# mode 1 flips the sign of the momentum correlation compared with ``x``.

print("after p = 1 on mode 1:", cg.homodyne_condition(tmsv, 1, np.pi / 2, 1.0).mean)
print("after x = 1 on mode 1:", cg.homodyne_condition(tmsv, 1, 0.0, 1.0).mean)

###############################################################################
# Sampling
# --------
# ``sample_homodyne`` draws an outcome from its exact Gaussian distribution
# and conditions on it. The seed makes runs reproducible.

res = cg.sample_homodyne(tmsv, mode=1, phi=0.0, seed=17)
print(f"outcome {res.outcome:.6f} drawn from N({res.dist_mean}, {res.dist_var:.4f})")
print("heralded mean:", res.conditional.mean)

###############################################################################
# Averaging the heralded mean over many outcomes gives back the unconditioned
# mean.

outcomes = cg.sample_outcomes(tmsv, 1, 0.0, 20_000, seed=3)
means = np.array([cg.homodyne_condition(tmsv, 1, 0.0, u).mean for u in outcomes])
print("average heralded mean:", means.mean(axis=0), "(should be close to 0)")
