"""The 2x2 mixing step.

Two weighted projections eta1 u u* + eta2 u' u'* can be rewritten with any
pair of weights xi1, xi2 that sits between the etas and preserves their sum.
One real quadratic fixes all four coefficients; everything else follows by
chaining this step.
"""

import numpy as np

from admseq import mix_two

u = np.array([1.0, 0.0], dtype=complex)
up = np.array([0.0, 1.0], dtype=complex)

res = mix_two(1.0, 0.2, u, up, 0.7, 0.5)
print("orthogonal sources, weights (1, 0.2) -> (0.7, 0.5)")
print("  sigma^2 =", res.sigma**2, " tau^2 =", res.tau**2)
print("  w  =", np.round(res.w, 6))
print("  w' =", np.round(res.w_prime, 6))

A = 0.7 * np.outer(res.w, res.w.conj()) + 0.5 * np.outer(res.w_prime, res.w_prime.conj())
B = 1.0 * np.outer(u, u.conj()) + 0.2 * np.outer(up, up.conj())
print("  identity residual:", np.max(np.abs(A - B)))

# overlapping sources work the same way; the overlap enters through gamma
rng = np.random.default_rng(7)
v = rng.normal(size=3) + 1j * rng.normal(size=3)
v /= np.linalg.norm(v)
w = 0.995 * v + np.sqrt(1 - 0.995**2) * np.array([0, 0, 1.0]) * 1j
w /= np.linalg.norm(w)

res = mix_two(1.5, 0.5, v, w, 1.2, 0.8)
print("nearly parallel sources, gamma =", round(res.gamma, 4))
print("  sigma^2 + tau^2 =", res.sigma**2 + res.tau**2, "(never above 1)")
print("  sigma^2 =", res.sigma**2, " vs its ceiling z_o =", res.z_o)

# the moved weight cannot exceed the z_o ceiling; degenerate targets
# just relabel the inputs
res = mix_two(0.9, 0.1, u, up, 0.9, 0.1)
print("identical targets: sigma =", res.sigma, " tau =", res.tau)
