"""Prescribed weights via the Horn chain.

Given a positive operator presented as a weighted sum of rank-one
projections, any majorized weight list can be realized exactly by chaining
2x2 mixes.  A direct corollary: Hermitian matrices with both the spectrum
and the diagonal prescribed.
"""

import numpy as np

from admseq import RankOneTerm, frame_operator, horn_decompose, schur_horn_matrix

# spread two full projections over four half-weight directions
e1 = np.array([1.0, 0.0], dtype=complex)
e2 = np.array([0.0, 1.0], dtype=complex)
out = horn_decompose([(1.0, e1), (1.0, e2)], [0.5, 0.5, 0.5, 0.5])

print("0.5 x four unit vectors summing to the identity on C^2:")
for t in out.terms:
    print("  weight", t.weight, " vector", np.round(t.vector, 6))

A = out.frame_operator(dim=2)
print("residual against I:", np.max(np.abs(A - np.eye(2))))

# weights are reproduced exactly, order preserved, including repeats
src = [(1.5, e1), (0.5, e2)]
out = horn_decompose(src, [1.0, 1.0])
B = frame_operator([RankOneTerm(w, v) for w, v in src], dim=2)
print("\ndiag(1.5, 0.5) as two rank-one projections:")
print("  weights:", out.weights())
print("  residual:", np.max(np.abs(out.frame_operator(dim=2) - B)))

# a 3x3 matrix with eigenvalues (3, 1, 0) and diagonal (2, 1, 1)
M = schur_horn_matrix([3.0, 1.0, 0.0], [2.0, 1.0, 1.0])
print("\nprescribed spectrum and diagonal:")
print(np.round(M, 4))
print("  eigenvalues:", np.round(np.linalg.eigvalsh(M)[::-1], 10))
print("  diagonal:   ", np.round(np.diag(M).real, 10))
