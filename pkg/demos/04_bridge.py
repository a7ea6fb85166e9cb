"""From decompositions to partial isometries and back.

A decomposition A = sum xi_j v_j v_j* is the same data as a partial
isometry V with V*V the range projection of A and diag(V A V*) = xi.  The
bridge goes both ways through the polar factorization of the placement
matrix sqrt(xi_j) v_j*.
"""

import numpy as np

from admseq import RankOneDecomp, RankOneTerm, decomp_to_isometry, gram_matrix, isometry_to_decomp

rng = np.random.default_rng(11)


def unit(dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


dec = RankOneDecomp(tuple(RankOneTerm(w, unit(3)) for w in (0.9, 0.7, 0.7, 0.4)))
rec = decomp_to_isometry(dec)

print("four terms in C^3")
print("  V shape:", rec.isometry.shape, "(one row per kept term)")
print("  diag(V A V*):", np.round(rec.diagonal, 10))
print("  weights:     ", rec.weights)

P = rec.isometry.conj().T @ rec.isometry
print("  V*V vs range projection:", np.max(np.abs(P - rec.range_projection)))

# the Gram matrix of the scaled vectors shares its nonzero spectrum with
# the frame operator; that is what makes the two presentations equivalent
g = np.linalg.eigvalsh(gram_matrix(dec))[::-1]
f = np.linalg.eigvalsh(dec.frame_operator())[::-1]
print("  Gram spectrum: ", np.round(g, 6))
print("  frame spectrum:", np.round(f, 6), "(plus zeros)")

# and back: the isometry plus the operator recovers the terms
back = isometry_to_decomp(rec.isometry, rec.gram)
delta = np.max(np.abs(back.frame_operator(dim=3) - dec.frame_operator(dim=3)))
print("round trip operator drift:", delta)
print("recovered weights:", tuple(round(w, 10) for w in back.weights()))
