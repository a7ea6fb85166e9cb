"""Bridge between weighted rank-one decompositions and partial isometries.

A decomposition sum xi_j v_j v_j* is encoded as the placement matrix B with
rows sqrt(xi_j) v_j*.  Its Gram B*B is exactly the frame operator, and the
polar factor V of B (computed from B*B, never an SVD) is a partial isometry
with V A V* carrying the weights on its diagonal.  Both directions of the
translation are provided and are exact inverses on nonzero-weight terms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .operators import (
    RankOneDecomp,
    RankOneTerm,
    assert_hermitian,
    polar_partial_isometry,
    sqrt_psd,
)

WEIGHT_FLOOR = 1e-12
DIAG_TOL = 1e-10
ROUNDTRIP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class BridgeRecord:
    """Placement matrix, its polar pieces, and the bookkeeping to invert.

    ``placement`` has one row per kept (nonzero-weight) term;
    ``kept_indices`` maps those rows back to positions in the source
    decomposition.  ``gram`` is placement* placement, which coincides with
    the frame operator of the decomposition.
    """

    placement: np.ndarray
    isometry: np.ndarray
    sqrt_gram: np.ndarray
    gram: np.ndarray
    range_projection: np.ndarray
    kept_indices: tuple[int, ...]
    weights: tuple[float, ...]

    @property
    def diagonal(self) -> np.ndarray:
        """diag(V A V*), which reproduces the kept weights."""
        VA = self.isometry @ self.gram
        return np.einsum("ij,ij->i", VA, self.isometry.conj()).real


def decomp_to_isometry(decomp: RankOneDecomp, weight_floor: float = WEIGHT_FLOOR) -> BridgeRecord:
    """Encode the nonzero-weight terms as a placement matrix and polar-factor it."""
    kept = [(i, t) for i, t in enumerate(decomp.terms) if t.weight > weight_floor]
    if not kept:
        raise DimensionError("decomposition has no terms above the weight floor")
    dim = len(kept[0][1].vector)
    B = np.array([math.sqrt(t.weight) * t.vector.conj() for _, t in kept], dtype=complex)
    if B.shape[1] != dim:
        raise DimensionError("terms disagree on the ambient dimension")
    rec = polar_partial_isometry(B)
    gram = assert_hermitian(B.conj().T @ B)
    out = BridgeRecord(
        placement=B,
        isometry=rec.isometry,
        sqrt_gram=rec.sqrt_gram,
        gram=gram,
        range_projection=rec.range_projection,
        kept_indices=tuple(i for i, _ in kept),
        weights=tuple(t.weight for _, t in kept),
    )
    dev = float(np.max(np.abs(out.diagonal - np.asarray(out.weights))))
    if dev > DIAG_TOL:
        raise ValueError(f"bridge diagonal drifted from the weights by {dev:.3e}")
    return out


def isometry_to_decomp(isometry, gram, weight_floor: float = WEIGHT_FLOOR) -> RankOneDecomp:
    """Recover the decomposition sum_j xi_j v_j v_j* from a partial isometry
    and the PSD operator it factors: xi_j = (V A V*)_jj and
    v_j = A^{1/2} V* e_j / sqrt(xi_j); rows below the weight floor are skipped."""
    V = np.asarray(isometry, dtype=complex)
    if V.ndim != 2:
        raise DimensionError(f"expected a matrix isometry, got shape {V.shape}")
    A = assert_hermitian(gram)
    if A.shape[0] != V.shape[1]:
        raise DimensionError(
            f"isometry acts on dimension {V.shape[1]} but the operator has {A.shape[0]}"
        )
    VtV = V.conj().T @ V
    if float(np.max(np.abs(VtV @ A - A))) > ROUNDTRIP_TOL:
        raise ValueError("isometry does not cover the range of the operator")
    root = sqrt_psd(A)
    B = V @ root
    terms = []
    for j in range(B.shape[0]):
        xi = float(np.real(np.vdot(B[j], B[j])))
        if xi <= weight_floor:
            continue
        terms.append(RankOneTerm(xi, B[j].conj() / math.sqrt(xi)))
    return RankOneDecomp(tuple(terms))


def gram_matrix(decomp: RankOneDecomp) -> np.ndarray:
    """Gram matrix of the scaled vectors sqrt(xi_j) v_j over all terms,
    zero-weight ones included."""
    terms = decomp.terms
    n = len(terms)
    G = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for k in range(j, n):
            val = math.sqrt(terms[j].weight * terms[k].weight) * complex(
                np.vdot(terms[j].vector, terms[k].vector)
            )
            G[j, k] = val
            G[k, j] = val.conjugate()
    return G
