"""Finite-dimensional operator helpers: Hermitian checks, PSD square roots,
polar partial isometries (computed from B*B, not an SVD), frame operators,
and JSON forms for operators and rank-one decompositions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, SequenceError

EIG_CLAMP = 1e-10       # eigenvalues in [-EIG_CLAMP, EIG_CLAMP] count as zero
HERM_TOL = 1e-12        # per-dimension Hermitian symmetry tolerance
SQRT_PSD_TOL = 1e-9     # per-dimension negative-eigenvalue allowance
POLAR_PROJ_TOL = 1e-10  # V*V versus range projection
POLAR_FACTOR_TOL = 1e-9  # B versus V sqrt(B*B)


def as_operator(A) -> np.ndarray:
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")
    return M


def assert_hermitian(A, tol: float | None = None) -> np.ndarray:
    M = as_operator(A)
    t = HERM_TOL * max(1, M.shape[0]) if tol is None else tol
    dev = float(np.max(np.abs(M - M.conj().T))) if M.size else 0.0
    if dev > t:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {dev:.3e})")
    return 0.5 * (M + M.conj().T)


def eigh_desc(A) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching orthonormal eigenvector columns."""
    M = assert_hermitian(A)
    w, V = np.linalg.eigh(M)
    order = np.argsort(w)[::-1]
    return w[order].real, V[:, order]


def eigenvalues_desc(A) -> np.ndarray:
    M = assert_hermitian(A)
    return np.sort(np.linalg.eigvalsh(M))[::-1]


def sqrt_psd(A, tol: float | None = None) -> np.ndarray:
    """Hermitian square root of a PSD matrix; tiny negative eigenvalues clamp."""
    w, V = eigh_desc(A)
    t = SQRT_PSD_TOL * max(1, len(w)) if tol is None else tol
    if len(w) and w[-1] < -t:
        raise ValueError(f"matrix is not positive semidefinite (min eig {w[-1]:.3e})")
    s = np.sqrt(np.clip(w, 0.0, None))
    return (V * s) @ V.conj().T


@dataclass(frozen=True, eq=False)
class PartialIsometryRec:
    """Polar data of a matrix B: B = isometry @ sqrt_gram with
    isometry* @ isometry equal to the projection onto the range of B*B."""

    isometry: np.ndarray
    sqrt_gram: np.ndarray
    range_projection: np.ndarray
    rank: int


def polar_partial_isometry(B, clamp: float = EIG_CLAMP) -> PartialIsometryRec:
    """Polar decomposition B = V (B*B)^{1/2} built from the eigendecomposition
    of the Gram matrix B*B.  V is a partial isometry from the range of B*B."""
    M = np.asarray(B, dtype=complex)
    if M.ndim != 2:
        raise DimensionError(f"expected a matrix, got shape {M.shape}")
    gram = M.conj().T @ M
    w, U = eigh_desc(gram)
    kept = w > clamp
    rank = int(np.count_nonzero(kept))
    s = np.sqrt(np.clip(w, 0.0, None))
    sqrt_gram = (U * s) @ U.conj().T
    inv_s = np.where(kept, 1.0 / np.where(kept, s, 1.0), 0.0)
    V = M @ (U * inv_s) @ U.conj().T
    R = (U * kept.astype(float)) @ U.conj().T
    dev_proj = float(np.max(np.abs(V.conj().T @ V - R))) if M.size else 0.0
    if dev_proj > POLAR_PROJ_TOL:
        raise ValueError(f"polar isometry failed its projection check ({dev_proj:.3e})")
    dev_fact = float(np.max(np.abs(V @ sqrt_gram - M))) if M.size else 0.0
    if dev_fact > POLAR_FACTOR_TOL:
        raise ValueError(f"polar factorization residual too large ({dev_fact:.3e})")
    return PartialIsometryRec(V, sqrt_gram, R, rank)


# -- rank-one decompositions ------------------------------------------

def unit_vector(v, tol: float = 1e-9) -> np.ndarray:
    x = np.asarray(v, dtype=complex).reshape(-1)
    nrm = float(np.linalg.norm(x))
    if abs(nrm - 1.0) > tol:
        raise ValueError(f"vector norm {nrm!r} is not 1")
    return x / nrm


@dataclass(frozen=True, eq=False)
class RankOneTerm:
    """One weighted projection w * v v^* with v a unit vector."""

    weight: float
    vector: np.ndarray

    def matrix(self) -> np.ndarray:
        return self.weight * np.outer(self.vector, self.vector.conj())


@dataclass(frozen=True, eq=False)
class RankOneDecomp:
    """A list of weighted rank-one projections, plus optional remainder terms
    recording the unconsumed part of a truncated infinite construction."""

    terms: tuple[RankOneTerm, ...]
    remainder: tuple[RankOneTerm, ...] = field(default=())

    @property
    def dim(self) -> int:
        for t in self.terms + self.remainder:
            return len(t.vector)
        raise DimensionError("empty decomposition has no ambient dimension")

    def weights(self) -> tuple[float, ...]:
        return tuple(t.weight for t in self.terms)

    def frame_operator(self, dim: int | None = None, with_remainder: bool = False) -> np.ndarray:
        terms = self.terms + self.remainder if with_remainder else self.terms
        return frame_operator(terms, dim=dim if dim is not None else self.dim)


def make_term(weight, vector, tol: float = 1e-9) -> RankOneTerm:
    w = float(weight)
    if w < -tol:
        raise ValueError(f"term weight must be nonnegative, got {w!r}")
    return RankOneTerm(max(w, 0.0), unit_vector(vector, tol))


def frame_operator(terms, dim: int | None = None) -> np.ndarray:
    """Sum of w_j v_j v_j^* over the given terms."""
    terms = list(terms)
    if dim is None:
        if not terms:
            raise DimensionError("cannot infer the dimension of an empty sum")
        dim = len(terms[0].vector)
    S = np.zeros((dim, dim), dtype=complex)
    for t in terms:
        if len(t.vector) != dim:
            raise DimensionError(f"term vector has length {len(t.vector)}, expected {dim}")
        S += t.weight * np.outer(t.vector, t.vector.conj())
    return S


def residual_norm(A, B) -> float:
    """Operator 2-norm of the difference."""
    M = np.asarray(A, dtype=complex) - np.asarray(B, dtype=complex)
    if M.shape[0] != M.shape[1] or M.ndim != 2:
        raise DimensionError(f"expected equal square shapes, got {M.shape}")
    return float(np.linalg.norm(M, 2)) if M.size else 0.0


# -- JSON forms --------------------------------------------------------

def _real_from_json(x) -> float:
    if isinstance(x, str):
        try:
            return float(x)
        except ValueError as exc:
            raise SequenceError(f"bad decimal string {x!r}") from exc
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise SequenceError(f"expected a number or decimal string, got {x!r}")


def _complex_from_json(x) -> complex:
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise SequenceError(f"complex entries are [re, im] pairs, got {x!r}")
        return complex(_real_from_json(x[0]), _real_from_json(x[1]))
    return complex(_real_from_json(x), 0.0)


def op_to_json(A) -> dict:
    M = as_operator(A)
    entries = [[float(z.real), float(z.imag)] for z in M.reshape(-1)]
    return {"dim": M.shape[0], "entries": entries}


def op_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise SequenceError(f"operator JSON must be an object, got {type(obj).__name__}")
    if "diag" in obj:
        d = [_real_from_json(v) for v in obj["diag"]]
        return np.diag(np.asarray(d, dtype=complex))
    try:
        n = int(obj["dim"])
        entries = obj["entries"]
    except KeyError as exc:
        raise SequenceError(f"operator JSON missing field {exc}") from exc
    if len(entries) != n * n:
        raise SequenceError(f"operator claims dim {n} but has {len(entries)} entries")
    flat = [_complex_from_json(e) for e in entries]
    return np.asarray(flat, dtype=complex).reshape(n, n)


def _vec_to_json(v: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in v]


def _vec_from_json(obj) -> np.ndarray:
    if not isinstance(obj, (list, tuple)):
        raise SequenceError("vector JSON must be a list of [re, im] pairs")
    return np.asarray([_complex_from_json(e) for e in obj], dtype=complex)


def decomp_to_json(decomp: RankOneDecomp) -> dict:
    out = {"terms": [{"weight": t.weight, "vector": _vec_to_json(t.vector)} for t in decomp.terms]}
    if decomp.remainder:
        out["remainder_terms"] = [
            {"weight": t.weight, "vector": _vec_to_json(t.vector)} for t in decomp.remainder
        ]
    return out


def _terms_from_json(items) -> tuple[RankOneTerm, ...]:
    terms = []
    for it in items:
        if not isinstance(it, dict) or "weight" not in it or "vector" not in it:
            raise SequenceError("decomposition terms need 'weight' and 'vector'")
        terms.append(make_term(_real_from_json(it["weight"]), _vec_from_json(it["vector"])))
    return tuple(terms)


def decomp_from_json(obj) -> RankOneDecomp:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise SequenceError("decomposition JSON must be an object with 'terms'")
    terms = _terms_from_json(obj["terms"])
    remainder = _terms_from_json(obj.get("remainder_terms", ()))
    dims = {len(t.vector) for t in terms + remainder}
    if len(dims) > 1:
        raise DimensionError(f"mixed vector lengths in decomposition: {sorted(dims)}")
    return RankOneDecomp(terms, remainder)


def decomp_residual(A, decomp: RankOneDecomp, with_remainder: bool = True) -> float:
    M = as_operator(A)
    S = decomp.frame_operator(dim=M.shape[0], with_remainder=with_remainder)
    return residual_norm(M, S)
