"""Two-term mixing of rank-one projections and the finite Horn construction.

The 2x2 step rewrites eta1 u u* + eta2 u' u'* as xi1 w w* + xi2 w' w'* whenever
(xi1, xi2) sits between the etas with the same sum.  Chaining such steps over a
weight pool realizes any majorized target list, and in particular produces
Hermitian matrices with prescribed spectrum and diagonal."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, MajorizationError
from .operators import RankOneDecomp, RankOneTerm, frame_operator, unit_vector
from .seqkit import majorizes

MIX_RESIDUAL_TOL = 1e-10
HORN_RESIDUAL_TOL = 1e-9  # scaled by the ambient dimension
TRACE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MixResult:
    """Outcome of one 2x2 mixing step.

    The coefficients express w = sigma u + tau u'' and w' = sigma' u + tau' u''
    where u'' is u' with its phase rotated to make gamma = <u, u'> real and
    nonnegative.  sigma^2 = z_minus, the stable root of the mixing quadratic,
    and z_minus <= z_o always.
    """

    w: np.ndarray
    w_prime: np.ndarray
    sigma: float
    tau: float
    sigma_prime: float
    tau_prime: float
    z_minus: float
    z_o: float
    h: float
    alpha_coef: float
    gamma: float


def _sqrt_clamped(x: float, guard: float = 1e-9) -> float:
    if x < -guard:
        raise ValueError(f"mixing produced a negative square ({x:.3e})")
    return math.sqrt(max(x, 0.0))


def mix_two(eta1, eta2, u, u_prime, xi1, xi2, tol: float = 1e-12, check: bool = True) -> MixResult:
    """Rewrite eta1 u u* + eta2 u' u'* as xi1 w w* + xi2 w' w'*.

    Requires xi1 + xi2 = eta1 + eta2 and both xis between min(eta) and
    max(eta); u and u' are unit vectors with arbitrary overlap.
    """
    e1, e2, x1, x2 = float(eta1), float(eta2), float(xi1), float(xi2)
    for v in (e1, e2, x1, x2):
        if v < -tol:
            raise MajorizationError(f"weights must be nonnegative, got {v!r}")
    if abs((x1 + x2) - (e1 + e2)) > TRACE_TOL:
        raise MajorizationError(
            f"target weights {x1!r} + {x2!r} do not preserve the trace {e1 + e2!r}"
        )
    lo, hi = min(e1, e2), max(e1, e2)
    slack = max(tol, TRACE_TOL)
    if not (lo - slack <= x1 <= hi + slack and lo - slack <= x2 <= hi + slack):
        raise MajorizationError(
            f"targets ({x1!r}, {x2!r}) must lie between the sources ({e1!r}, {e2!r})"
        )
    u = unit_vector(u)
    up = unit_vector(u_prime)
    if u.shape != up.shape:
        raise DimensionError("mixing vectors must share a dimension")

    overlap = complex(np.vdot(u, up))
    gamma = min(abs(overlap), 1.0)
    up_rot = up * (overlap.conjugate() / abs(overlap)) if abs(overlap) > 0.0 else up

    if abs(x1 - e1) <= tol or abs(e1 - e2) <= tol:
        # targets coincide with sources (up to relabeling nothing moves)
        sigma, tau, sigma_p, tau_p = 1.0, 0.0, 0.0, 1.0
        w, wp = u, up_rot
        z_minus = z_o = 1.0
        h = alpha = 0.0
    elif abs(x2 - e1) <= tol:
        # targets are the sources swapped
        sigma, tau, sigma_p, tau_p = 0.0, 1.0, 1.0, 0.0
        w, wp = up_rot, u
        z_minus = z_o = 0.0
        h = alpha = 0.0
    else:
        if x1 <= tol or x2 <= tol:
            raise MajorizationError(
                f"vanishing target weight ({x1!r}, {x2!r}) needs a matching source weight"
            )
        # generic step: one real quadratic fixes every coefficient
        zo_over_e1 = (e1 - x2) / (x1 * (e1 - e2))
        z_o = e1 * zo_over_e1
        h = 4.0 * e1 * e2 * gamma * gamma / ((e1 - e2) * (e1 - e2))
        alpha = (e1 - e2) / (e1 - x2)
        disc = _sqrt_clamped(4.0 * (alpha - 1.0) * h + alpha * alpha * h * h)
        denom = 2.0 + alpha * h + disc
        z_minus = 2.0 * z_o / denom
        zm_over_e1 = 2.0 * zo_over_e1 / denom
        # the cross terms must carry the sign of e1 - e2 for w and w' to
        # come out unit vectors; the identity alone would allow either sign
        s = 1.0 if e1 > e2 else -1.0
        sigma = _sqrt_clamped(z_minus)
        tau = s * _sqrt_clamped(e2 * (1.0 / x1 - zm_over_e1))
        sigma_p = _sqrt_clamped((e1 - x1 * z_minus) / x2)
        tau_p = -s * _sqrt_clamped((x1 * e2 / x2) * zm_over_e1)
        w = sigma * u + tau * up_rot
        wp = sigma_p * u + tau_p * up_rot

    if check:
        for vec in (w, wp):
            drift = abs(float(np.linalg.norm(vec)) - 1.0)
            if drift > MIX_RESIDUAL_TOL:
                raise ValueError(f"mixed vector norm drifted by {drift:.3e}")
        R = (
            x1 * np.outer(w, w.conj())
            + x2 * np.outer(wp, wp.conj())
            - e1 * np.outer(u, u.conj())
            - e2 * np.outer(up, up.conj())
        )
        dev = float(np.max(np.abs(R)))
        if dev > MIX_RESIDUAL_TOL:
            raise ValueError(f"mixing identity residual {dev:.3e} exceeds tolerance")
    return MixResult(w, wp, sigma, tau, sigma_p, tau_p, z_minus, z_o, h, alpha, gamma)


def _coerce_terms(source_terms) -> list[RankOneTerm]:
    out = []
    for t in source_terms:
        if isinstance(t, RankOneTerm):
            out.append(RankOneTerm(float(t.weight), unit_vector(t.vector)))
        else:
            w, v = t
            out.append(RankOneTerm(float(w), unit_vector(v)))
    return out


def horn_decompose(source_terms, target_weights, tol: float = 1e-12, check: bool = True) -> RankOneDecomp:
    """Rewrite sum eta_i u_i u_i* with the prescribed weights.

    ``target_weights`` must be majorized by the source weights (zero-padding
    the shorter list); the result's terms carry exactly the given weights, in
    the given order, and sum to the same operator.
    """
    pool = _coerce_terms(source_terms)
    targets = [float(t) for t in target_weights]
    if any(t < 0.0 for t in targets):
        raise MajorizationError("target weights must be nonnegative")
    if not pool:
        raise DimensionError("need at least one source term")
    dim = len(pool[0].vector)
    verdict = majorizes(targets, [p.weight for p in pool], tol=max(tol, 1e-11))
    if not verdict.holds:
        raise MajorizationError(
            "source weights do not majorize the targets"
            + (f" (partial sums cross at position {verdict.failing_index})"
               if verdict.failing_index else f" (totals differ by {verdict.sum_gap:.3e})"),
            failing_index=verdict.failing_index,
        )

    anchor = pool[0].vector
    work = [[p.weight, p.vector] for p in pool if p.weight > tol]
    order = sorted(range(len(targets)), key=lambda i: (-targets[i], i))
    placed: list[RankOneTerm | None] = [None] * len(targets)

    for idx in order:
        t = targets[idx]
        if t <= tol:
            placed[idx] = RankOneTerm(t, anchor)
            continue
        hit = next((k for k, (w, _) in enumerate(work) if abs(w - t) <= tol), None)
        if hit is not None:
            placed[idx] = RankOneTerm(t, work[hit][1])
            del work[hit]
            continue
        above = [k for k, (w, _) in enumerate(work) if w >= t]
        below = [k for k, (w, _) in enumerate(work) if w < t]
        if not above:
            raise MajorizationError(
                f"no source weight reaches the target {t!r}; majorization bookkeeping broke"
            )
        ka = min(above, key=lambda k: work[k][0])
        if not below:
            # every pool weight exceeds the largest remaining target: peel
            # the target off the smallest entry along its own direction
            placed[idx] = RankOneTerm(t, work[ka][1])
            work[ka][0] -= t
            if work[ka][0] <= tol:
                del work[ka]
            continue
        kb = max(below, key=lambda k: work[k][0])
        a, ua = work[ka]
        b, ub = work[kb]
        res = mix_two(a, b, ua, ub, t, a + b - t, tol=tol, check=check)
        placed[idx] = RankOneTerm(t, res.w)
        for k in sorted((ka, kb), reverse=True):
            del work[k]
        if a + b - t > tol:
            work.append([a + b - t, res.w_prime])

    leftover = math.fsum(w for w, _ in work)
    if abs(leftover) > HORN_RESIDUAL_TOL * max(1, dim):
        raise MajorizationError(f"unconsumed source weight {leftover:.3e} after placement")

    decomp = RankOneDecomp(tuple(placed))
    if check:
        S = frame_operator(decomp.terms, dim=dim)
        A = frame_operator(pool, dim=dim)
        dev = float(np.max(np.abs(S - A)))
        if dev > HORN_RESIDUAL_TOL * max(1, dim):
            raise ValueError(f"reconstruction residual {dev:.3e} exceeds tolerance")
    return decomp


def schur_horn_matrix(eigenvalues, diagonal, tol: float = 1e-12) -> np.ndarray:
    """Hermitian matrix with the given spectrum and diagonal.

    The diagonal must be majorized by the eigenvalue list (zero-padding the
    shorter one).  Built by placing the diagonal weights against the spectral
    basis and taking the Gram matrix of the scaled placement vectors.
    """
    lam = [float(v) for v in eigenvalues]
    xi = [float(v) for v in diagonal]
    n = len(lam)
    if n == 0 or not xi:
        raise DimensionError("need at least one eigenvalue and one diagonal entry")
    basis = np.eye(n, dtype=complex)
    sources = [RankOneTerm(lam[i], basis[:, i]) for i in range(n)]
    decomp = horn_decompose(sources, xi, tol=tol)
    B = np.array([math.sqrt(max(t.weight, 0.0)) * t.vector.conj() for t in decomp.terms])
    return B @ B.conj().T
