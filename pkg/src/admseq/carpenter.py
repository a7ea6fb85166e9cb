"""Staged decomposition of projections into rank-one terms with prescribed weights.

Given a weight sequence xi passing the integrality test and an orthonormal
stream E_0, E_1, ..., these constructions write sum_i xi_i w_i w_i* equal to
the projection sum_j E_j E_j*, consuming the stream in stages.  Each stage is
a finite Horn placement against a majorant of the form (1, ..., 1, s..., r),
where fractional weights carry one boundary vector from stage to stage, or a
single 2x2 mix in the tail recursion.  Which staging applies is decided by how
the small entries mu (at most 1/2) and the defects lam = 1 - (large entries)
sum up; truncating at a stage budget leaves an explicit remainder term."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    KadisonError,
    PlanningError,
    TraceMismatchError,
)
from .horn import horn_decompose, mix_two
from .operators import RankOneDecomp, RankOneTerm, frame_operator
from .seqkit import (
    INT_SNAP,
    MajorizationVerdict,
    WeightSeq,
    kadison_check,
    majorizes,
    split_mu_lambda,
    strip_zeros_ones,
)
from .streams import VectorStream

INF = math.inf

CASE_FINITE_RANK = "finite-rank"
CASE_MU_DIVERGES = "mu-divergent"
CASE_LAMBDA_DIVERGES = "lambda-divergent"
CASE_BOTH_SUMMABLE = "both-summable"
CASE_M_FINITE = "mu-finite"

TRACE_MATCH_TOL = 1e-10
DEFAULT_STAGES = 10
DEFAULT_EXTEND_LIMIT = 10_000


@dataclass(frozen=True)
class CaseTag:
    """Which staged construction applies, with the split bookkeeping.

    ``k`` is the integer sum(lam) - sum(mu) when both sums are finite;
    ``M`` and ``N`` count the small entries and the defects (inf allowed).
    """

    tag: str
    k: int | None
    M: float
    N: float


@dataclass(frozen=True)
class BlockPlan:
    """One stage: Horn-place ``targets`` against the pooled ``sources``.

    ``sources`` lists (stream position, coefficient) pairs; coefficient 1
    consumes the vector outright, fractions carry boundary vectors between
    stages.  ``colinear`` terms are emitted directly along a single stream
    vector and bypass the Horn step."""

    targets: tuple[float, ...]
    sources: tuple[tuple[int, float], ...]
    colinear: tuple[tuple[int, float], ...] = ()


@dataclass(frozen=True)
class StageCertificate:
    """Per-stage evidence: what was consumed, the majorization that licensed
    the placement, and the reconstruction residual of the stage identity.
    2x2 steps also record their mixing coefficient and its proven cap."""

    stage: int
    consumed: tuple[tuple[int, float], ...]
    targets: tuple[float, ...]
    majorization: MajorizationVerdict
    residual: float
    sigma: float | None = None
    sigma_cap: float | None = None


def _snap_int(x: float, tol: float = INT_SNAP) -> int:
    n = round(x)
    if abs(x - n) > tol:
        raise PlanningError(f"expected an integer within {tol}, got {x!r}")
    return int(n)


def _core_total(sp) -> float:
    if sp.N == INF or sp.mu.total() == INF:
        return INF
    return sp.mu.total() + sp.N - sp.lam.total()


def classify_case(xi) -> CaseTag:
    """Decide which construction handles xi (0 and 1 entries set aside).

    Requires the integrality condition; the order of tests is: finite total
    core weight, divergent mu, divergent lam, both summable with infinitely
    many entries of each kind, and finally finitely many mu entries."""
    seq = xi if isinstance(xi, WeightSeq) else WeightSeq.finite(xi)
    rep = kadison_check(seq)
    if not rep.satisfied:
        raise KadisonError(
            f"weights fail the integrality test (a={rep.a!r}, b={rep.b!r})"
        )
    sp = split_mu_lambda(seq)
    mu_sum = sp.mu.total()
    lam_sum = sp.lam.total()
    k = _snap_int(lam_sum - mu_sum) if mu_sum < INF and lam_sum < INF else None
    if _core_total(sp) < INF:
        return CaseTag(CASE_FINITE_RANK, k, sp.M, sp.N)
    if mu_sum == INF:
        return CaseTag(CASE_MU_DIVERGES, None, sp.M, sp.N)
    if lam_sum == INF:
        return CaseTag(CASE_LAMBDA_DIVERGES, None, sp.M, sp.N)
    if sp.M == INF and sp.N == INF:
        return CaseTag(CASE_BOTH_SUMMABLE, k, sp.M, sp.N)
    return CaseTag(CASE_M_FINITE, k, sp.M, sp.N)


# -- the finite construction ------------------------------------------

def decompose_finite_rank(values, stream: VectorStream, tol: float = 1e-12):
    """Write a finite [0,1] weight list against exactly n = sum(values)
    orthonormal vectors: a Horn placement of the head against (1,...,1,r)
    and the remaining weights peeled along the last vector."""
    vals = [float(v) for v in values]
    if any(v < 0.0 or v > 1.0 for v in vals):
        raise PlanningError("finite-rank weights must lie in [0, 1]")
    total = math.fsum(vals)
    n = round(total)
    if abs(total - n) > TRACE_MATCH_TOL:
        raise TraceMismatchError(
            f"total weight {total!r} is not an integer, so no projection matches"
        )
    if stream.count is None:
        raise TraceMismatchError("finite total weight needs a finite stream")
    if stream.count != n:
        raise TraceMismatchError(
            f"total weight {n} but the stream provides {stream.count} vectors"
        )
    if n == 0:
        raise TraceMismatchError("cannot decompose against an empty stream")
    dim = stream.min_dim(n - 1)
    vectors = [stream.vector(j, dim) for j in range(n)]

    acc = 0.0
    m = 0
    for i, v in enumerate(vals):
        if acc + v < n - tol:
            acc += v
            m = i + 1
        else:
            break
    r = acc - (n - 1)  # in [0, 1) by maximality of m

    pool = [RankOneTerm(1.0, vectors[i]) for i in range(n - 1)]
    if r > tol:
        pool.append(RankOneTerm(r, vectors[n - 1]))
    head = horn_decompose(pool, vals[:m], tol=tol) if m else None
    terms = list(head.terms) if head else []
    terms += [RankOneTerm(v, vectors[n - 1]) for v in vals[m:]]

    consumed = tuple((stream.base_index(j), 1.0) for j in range(n))
    target_op = frame_operator([RankOneTerm(1.0, v) for v in vectors], dim=dim)
    residual = float(np.max(np.abs(frame_operator(terms, dim=dim) - target_op)))
    cert = StageCertificate(
        stage=0,
        consumed=consumed,
        targets=tuple(vals),
        majorization=majorizes(vals, [1.0] * n),
        residual=residual,
    )
    return tuple(terms), (cert,)


# -- staged planners ---------------------------------------------------

def _padded(seq: WeightSeq):
    yield from seq
    while True:  # only reached for the finite kind
        yield 0.0


def plan_mu_diverges(mu: WeightSeq, lam: WeightSeq, extend_limit: int = DEFAULT_EXTEND_LIMIT):
    """Stages for divergent mu: each consumes a run of mu entries plus one
    large entry (while lam lasts), against (1 - r_prev, 1, r_new); after lam
    is exhausted, mu-only runs against (1 - r_prev, r_new)."""
    mu_it = iter(mu)

    def take_run(need: float, stage: int) -> tuple[list[float], float]:
        run: list[float] = []
        run_sum = 0.0
        while run_sum < need - 1e-15:
            if len(run) >= extend_limit:
                raise PlanningError(
                    f"stage {stage} needs more than {extend_limit} small entries"
                )
            v = next(mu_it)
            run.append(v)
            run_sum += v
        return run, max(math.fsum(run) - need, 0.0)

    next_idx = 0
    r_prev = 0.0
    stage = 0
    for lam_val in lam:  # ends when the defects run out
        run, r_new = take_run(2.0 - r_prev - (1.0 - lam_val), stage)
        sources = [(next_idx, 1.0 - r_prev), (next_idx + 1, 1.0)]
        if r_new > 0.0:
            sources.append((next_idx + 2, r_new))
        yield BlockPlan(tuple(run) + (1.0 - lam_val,), tuple(sources))
        next_idx += 2
        r_prev = r_new
        stage += 1
    while True:  # lam exhausted: mu-only stages
        run, r_new = take_run(1.0 - r_prev, stage)
        sources = [(next_idx, 1.0 - r_prev)]
        if r_new > 0.0:
            sources.append((next_idx + 1, r_new))
        yield BlockPlan(tuple(run), tuple(sources))
        next_idx += 1
        r_prev = r_new
        stage += 1


def plan_lambda_diverges(
    mu: WeightSeq, lam: WeightSeq, extend_limit: int = DEFAULT_EXTEND_LIMIT
):
    """Stages for divergent lam with finitely many mu entries.

    The mu entries are first-fit packed into bins of capacity 1, each bin
    emitted along its own stream vector; the first stage places a long run
    of large entries against the bins' slack plus fresh vectors, and later
    stages carry only the boundary fraction."""
    if not mu.is_finite:
        raise PlanningError("this staging needs finitely many small entries")
    bins: list[list[float]] = []
    sums: list[float] = []
    for v in mu.values:
        for i, s in enumerate(sums):
            if s + v <= 1.0 + 1e-12:
                bins[i].append(v)
                sums[i] += v
                break
        else:
            bins.append([v])
            sums.append(v)
    K = len(bins)

    lam_it = iter(lam)
    stage = 0
    next_idx = K
    r_prev = 0.0
    while True:
        slacks = [1.0 - s for s in sums] if stage == 0 else ([1.0 - r_prev] if r_prev > 0.0 else [])
        kp = K if stage == 0 else (1 if r_prev > 0.0 else 0)
        threshold = 2.0 * kp + 1.0
        run: list[float] = []
        run_sum = 0.0
        while run_sum < threshold - 1e-15:
            if len(run) >= extend_limit:
                raise PlanningError(
                    f"stage {stage} needs more than {extend_limit} large entries"
                )
            v = next(lam_it)
            run.append(v)
            run_sum += v
        x = math.fsum(1.0 - v for v in run) - math.fsum(slacks)
        n_full = int(math.floor(x))
        r_new = x - n_full
        if n_full < kp + 1:
            raise PlanningError(f"stage {stage} cannot reach enough full vectors")
        if stage == 0:
            sources = [(k, 1.0 - sums[k]) for k in range(K) if 1.0 - sums[k] > 0.0]
            sources += [(K + i, 1.0) for i in range(n_full)]
            boundary = K + n_full
            colinear = tuple(
                (k, w) for k in range(K) for w in bins[k]
            )
        else:
            start = next_idx
            if r_prev > 0.0:
                sources = [(start, 1.0 - r_prev)]
                first_fresh = start + 1
            else:  # previous boundary vector was left untouched
                sources = []
                first_fresh = start
            sources += [(first_fresh + i, 1.0) for i in range(n_full)]
            boundary = first_fresh + n_full
            colinear = ()
        if r_new > 0.0:
            sources.append((boundary, r_new))
        yield BlockPlan(tuple(1.0 - v for v in run), tuple(sources), colinear)
        next_idx = boundary
        r_prev = r_new
        stage += 1


def plan_both_summable(
    mu: WeightSeq, lam: WeightSeq, extend_limit: int = DEFAULT_EXTEND_LIMIT
):
    """Stages for summable mu and lam with infinitely many entries of each.

    Stage boundaries n_j, m_j are chosen so the tail sums interlock:
    lam-tail(n_j+1) dominates mu-tail(m_j+1), making each carried fraction
    r_j = lam-tail - mu-tail land in [0, 1/2)."""
    k = _snap_int(lam.total() - mu.total())

    def lam_tail(n: int) -> float:  # entries counted from 1
        return lam.tail_sum(n)

    def mu_tail(m: int) -> float:
        return mu.tail_sum(m)

    n_j = max(k + 1, 1)
    guard = 0
    while lam_tail(n_j) >= 0.5:
        n_j += 1
        guard += 1
        if guard > extend_limit:
            raise PlanningError("could not find a starting boundary")
    m_j = 0
    while mu_tail(m_j) > lam_tail(n_j):
        m_j += 1
        if m_j > extend_limit:
            raise PlanningError("could not align the small-entry boundary")
    r_j = lam_tail(n_j) - mu_tail(m_j)
    targets = tuple(mu.head(m_j)) + tuple(1.0 - v for v in lam.head(n_j))
    sources = [(i, 1.0) for i in range(n_j - k)]
    if r_j > 0.0:
        sources.append((n_j - k, r_j))
    yield BlockPlan(targets, tuple(sources))

    boundary = n_j - k
    while True:
        n_next = n_j + 2
        guard = 0
        while lam_tail(n_next) > mu_tail(m_j):
            n_next += 1
            guard += 1
            if guard > extend_limit:
                raise PlanningError("could not advance the large-entry boundary")
        m_next = m_j + 1
        guard = 0
        while mu_tail(m_next) > lam_tail(n_next):
            m_next += 1
            guard += 1
            if guard > extend_limit:
                raise PlanningError("could not advance the small-entry boundary")
        r_next = lam_tail(n_next) - mu_tail(m_next)
        targets = tuple(mu.head(m_next)[m_j:]) + tuple(
            1.0 - v for v in lam.head(n_next)[n_j:]
        )
        fresh = n_next - n_j - 1
        sources = [(boundary, 1.0 - r_j)] if r_j > 0.0 else [(boundary, 1.0)]
        sources += [(boundary + 1 + i, 1.0) for i in range(fresh)]
        new_boundary = boundary + 1 + fresh
        if r_next > 0.0:
            sources.append((new_boundary, r_next))
        yield BlockPlan(targets, tuple(sources))
        n_j, m_j, r_j, boundary = n_next, m_next, r_next, new_boundary


# -- realizing plans against a stream ----------------------------------

def _max_position(plans) -> int:
    top = 0
    for p in plans:
        for pos, _ in p.sources:
            top = max(top, pos)
        for pos, _ in p.colinear:
            top = max(top, pos)
    return top


def realize_block_plans(
    plans,
    stream: VectorStream,
    dim: int | None = None,
    first_stage: int = 0,
    tol: float = 1e-12,
):
    """Carry out Horn placements for each plan, returning terms and
    certificates.  All vectors are materialized in a common dimension."""
    plans = list(plans)
    if not plans:
        return (), ()
    if dim is None:
        dim = stream.min_dim(_max_position(plans))
    terms: list[RankOneTerm] = []
    certs: list[StageCertificate] = []
    for i, plan in enumerate(plans):
        pool = [RankOneTerm(c, stream.vector(pos, dim)) for pos, c in plan.sources]
        stage_terms: list[RankOneTerm] = []
        if plan.targets:
            placed = horn_decompose(pool, plan.targets, tol=tol)
            stage_terms += list(placed.terms)
        stage_terms += [
            RankOneTerm(w, stream.vector(pos, dim)) for pos, w in plan.colinear
        ]
        consumed: dict[int, float] = {}
        for pos, c in plan.sources:
            consumed[pos] = consumed.get(pos, 0.0) + c
        for pos, w in plan.colinear:
            consumed[pos] = consumed.get(pos, 0.0) + w
        stage_op = frame_operator(stage_terms, dim=dim) if stage_terms else np.zeros((dim, dim))
        source_op = frame_operator(
            [RankOneTerm(c, stream.vector(pos, dim)) for pos, c in consumed.items()],
            dim=dim,
        ) if consumed else np.zeros((dim, dim))
        residual = float(np.max(np.abs(stage_op - source_op)))
        certs.append(
            StageCertificate(
                stage=first_stage + i,
                consumed=tuple(
                    (stream.base_index(pos), c) for pos, c in sorted(consumed.items())
                ),
                targets=plan.targets + tuple(w for _, w in plan.colinear),
                majorization=majorizes(plan.targets, [c for _, c in plan.sources]),
                residual=residual,
            )
        )
        terms.extend(stage_terms)
    return tuple(terms), tuple(certs)


# -- the tail recursion -------------------------------------------------

def keycase_recursion(
    lam: WeightSeq,
    stream: VectorStream,
    steps: int,
    dim: int | None = None,
    first_stage: int = 0,
    carry_vector=None,
    tol: float = 1e-12,
):
    """Decompose (1 - S(0)) E_0 E_0* + sum_{t>=1} E_t E_t* into weights
    1 - lam_t, one 2x2 mix per step, carrying a shrinking remainder.

    Requires sum(lam) < 1.  Returns the emitted terms, one certificate per
    step (with the mixing coefficient and its cap), and the final carry
    term (1 - S(steps)) x x*.
    """
    s_prev = lam.total()
    if not s_prev < 1.0:
        raise PlanningError(f"tail recursion needs total defect below 1, got {s_prev!r}")
    if steps < 0:
        raise PlanningError("step count must be nonnegative")
    if dim is None:
        dim = stream.min_dim(steps)
    carry = stream.vector(0, dim) if carry_vector is None else np.asarray(carry_vector, dtype=complex)
    if len(carry) != dim:
        raise DimensionError("carry vector does not match the working dimension")
    terms: list[RankOneTerm] = []
    certs: list[StageCertificate] = []
    lam_it = _padded(lam)
    for t in range(steps):
        lam_t = next(lam_it)
        s_next = lam.tail_sum(t + 1)
        fresh = stream.vector(t + 1, dim)
        res = mix_two(
            1.0 - s_prev, 1.0, carry, fresh, 1.0 - s_next, 1.0 - lam_t, tol=tol
        )
        step_op = (1.0 - lam_t) * np.outer(res.w_prime, res.w_prime.conj()) + (
            1.0 - s_next
        ) * np.outer(res.w, res.w.conj())
        source_op = (1.0 - s_prev) * np.outer(carry, carry.conj()) + np.outer(
            fresh, fresh.conj()
        )
        residual = float(np.max(np.abs(step_op - source_op)))
        cap = None
        if s_prev > 0.0 and s_next < 1.0:
            cap = (1.0 - s_prev) * s_next / (s_prev * (1.0 - s_next))
        certs.append(
            StageCertificate(
                stage=first_stage + t,
                consumed=((stream.base_index(t + 1), 1.0),),
                targets=(1.0 - lam_t,),
                majorization=majorizes(
                    [1.0 - s_next, 1.0 - lam_t], [1.0 - s_prev, 1.0]
                ),
                residual=residual,
                sigma=res.sigma,
                sigma_cap=None if cap is None else math.sqrt(max(cap, 0.0)),
            )
        )
        terms.append(RankOneTerm(1.0 - lam_t, res.w_prime))
        nrm = float(np.linalg.norm(res.w))
        carry = res.w / nrm if nrm > 0 else res.w
        s_prev = s_next
    return tuple(terms), tuple(certs), RankOneTerm(1.0 - s_prev, carry)


def decompose_m_finite(
    mu: WeightSeq,
    lam: WeightSeq,
    stream: VectorStream,
    stages: int,
    extend_limit: int = DEFAULT_EXTEND_LIMIT,
    tol: float = 1e-12,
):
    """Finitely many small entries, summable defects, infinitely many large
    entries: one Horn head block against (1,...,1, r), then the tail
    recursion on the dropped defect sequence starting from the boundary."""
    if not mu.is_finite:
        raise PlanningError("this staging needs finitely many small entries")
    k = _snap_int(lam.total() - mu.total())
    n = max(k + 2, 0)
    guard = 0
    while lam.tail_sum(n) >= 1.0:
        n += 1
        guard += 1
        if guard > extend_limit:
            raise PlanningError("could not find a head boundary with a small tail")
    r = lam.tail_sum(n)

    head_targets = tuple(mu.values) + tuple(1.0 - v for v in lam.head(n))
    sources = [(i, 1.0) for i in range(n - k)]
    if r > 0.0:
        sources.append((n - k, r))
    head_plan = BlockPlan(head_targets, tuple(sources))

    key_steps = max(stages - 1, 0)
    tail_stream = stream.drop(n - k)
    dim = max(
        stream.min_dim(n - k),
        tail_stream.min_dim(key_steps) if key_steps else tail_stream.min_dim(0),
    )
    head_terms, head_certs = realize_block_plans([head_plan], stream, dim=dim, tol=tol)
    tail_terms, tail_certs, carry = keycase_recursion(
        lam.drop(n),
        tail_stream,
        key_steps,
        dim=dim,
        first_stage=1,
        tol=tol,
    )
    return head_terms + tail_terms, head_certs + tail_certs, carry


# -- the orchestrator ---------------------------------------------------

def _boundary_remainder(plans, stream: VectorStream, dim: int):
    """After the last realized stage, the boundary vector still owes its
    unconsumed fraction; return it as a remainder term (empty when the
    boundary was consumed exactly)."""
    consumed: dict[int, float] = {}
    for p in plans:
        for pos, c in list(p.sources) + list(p.colinear):
            consumed[pos] = consumed.get(pos, 0.0) + c
    if not consumed:
        return ()
    top = max(consumed)
    short = 1.0 - consumed[top]
    if short <= 1e-15:
        return ()
    return (RankOneTerm(short, stream.vector(top, dim)),)


def carpenter_decompose(
    xi,
    stream: VectorStream,
    stages: int = DEFAULT_STAGES,
    extend_limit: int = DEFAULT_EXTEND_LIMIT,
    tol: float = 1e-12,
):
    """Decompose the stream's projection with the prescribed weights.

    Returns (decomposition, certificates, case tag).  The decomposition's
    ordinary terms carry exactly the requested weights; remainder terms
    record partially consumed boundary vectors of the truncated staging, so
    terms plus remainder reproduce the compression onto everything touched.
    """
    seq = xi if isinstance(xi, WeightSeq) else WeightSeq.finite(xi)
    tag = classify_case(seq)  # raises KadisonError when the test fails
    if stages < 1:
        raise PlanningError("need at least one stage")
    core, zeros, ones = strip_zeros_ones(seq)
    sp = split_mu_lambda(seq)
    core_total = _core_total(sp)
    finite_trace = core_total < INF and ones < INF

    if finite_trace:
        if seq.kind not in ("finite", "finitely-supported"):
            raise PlanningError(
                "finite total weight with infinite support is out of scope here"
            )
        terms, certs = decompose_finite_rank(seq.values, stream, tol=tol)
        return RankOneDecomp(terms), certs, tag

    if stream.count is not None:
        raise TraceMismatchError("infinite total weight needs an infinite stream")

    zero_terms: list[RankOneTerm] = []
    n_zero = int(zeros) if zeros < INF else stages
    ones_budget = stages if ones == INF else int(ones)

    terms: list[RankOneTerm] = []
    remainder: tuple[RankOneTerm, ...] = ()
    certs: tuple[StageCertificate, ...] = ()

    if ones == INF and core_total < INF:
        # finite core placed first, then ones sweep the rest of the stream
        if not core.is_finite:
            raise PlanningError(
                "finite core weight with infinite support is out of scope here"
            )
        m0 = _snap_int(core_total)
        ones_stream = stream.drop(m0)
        dim = ones_stream.min_dim(max(ones_budget - 1, 0))
        if m0:
            prefix = VectorStream.explicit(
                [stream.vector(j, dim) for j in range(m0)]
            )
            core_terms, certs = decompose_finite_rank(core.values, prefix, tol=tol)
            terms += list(core_terms)
        terms += [
            RankOneTerm(1.0, ones_stream.vector(j, dim)) for j in range(ones_budget)
        ]
    elif ones == INF:
        ones_stream = stream.thin(0, 2)
        core_stream = stream.thin(1, 2)
        core_terms, certs, remainder = _decompose_core(
            tag, sp, core_stream, stages, extend_limit, tol
        )
        dim = len(core_terms[0].vector) if core_terms else stream.min_dim(0)
        dim = max(dim, ones_stream.min_dim(max(ones_budget - 1, 0)))
        terms += [
            RankOneTerm(1.0, _pad(ones_stream.vector(j), dim)) for j in range(ones_budget)
        ]
        terms += [_pad_term(t, dim) for t in core_terms]
        remainder = tuple(_pad_term(t, dim) for t in remainder)
    else:
        core_stream = stream.drop(int(ones))
        core_terms, certs, remainder = _decompose_core(
            tag, sp, core_stream, stages, extend_limit, tol
        )
        dim = len(core_terms[0].vector) if core_terms else stream.min_dim(0)
        if ones:
            dim = max(dim, stream.min_dim(int(ones) - 1))
        terms += [RankOneTerm(1.0, stream.vector(j, dim)) for j in range(int(ones))]
        terms += [_pad_term(t, dim) for t in core_terms]
        remainder = tuple(_pad_term(t, dim) for t in remainder)

    if n_zero:
        anchor = terms[0].vector if terms else stream.vector(0, stream.min_dim(0))
        zero_terms = [RankOneTerm(0.0, anchor) for _ in range(n_zero)]
    return RankOneDecomp(tuple(zero_terms) + tuple(terms), remainder), certs, tag


def _pad(v: np.ndarray, dim: int) -> np.ndarray:
    if len(v) == dim:
        return v
    out = np.zeros(dim, dtype=complex)
    out[: len(v)] = v
    return out


def _pad_term(t: RankOneTerm, dim: int) -> RankOneTerm:
    return t if len(t.vector) == dim else RankOneTerm(t.weight, _pad(t.vector, dim))


def _decompose_core(tag, sp, stream, stages, extend_limit, tol):
    """Dispatch the stripped core to its staged construction."""
    if tag.tag == CASE_MU_DIVERGES:
        gen = plan_mu_diverges(sp.mu, sp.lam, extend_limit=extend_limit)
    elif tag.tag == CASE_LAMBDA_DIVERGES:
        gen = plan_lambda_diverges(sp.mu, sp.lam, extend_limit=extend_limit)
    elif tag.tag == CASE_BOTH_SUMMABLE:
        gen = plan_both_summable(sp.mu, sp.lam, extend_limit=extend_limit)
    elif tag.tag == CASE_M_FINITE:
        terms, certs, carry = decompose_m_finite(
            sp.mu, sp.lam, stream, stages, extend_limit=extend_limit, tol=tol
        )
        return terms, certs, (carry,)
    else:
        raise PlanningError(f"no staged construction for case {tag.tag!r}")
    plans = []
    for plan in gen:
        plans.append(plan)
        if len(plans) >= stages:
            break
    dim = stream.min_dim(_max_position(plans))
    terms, certs = realize_block_plans(plans, stream, dim=dim, tol=tol)
    return terms, certs, _boundary_remainder(plans, stream, dim)
