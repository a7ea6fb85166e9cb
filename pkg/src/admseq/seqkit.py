"""Weight sequences with exact tail arithmetic, majorization, and the Kadison test.

Sequences are nonnegative and either finite or given in closed form (geometric
tail, periodic tail, complements and interleavings of those), so totals and
tail sums are computed exactly -- finite ones in closed form, divergent ones
certified as ``inf``.  Nothing here estimates a tail by partial summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import KadisonError, SequenceError

INF = math.inf

SUM_TOL = 1e-12        # absolute tolerance for equality of finite sums
PARTIAL_SLACK = 1e-12  # slack added to partial-sum inequalities
INT_SNAP = 1e-9        # window for snapping a near-integer to an integer

KIND_FINITE = "finite"
KIND_FINITELY_SUPPORTED = "finitely-supported"
KIND_GEOMETRIC = "geometric-tail"
KIND_PERIODIC = "periodic-tail"
KIND_ONE_MINUS = "one-minus"
KIND_INTERLEAVE = "interleave"

_LEAF_KINDS = (KIND_FINITE, KIND_FINITELY_SUPPORTED, KIND_GEOMETRIC, KIND_PERIODIC)


def _as_value(x) -> float:
    v = float(x)
    if math.isnan(v) or math.isinf(v):
        raise SequenceError(f"sequence entries must be finite reals, got {x!r}")
    if v < 0.0:
        raise SequenceError(f"sequence entries must be nonnegative, got {x!r}")
    return 0.0 if v == 0.0 else v


def _first_k_leq(first: float, ratio: float, x: float) -> int | None:
    """Smallest k >= 0 with first*ratio**k <= x, or None if no such k."""
    if first <= x:
        return 0
    if x <= 0.0:
        return None
    k = max(0, math.ceil(math.log(x / first) / math.log(ratio)))
    while first * ratio**k > x:
        k += 1
    while k > 0 and first * ratio ** (k - 1) <= x:
        k -= 1
    return k


def _first_k_lt(first: float, ratio: float, x: float) -> int | None:
    """Smallest k >= 0 with first*ratio**k < x, or None if no such k."""
    if first < x:
        return 0
    if x <= 0.0:
        return None
    k = max(0, math.ceil(math.log(x / first) / math.log(ratio)))
    while first * ratio**k >= x:
        k += 1
    while k > 0 and first * ratio ** (k - 1) < x:
        k -= 1
    return k


def _geom_sum(first: float, ratio: float, count: int | None = None) -> float:
    """Sum of first*ratio**k for k in [0, count), or the full tail if count is None."""
    if count is None:
        return first / (1.0 - ratio)
    return first * (1.0 - ratio**count) / (1.0 - ratio)


@dataclass(frozen=True)
class WeightSeq:
    """A nonnegative weight sequence, finite or in exact closed form.

    Use the classmethod constructors; they normalize degenerate forms (for
    instance a geometric tail with first term 0 collapses to the
    finitely-supported kind) so downstream arithmetic can rely on strict
    leaf invariants.
    """

    kind: str
    values: tuple[float, ...] = ()
    tail_first: float = 0.0
    tail_ratio: float = 0.0
    tail_block: tuple[float, ...] = ()
    parts: tuple["WeightSeq", ...] = ()

    # -- constructors -------------------------------------------------

    @classmethod
    def finite(cls, values) -> "WeightSeq":
        return cls(KIND_FINITE, values=tuple(_as_value(v) for v in values))

    @classmethod
    def finitely_supported(cls, values) -> "WeightSeq":
        """Infinite sequence equal to ``values`` then identically zero."""
        return cls(KIND_FINITELY_SUPPORTED, values=tuple(_as_value(v) for v in values))

    @classmethod
    def geometric(cls, values, tail_first, tail_ratio) -> "WeightSeq":
        """Explicit head followed by the tail first, first*ratio, first*ratio^2, ..."""
        head = tuple(_as_value(v) for v in values)
        f = _as_value(tail_first)
        q = float(tail_ratio)
        if not 0.0 <= q < 1.0:
            raise SequenceError(f"geometric tail ratio must lie in [0, 1), got {q!r}")
        if f == 0.0:
            return cls.finitely_supported(head)
        if q == 0.0:
            return cls.finitely_supported(head + (f,))
        return cls(KIND_GEOMETRIC, values=head, tail_first=f, tail_ratio=q)

    @classmethod
    def periodic(cls, values, tail_block) -> "WeightSeq":
        """Explicit head followed by the block repeated forever."""
        head = tuple(_as_value(v) for v in values)
        block = tuple(_as_value(v) for v in tail_block)
        if not block:
            raise SequenceError("periodic tail needs a nonempty block")
        if all(v == 0.0 for v in block):
            return cls.finitely_supported(head)
        return cls(KIND_PERIODIC, values=head, tail_block=block)

    @classmethod
    def one_minus(cls, seq: "WeightSeq") -> "WeightSeq":
        """Entrywise complement 1 - s of a sequence with entries in [0, 1]."""
        if not seq.entries_within_unit():
            raise SequenceError("one-minus needs entries in [0, 1]")
        if seq.kind == KIND_FINITE:
            return cls.finite(tuple(1.0 - v for v in seq.values))
        if seq.kind == KIND_FINITELY_SUPPORTED:
            return cls.periodic(tuple(1.0 - v for v in seq.values), (1.0,))
        if seq.kind == KIND_PERIODIC:
            return cls.periodic(
                tuple(1.0 - v for v in seq.values),
                tuple(1.0 - v for v in seq.tail_block),
            )
        if seq.kind == KIND_ONE_MINUS:
            return seq.parts[0]
        if seq.kind == KIND_INTERLEAVE:
            return cls.interleave(*(cls.one_minus(p) for p in seq.parts))
        return cls(KIND_ONE_MINUS, parts=(seq,))

    @classmethod
    def interleave(cls, *parts: "WeightSeq") -> "WeightSeq":
        """Round-robin interleaving; exhausted finite parts drop out of the cycle."""
        kept = [p for p in parts if not (p.kind == KIND_FINITE and not p.values)]
        if not kept:
            return cls.finite(())
        if len(kept) == 1:
            return kept[0]
        if all(p.kind == KIND_FINITE for p in kept):
            out: list[float] = []
            iters = [list(p.values) for p in kept]
            while iters:
                nxt = []
                for chunk in iters:
                    out.append(chunk.pop(0))
                    if chunk:
                        nxt.append(chunk)
                iters = nxt
            return cls.finite(out)
        return cls(KIND_INTERLEAVE, parts=tuple(kept))

    # -- basic structure ----------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == KIND_FINITE

    def length(self) -> int | None:
        """Number of entries for a finite sequence, None when infinite."""
        return len(self.values) if self.kind == KIND_FINITE else None

    def __iter__(self) -> Iterator[float]:
        if self.kind == KIND_FINITE:
            yield from self.values
        elif self.kind == KIND_FINITELY_SUPPORTED:
            yield from self.values
            while True:
                yield 0.0
        elif self.kind == KIND_GEOMETRIC:
            yield from self.values
            k = 0
            while True:
                yield self.tail_first * self.tail_ratio**k
                k += 1
        elif self.kind == KIND_PERIODIC:
            yield from self.values
            while True:
                yield from self.tail_block
        elif self.kind == KIND_ONE_MINUS:
            for v in self.parts[0]:
                yield 1.0 - v
        else:
            iters = [iter(p) for p in self.parts]
            lengths = [p.length() for p in self.parts]
            taken = [0] * len(iters)
            alive = list(range(len(iters)))
            while alive:
                nxt = []
                for i in alive:
                    yield next(iters[i])
                    taken[i] += 1
                    if lengths[i] is None or taken[i] < lengths[i]:
                        nxt.append(i)
                alive = nxt

    def head(self, n: int) -> list[float]:
        out = []
        for v in self:
            if len(out) >= n:
                break
            out.append(v)
        return out

    def head_sum(self, n: int) -> float:
        return math.fsum(self.head(n))

    def total(self) -> float:
        """Exact total: a float, or inf for a certified divergent sequence."""
        if self.kind in (KIND_FINITE, KIND_FINITELY_SUPPORTED):
            return math.fsum(self.values)
        if self.kind == KIND_GEOMETRIC:
            return math.fsum(self.values) + _geom_sum(self.tail_first, self.tail_ratio)
        if self.kind == KIND_PERIODIC:
            return INF  # nonzero block repeats forever
        if self.kind == KIND_ONE_MINUS:
            return INF  # inner entries decay to 0, so 1 - inner does not
        tot = 0.0
        for p in self.parts:
            t = p.total()
            if t == INF:
                return INF
            tot += t
        return tot

    def tail_sum(self, start: int) -> float:
        """Exact sum of the entries with 0-based index >= start."""
        if start < 0:
            raise SequenceError("tail start must be nonnegative")
        if self.kind in (KIND_FINITE, KIND_FINITELY_SUPPORTED):
            return math.fsum(self.values[start:])
        if self.kind == KIND_GEOMETRIC:
            n_head = len(self.values)
            if start <= n_head:
                return math.fsum(self.values[start:]) + _geom_sum(self.tail_first, self.tail_ratio)
            k = start - n_head
            return _geom_sum(self.tail_first * self.tail_ratio**k, self.tail_ratio)
        if self.kind == KIND_PERIODIC:
            return INF
        if self.kind == KIND_ONE_MINUS:
            return INF
        tot = self.total()
        if tot == INF:
            return INF
        return max(0.0, tot - self.head_sum(start))

    def drop(self, n: int) -> "WeightSeq":
        """The sequence with its first n entries removed."""
        if n <= 0:
            return self
        if self.kind == KIND_FINITE:
            return WeightSeq.finite(self.values[n:])
        if self.kind == KIND_FINITELY_SUPPORTED:
            return WeightSeq.finitely_supported(self.values[n:])
        if self.kind == KIND_GEOMETRIC:
            n_head = len(self.values)
            if n <= n_head:
                return WeightSeq.geometric(self.values[n:], self.tail_first, self.tail_ratio)
            k = n - n_head
            return WeightSeq.geometric((), self.tail_first * self.tail_ratio**k, self.tail_ratio)
        if self.kind == KIND_PERIODIC:
            n_head = len(self.values)
            if n <= n_head:
                return WeightSeq.periodic(self.values[n:], self.tail_block)
            off = (n - n_head) % len(self.tail_block)
            return WeightSeq.periodic((), self.tail_block[off:] + self.tail_block[:off])
        if self.kind == KIND_ONE_MINUS:
            return WeightSeq.one_minus(self.parts[0].drop(n))
        # interleave: walk n round-robin steps counting pops per part, then
        # restart the cycle on the reduced parts (a valid reordering of the rest)
        lengths = [p.length() for p in self.parts]
        taken = [0] * len(self.parts)
        alive = list(range(len(self.parts)))
        seen = 0
        while alive and seen < n:
            nxt = []
            for i in alive:
                if seen < n:
                    taken[i] += 1
                    seen += 1
                if lengths[i] is None or taken[i] < lengths[i]:
                    nxt.append(i)
            alive = nxt
        return WeightSeq.interleave(*(p.drop(t) for p, t in zip(self.parts, taken)))

    def entries_within_unit(self, tol: float = 0.0) -> bool:
        """Whether every entry is <= 1 + tol (entries are nonnegative by construction)."""
        lim = 1.0 + tol
        if self.kind in (KIND_FINITE, KIND_FINITELY_SUPPORTED):
            return all(v <= lim for v in self.values)
        if self.kind == KIND_GEOMETRIC:
            return all(v <= lim for v in self.values) and self.tail_first <= lim
        if self.kind == KIND_PERIODIC:
            return all(v <= lim for v in self.values) and all(v <= lim for v in self.tail_block)
        return all(p.entries_within_unit(tol) for p in self.parts)


# -- serialization ----------------------------------------------------

def _real_from_json(x) -> float:
    if isinstance(x, str):
        try:
            return float(x)
        except ValueError as exc:
            raise SequenceError(f"bad decimal string {x!r}") from exc
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise SequenceError(f"expected a number or decimal string, got {x!r}")


def seq_to_json(seq: WeightSeq) -> dict:
    if seq.kind in (KIND_FINITE, KIND_FINITELY_SUPPORTED):
        return {"kind": seq.kind, "values": list(seq.values)}
    if seq.kind == KIND_GEOMETRIC:
        return {
            "kind": seq.kind,
            "values": list(seq.values),
            "tail_first": seq.tail_first,
            "tail_ratio": seq.tail_ratio,
        }
    if seq.kind == KIND_PERIODIC:
        return {"kind": seq.kind, "values": list(seq.values), "tail_block": list(seq.tail_block)}
    if seq.kind == KIND_ONE_MINUS:
        return {"kind": seq.kind, "of": seq_to_json(seq.parts[0])}
    return {"kind": seq.kind, "parts": [seq_to_json(p) for p in seq.parts]}


def seq_from_json(obj) -> WeightSeq:
    if not isinstance(obj, dict):
        raise SequenceError(f"sequence JSON must be an object, got {type(obj).__name__}")
    kind = obj.get("kind")
    try:
        if kind == KIND_FINITE:
            return WeightSeq.finite(_real_from_json(v) for v in obj["values"])
        if kind == KIND_FINITELY_SUPPORTED:
            return WeightSeq.finitely_supported(_real_from_json(v) for v in obj["values"])
        if kind == KIND_GEOMETRIC:
            return WeightSeq.geometric(
                tuple(_real_from_json(v) for v in obj.get("values", [])),
                _real_from_json(obj["tail_first"]),
                _real_from_json(obj["tail_ratio"]),
            )
        if kind == KIND_PERIODIC:
            return WeightSeq.periodic(
                tuple(_real_from_json(v) for v in obj.get("values", [])),
                tuple(_real_from_json(v) for v in obj["tail_block"]),
            )
        if kind == KIND_ONE_MINUS:
            return WeightSeq.one_minus(seq_from_json(obj["of"]))
        if kind == KIND_INTERLEAVE:
            return WeightSeq.interleave(*(seq_from_json(p) for p in obj["parts"]))
    except KeyError as exc:
        raise SequenceError(f"sequence JSON missing field {exc}") from exc
    raise SequenceError(f"unknown sequence kind {kind!r}")


# -- rearrangement and majorization ----------------------------------

def _finite_values(xi) -> list[float]:
    if isinstance(xi, WeightSeq):
        if not xi.is_finite:
            raise SequenceError("operation requires a finite sequence")
        return list(xi.values)
    return [_as_value(v) for v in xi]


def rearrange_desc(xi) -> WeightSeq:
    """Non-increasing rearrangement of a finite sequence (stable on ties)."""
    vals = _finite_values(xi)
    order = sorted(range(len(vals)), key=lambda i: (-vals[i], i))
    return WeightSeq.finite(vals[i] for i in order)


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of a majorization test.

    ``failing_index`` is the 1-based index k of the first violated partial-sum
    inequality, or None; ``sum_gap`` is sum(xi) - sum(eta).
    """

    holds: bool
    failing_index: int | None
    sum_gap: float


def majorizes(xi, eta, tol: float = SUM_TOL) -> MajorizationVerdict:
    """Does eta majorize xi?  Zero-pads to common length; totals must agree.

    Partial sums of the non-increasing rearrangements are compared with
    ``tol`` slack, and the totals must match within ``tol``.
    """
    a = _finite_values(xi)
    b = _finite_values(eta)
    n = max(len(a), len(b))
    a = sorted(a + [0.0] * (n - len(a)), reverse=True)
    b = sorted(b + [0.0] * (n - len(b)), reverse=True)
    sum_gap = math.fsum(a) - math.fsum(b)
    ca = 0.0
    cb = 0.0
    for k in range(n):
        ca += a[k]
        cb += b[k]
        if ca > cb + tol:
            return MajorizationVerdict(False, k + 1, sum_gap)
    if abs(sum_gap) > tol:
        return MajorizationVerdict(False, None, sum_gap)
    return MajorizationVerdict(True, None, sum_gap)


# -- the Kadison integrality test ------------------------------------

@dataclass(frozen=True)
class KadisonReport:
    """Sub-threshold mass ``a``, super-threshold defect ``b``, and the verdict.

    ``a`` and ``b`` are exact (closed form) or certified infinite.  The
    condition holds when a + b is infinite or a - b is an integer;
    ``integer_gap`` carries that integer when it exists.
    """

    a: float
    b: float
    alpha: float
    satisfied: bool
    integer_gap: int | None


def _require_unit_entries(seq: WeightSeq) -> None:
    if not seq.entries_within_unit():
        raise SequenceError("entries must lie in [0, 1]")


def _kadison_ab(seq: WeightSeq, alpha: float) -> tuple[float, float]:
    """Exact (a, b) at threshold alpha: a = sum of entries <= alpha,
    b = sum of (1 - entry) over entries > alpha."""
    a = 0.0
    b = 0.0

    def head(values):
        nonlocal a, b
        for v in values:
            if v <= alpha:
                a += v
            else:
                b += 1.0 - v

    if seq.kind in (KIND_FINITE, KIND_FINITELY_SUPPORTED):
        head(seq.values)
        return a, b
    if seq.kind == KIND_GEOMETRIC:
        head(seq.values)
        f, q = seq.tail_first, seq.tail_ratio
        k0 = _first_k_leq(f, q, alpha)
        if k0 is None:  # alpha <= 0: every tail entry exceeds it and b diverges
            return a, INF
        b += k0 - _geom_sum(f, q, k0)
        a += _geom_sum(f * q**k0, q)
        return a, b
    if seq.kind == KIND_ONE_MINUS:
        inner = seq.parts[0]  # geometric leaf; entries here are 1 - f*q^k -> 1
        head(1.0 - v for v in inner.values)
        f, q = inner.tail_first, inner.tail_ratio
        k1 = _first_k_lt(f, q, 1.0 - alpha)  # beyond k1 the entries exceed alpha
        if k1 is None:  # alpha >= 1: infinitely many entries <= alpha
            return INF, b
        a += k1 - _geom_sum(f, q, k1)
        b += _geom_sum(f * q**k1, q)
        return a, b
    if seq.kind == KIND_PERIODIC:
        head(seq.values)
        for v in seq.tail_block:
            if v == 0.0:
                continue
            if v <= alpha:
                a = INF
            elif v < 1.0:
                b = INF
        return a, b
    for p in seq.parts:
        pa, pb = _kadison_ab(p, alpha)
        a += pa
        b += pb
    return a, b


def kadison_check(xi, alpha: float = 0.5, tol: float = INT_SNAP) -> KadisonReport:
    """Integrality test deciding membership of xi in a diagonal of projections.

    Satisfied iff a + b diverges or a - b is an integer (within ``tol``).
    The verdict does not depend on alpha in (0, 1); the integer may.
    """
    if isinstance(xi, WeightSeq):
        seq = xi
    else:
        seq = WeightSeq.finite(xi)
    if not 0.0 < alpha < 1.0:
        raise SequenceError(f"threshold must lie in (0, 1), got {alpha!r}")
    _require_unit_entries(seq)
    a, b = _kadison_ab(seq, alpha)
    if math.isinf(a) or math.isinf(b):
        return KadisonReport(a, b, alpha, True, None)
    gap = a - b
    near = round(gap)
    if abs(gap - near) <= tol:
        return KadisonReport(a, b, alpha, True, int(near))
    return KadisonReport(a, b, alpha, False, None)


# -- splitting into small and large parts -----------------------------

@dataclass(frozen=True)
class SplitSeq:
    """Split of a weight sequence into mu (entries in (0, 1/2], boundary
    included) and lam (1 - entry for entries in (1/2, 1)), with counts of
    exact zeros and ones.  M and N are the lengths of mu and lam (inf when
    infinite)."""

    mu: WeightSeq
    lam: WeightSeq
    zeros_count: float
    ones_count: float
    M: float
    N: float


class _SplitAcc:
    def __init__(self):
        self.mu_values: list[float] = []
        self.mu_segs: list[WeightSeq] = []
        self.lam_values: list[float] = []
        self.lam_segs: list[WeightSeq] = []
        self.zeros: float = 0
        self.ones: float = 0

    def add_value(self, v: float) -> None:
        if v == 0.0:
            self.zeros += 1
        elif v == 1.0:
            self.ones += 1
        elif v <= 0.5:
            self.mu_values.append(v)
        else:
            self.lam_values.append(1.0 - v)


def _split_into(seq: WeightSeq, acc: _SplitAcc) -> None:
    if seq.kind == KIND_FINITE:
        for v in seq.values:
            acc.add_value(v)
    elif seq.kind == KIND_FINITELY_SUPPORTED:
        for v in seq.values:
            acc.add_value(v)
        acc.zeros = INF
    elif seq.kind == KIND_GEOMETRIC:
        for v in seq.values:
            acc.add_value(v)
        f, q = seq.tail_first, seq.tail_ratio
        k0 = _first_k_leq(f, q, 0.5)  # exists: tail decays to 0
        for k in range(k0):
            acc.add_value(f * q**k)
        acc.mu_segs.append(WeightSeq.geometric((), f * q**k0, q))
    elif seq.kind == KIND_ONE_MINUS:
        inner = seq.parts[0]
        for v in inner.values:
            acc.add_value(1.0 - v)
        f, q = inner.tail_first, inner.tail_ratio
        k1 = _first_k_lt(f, q, 0.5)  # from k1 on, 1 - f*q^k > 1/2
        for k in range(k1):
            acc.add_value(1.0 - f * q**k)
        acc.lam_segs.append(WeightSeq.geometric((), f * q**k1, q))
    elif seq.kind == KIND_PERIODIC:
        for v in seq.values:
            acc.add_value(v)
        mu_block = []
        lam_block = []
        for v in seq.tail_block:
            if v == 0.0:
                acc.zeros = INF
            elif v == 1.0:
                acc.ones = INF
            elif v <= 0.5:
                mu_block.append(v)
            else:
                lam_block.append(1.0 - v)
        if mu_block:
            acc.mu_segs.append(WeightSeq.periodic((), mu_block))
        if lam_block:
            acc.lam_segs.append(WeightSeq.periodic((), lam_block))
    else:
        for p in seq.parts:
            _split_into(p, acc)


def _combine(head: list[float], segs: list[WeightSeq]) -> WeightSeq:
    if not segs:
        return WeightSeq.finite(head)
    if len(segs) == 1:
        s = segs[0]
        if s.kind == KIND_GEOMETRIC and not s.values:
            return WeightSeq.geometric(head, s.tail_first, s.tail_ratio)
        if s.kind == KIND_PERIODIC and not s.values:
            return WeightSeq.periodic(head, s.tail_block)
    parts = ([WeightSeq.finite(head)] if head else []) + segs
    return WeightSeq.interleave(*parts)


def split_mu_lambda(xi) -> SplitSeq:
    """Split xi into the small part mu and the complement-of-large part lam.

    Entries exactly 0 or 1 are stripped first and only counted; 1/2 lands
    in mu.  Order inside mu and lam follows the order entries appear, which
    is all downstream planners depend on.
    """
    seq = xi if isinstance(xi, WeightSeq) else WeightSeq.finite(xi)
    _require_unit_entries(seq)
    acc = _SplitAcc()
    _split_into(seq, acc)
    mu = _combine(acc.mu_values, acc.mu_segs)
    lam = _combine(acc.lam_values, acc.lam_segs)
    m = mu.length()
    n = lam.length()
    return SplitSeq(
        mu=mu,
        lam=lam,
        zeros_count=acc.zeros,
        ones_count=acc.ones,
        M=INF if m is None else m,
        N=INF if n is None else n,
    )


def strip_zeros_ones(xi: WeightSeq) -> tuple[WeightSeq, float, float]:
    """Remove entries exactly 0 or 1, returning (core, zero count, one count).

    The core preserves the multiset (and relative order up to closed-form
    regrouping) of the remaining entries, all strictly inside (0, 1).
    """
    seq = xi if isinstance(xi, WeightSeq) else WeightSeq.finite(xi)
    _require_unit_entries(seq)
    if seq.kind in (KIND_FINITE, KIND_FINITELY_SUPPORTED):
        kept = tuple(v for v in seq.values if 0.0 < v < 1.0)
        zeros = seq.values.count(0.0) + (INF if seq.kind == KIND_FINITELY_SUPPORTED else 0)
        ones = seq.values.count(1.0)
        if seq.kind == KIND_FINITE:
            return WeightSeq.finite(kept), zeros, ones
        return WeightSeq.finite(kept), INF, ones
    if seq.kind == KIND_GEOMETRIC:
        kept = tuple(v for v in seq.values if 0.0 < v < 1.0)
        zeros = seq.values.count(0.0)
        ones = seq.values.count(1.0)
        f, q = seq.tail_first, seq.tail_ratio
        if f == 1.0:  # only the leading tail entry can hit 1
            ones += 1
            f = f * q
        return WeightSeq.geometric(kept, f, q), zeros, ones
    if seq.kind == KIND_ONE_MINUS:
        core, zeros, ones = strip_zeros_ones(seq.parts[0])
        return WeightSeq.one_minus(core), ones, zeros
    if seq.kind == KIND_PERIODIC:
        kept = tuple(v for v in seq.values if 0.0 < v < 1.0)
        zeros = seq.values.count(0.0)
        ones = seq.values.count(1.0)
        block = tuple(v for v in seq.tail_block if 0.0 < v < 1.0)
        if 0.0 in seq.tail_block:
            zeros = INF
        if 1.0 in seq.tail_block:
            ones = INF
        if block:
            return WeightSeq.periodic(kept, block), zeros, ones
        return WeightSeq.finite(kept), zeros, ones
    cores = []
    zeros: float = 0
    ones: float = 0
    for p in seq.parts:
        c, z, o = strip_zeros_ones(p)
        zeros += z
        ones += o
        cores.append(c)
    return WeightSeq.interleave(*cores), zeros, ones


# -- the two elementary majorization facts ----------------------------

def elem_eta_i(xi) -> WeightSeq:
    """The canonical majorant (1, ..., 1, r) of a finite [0,1]-sequence.

    With total N + r, 0 <= r < 1, returns N ones followed by r (omitted
    when r = 0); the input is always majorized by it.
    """
    vals = _finite_values(xi)
    if any(v > 1.0 for v in vals):
        raise SequenceError("entries must lie in [0, 1]")
    s = math.fsum(vals)
    n = int(math.floor(s))
    r = s - n  # exact: n <= s < n + 1
    eta = (1.0,) * n + ((r,) if r > 0.0 else ())
    return WeightSeq.finite(eta)


def elem_check_ii(xi, r1: float, r2: float, tol: float = PARTIAL_SLACK) -> bool:
    """Exact test for xi majorized by (1, ..., 1, r1, r2).

    Requires 0 < r2 <= r1 <= 1 and total(xi) = N + r1 + r2 for an integer
    N >= 0; the relation reduces to a single partial-sum inequality at N+1.
    """
    vals = _finite_values(xi)
    if any(v > 1.0 for v in vals):
        raise SequenceError("entries must lie in [0, 1]")
    if not 0.0 < r2 <= r1 <= 1.0:
        raise SequenceError(f"need 0 < r2 <= r1 <= 1, got r1={r1!r} r2={r2!r}")
    s = math.fsum(vals)
    n_float = s - r1 - r2
    n = round(n_float)
    if n < 0 or abs(n_float - n) > INT_SNAP:
        raise SequenceError(f"total {s!r} minus r1+r2 is not a nonnegative integer")
    top = sorted(vals, reverse=True)[: n + 1]
    return math.fsum(top) <= n + r1 + tol


def tail_sum(xi: WeightSeq, n: int) -> float:
    """Sum of the entries from the n-th term on, counting entries from 1."""
    if n < 1:
        raise SequenceError("tail index counts entries from 1")
    seq = xi if isinstance(xi, WeightSeq) else WeightSeq.finite(xi)
    return seq.tail_sum(n - 1)
