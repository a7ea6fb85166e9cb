import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admseq.errors import SequenceError
from admseq.seqkit import (
    WeightSeq,
    elem_check_ii,
    elem_eta_i,
    kadison_check,
    majorizes,
    rearrange_desc,
    seq_from_json,
    seq_to_json,
    split_mu_lambda,
    strip_zeros_ones,
    tail_sum,
)

INF = math.inf

unit_vals = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, width=64)
unit_lists = st.lists(unit_vals, min_size=0, max_size=8)


# -- construction and closed-form arithmetic --------------------------

def test_negative_entry_rejected():
    with pytest.raises(SequenceError):
        WeightSeq.finite([0.2, -0.1])


def test_geometric_head_then_tail_iteration():
    s = WeightSeq.geometric([0.9], 0.25, 0.5)
    assert s.head(4) == [0.9, 0.25, 0.125, 0.0625]


def test_geometric_zero_first_collapses():
    s = WeightSeq.geometric([0.3], 0.0, 0.5)
    assert s.kind == "finitely-supported"
    assert s.values == (0.3,)


def test_geometric_zero_ratio_collapses():
    s = WeightSeq.geometric([0.3], 0.5, 0.0)
    assert s.kind == "finitely-supported"
    assert s.values == (0.3, 0.5)


def test_geometric_total_closed_form():
    s = WeightSeq.geometric([], 0.25, 0.5)
    assert s.total() == pytest.approx(0.5, abs=1e-15)


def test_tail_sum_counts_entries_from_one():
    # sum from the 2nd entry on
    assert tail_sum(WeightSeq.finite([0.2, 0.3]), 2) == pytest.approx(0.3)


def test_tail_sum_geometric_exact():
    s = WeightSeq.geometric([], 0.25, 0.5)  # entries 2^-(j+1) for j = 1, 2, ...
    assert tail_sum(s, 1) == pytest.approx(0.5, abs=1e-15)
    assert tail_sum(s, 2) == pytest.approx(0.25, abs=1e-15)
    assert tail_sum(s, 5) == pytest.approx(2.0**-5, abs=1e-18)


def test_tail_sum_periodic_diverges():
    s = WeightSeq.periodic([0.1], [0.4, 0.9])
    assert s.total() == INF
    assert s.tail_sum(100) == INF


def test_one_minus_of_finitely_supported_is_periodic():
    s = WeightSeq.one_minus(WeightSeq.finitely_supported([0.2, 0.7]))
    assert s.kind == "periodic-tail"
    assert s.head(4) == pytest.approx([0.8, 0.3, 1.0, 1.0])


def test_one_minus_of_geometric_keeps_closed_form():
    s = WeightSeq.one_minus(WeightSeq.geometric([], 0.4, 0.6))
    assert s.kind == "one-minus"
    assert s.head(3) == pytest.approx([0.6, 0.76, 0.856])
    assert s.total() == INF


def test_one_minus_is_an_involution():
    inner = WeightSeq.geometric([0.5], 0.25, 0.5)
    assert WeightSeq.one_minus(WeightSeq.one_minus(inner)) == inner


def test_interleave_round_robin_with_exhaustion():
    s = WeightSeq.interleave(
        WeightSeq.finite([1.0, 2.0]),
        WeightSeq.finite([10.0, 20.0, 30.0, 40.0]),
    )
    assert s.kind == "finite"
    assert list(s.values) == [1.0, 10.0, 2.0, 20.0, 30.0, 40.0]


def test_interleave_totals_add():
    s = WeightSeq.interleave(
        WeightSeq.geometric([], 0.25, 0.5),
        WeightSeq.finite([0.3]),
    )
    assert s.total() == pytest.approx(0.8)
    assert s.head(5) == pytest.approx([0.25, 0.3, 0.125, 0.0625, 0.03125])


def test_drop_crosses_into_geometric_tail():
    s = WeightSeq.geometric([0.9, 0.8], 0.25, 0.5)
    d = s.drop(3)
    assert d.head(3) == pytest.approx([0.125, 0.0625, 0.03125])
    assert d.total() == pytest.approx(s.total() - (0.9 + 0.8 + 0.25))


def test_drop_rotates_periodic_block():
    s = WeightSeq.periodic([], [0.1, 0.2, 0.3])
    assert s.drop(4).head(4) == [0.2, 0.3, 0.1, 0.2]


def test_drop_interleave_preserves_remaining_multiset():
    s = WeightSeq.interleave(
        WeightSeq.finite([1.0, 2.0, 3.0]),
        WeightSeq.finitely_supported([10.0]),
    )
    # first four entries are 1, 10, 2, 0
    d = s.drop(4)
    assert d.total() == pytest.approx(3.0)


@given(unit_lists, st.integers(min_value=0, max_value=10))
def test_drop_matches_iteration(vals, n):
    s = WeightSeq.finitely_supported(vals)
    assert s.drop(n).head(6) == s.head(n + 6)[n:]


# -- serialization -----------------------------------------------------

def test_json_round_trip_all_kinds():
    seqs = [
        WeightSeq.finite([0.5, 0.25]),
        WeightSeq.finitely_supported([1.0, 0.5]),
        WeightSeq.geometric([0.9], 0.25, 0.5),
        WeightSeq.periodic([0.1], [0.4, 0.9]),
        WeightSeq.one_minus(WeightSeq.geometric([], 0.4, 0.6)),
        WeightSeq.interleave(
            WeightSeq.geometric([], 0.125, 0.5),
            WeightSeq.one_minus(WeightSeq.geometric([], 0.125, 0.5)),
        ),
    ]
    for s in seqs:
        blob = json.dumps(seq_to_json(s))
        assert seq_from_json(json.loads(blob)) == s


def test_json_accepts_decimal_strings():
    s = seq_from_json({"kind": "finite", "values": ["0.1", 0.2, "3e-1"]})
    assert s.values == (0.1, 0.2, 0.3)


def test_json_rejects_unknown_kind():
    with pytest.raises(SequenceError):
        seq_from_json({"kind": "arithmetic-tail", "values": []})


def test_json_rejects_missing_field():
    with pytest.raises(SequenceError):
        seq_from_json({"kind": "geometric-tail", "values": [], "tail_first": 0.5})


# -- majorization ------------------------------------------------------

def test_majorizes_basic_hold():
    v = majorizes([0.5, 0.5], [1.0, 0.0])
    assert v.holds
    assert v.failing_index is None
    assert v.sum_gap == pytest.approx(0.0)


def test_majorizes_reports_first_failing_partial_sum():
    v = majorizes([1.0, 0.0], [0.5, 0.5])
    assert not v.holds
    assert v.failing_index == 1


def test_majorizes_requires_equal_totals():
    v = majorizes([0.25, 0.25], [1.0])
    assert not v.holds
    assert v.failing_index is None
    assert v.sum_gap == pytest.approx(-0.5)


def test_majorizes_zero_pads_shorter_side():
    assert majorizes([0.5, 0.25, 0.25], [1.0]).holds
    assert majorizes([0.4, 0.3, 0.3], [0.5, 0.5]).holds


def test_rearrange_desc_sorts_and_keeps_multiset():
    s = rearrange_desc([0.2, 0.9, 0.2, 0.5])
    assert list(s.values) == [0.9, 0.5, 0.2, 0.2]


@given(unit_lists)
def test_majorization_is_reflexive(vals):
    assert majorizes(vals, vals).holds


@given(unit_lists)
def test_canonical_flat_majorant(vals):
    """Any [0,1] list is majorized by ones followed by the fractional rest."""
    eta = elem_eta_i(vals)
    assert majorizes(vals, eta).holds
    assert math.fsum(eta.values) == pytest.approx(math.fsum(vals), abs=1e-9)


def test_elem_eta_i_frozen_example():
    eta = elem_eta_i([0.6, 0.6, 0.3])
    assert list(eta.values) == pytest.approx([1.0, 0.5])


def test_elem_eta_i_integer_total_has_no_fraction():
    assert list(elem_eta_i([0.5, 0.5, 1.0]).values) == [1.0, 1.0]


def test_elem_check_ii_single_partial_sum():
    # total 1.4 = 0 + 0.8 + 0.6, check reduces to xi_1* <= 0.8
    assert elem_check_ii([0.7, 0.4, 0.3], 0.8, 0.6)
    assert not elem_check_ii([0.9, 0.3, 0.2], 0.8, 0.6)


def test_elem_check_ii_allows_leading_ones():
    assert elem_check_ii([1.0, 0.5, 0.3], 1.0, 0.8)


@given(unit_lists, st.floats(min_value=0.01, max_value=1.0), st.floats(min_value=0.01, max_value=1.0))
def test_elem_check_ii_agrees_with_majorizes(vals, x, y):
    r1, r2 = max(x, y), min(x, y)
    n = 2
    target = n + r1 + r2
    s = math.fsum(vals)
    if s <= 0:
        return
    scaled = [v * target / s for v in vals]
    if any(v > 1.0 for v in scaled):
        return
    eta = [1.0] * n + [r1, r2]
    assert elem_check_ii(scaled, r1, r2) == majorizes(scaled, eta).holds


# -- the Kadison test --------------------------------------------------

def test_kadison_frozen_small_example():
    rep = kadison_check([0.3, 0.9, 0.8])
    assert rep.a == pytest.approx(0.3)
    assert rep.b == pytest.approx(0.3)
    assert rep.satisfied
    assert rep.integer_gap == 0


def test_kadison_violating_example():
    rep = kadison_check([0.3, 0.3])
    assert not rep.satisfied
    assert rep.integer_gap is None


def test_kadison_divergent_side_always_passes():
    rep = kadison_check(WeightSeq.periodic([], [0.3]))
    assert rep.a == INF
    assert rep.satisfied


def test_kadison_geometric_exact_split():
    # entries 0.8, 0.4, 0.2, ...: a = 0.4/(1 - 0.5) = 0.8, b = 0.2
    rep = kadison_check(WeightSeq.geometric([], 0.8, 0.5))
    assert rep.a == pytest.approx(0.8, abs=1e-12)
    assert rep.b == pytest.approx(0.2, abs=1e-12)
    assert not rep.satisfied


def test_kadison_one_minus_geometric():
    # entries 1 - 0.8*0.5^k: the complement of the previous case
    rep = kadison_check(WeightSeq.one_minus(WeightSeq.geometric([], 0.8, 0.5)))
    assert rep.a == pytest.approx(0.2, abs=1e-12)
    assert rep.b == pytest.approx(0.8, abs=1e-12)
    assert not rep.satisfied


def test_kadison_rejects_entries_above_one():
    with pytest.raises(SequenceError):
        kadison_check([1.2])


def test_kadison_rejects_bad_threshold():
    with pytest.raises(SequenceError):
        kadison_check([0.5], alpha=1.0)


@given(unit_lists, st.floats(min_value=0.05, max_value=0.95))
def test_kadison_verdict_ignores_threshold(vals, alpha):
    assert kadison_check(vals, alpha=alpha).satisfied == kadison_check(vals).satisfied


@given(unit_lists)
def test_kadison_complement_symmetry(vals):
    direct = kadison_check(vals)
    flipped = kadison_check([1.0 - v for v in vals])
    assert direct.satisfied == flipped.satisfied


@given(unit_lists, st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
def test_kadison_padding_with_zeros_and_ones(vals, nz, no):
    padded = list(vals) + [0.0] * nz + [1.0] * no
    assert kadison_check(padded).satisfied == kadison_check(vals).satisfied


@settings(max_examples=200)
@given(unit_lists)
def test_kadison_matches_direct_sum_oracle(vals):
    rep = kadison_check(vals)
    a = math.fsum(v for v in vals if v <= 0.5)
    b = math.fsum(1.0 - v for v in vals if v > 0.5)
    assert rep.a == pytest.approx(a, abs=1e-12)
    assert rep.b == pytest.approx(b, abs=1e-12)
    assert rep.satisfied == (abs((a - b) - round(a - b)) <= 1e-9)


# -- splitting and stripping -------------------------------------------

def test_split_keeps_boundary_in_small_part():
    sp = split_mu_lambda([0.5, 0.7, 0.2, 1.0, 0.0])
    assert list(sp.mu.values) == [0.5, 0.2]
    assert list(sp.lam.values) == pytest.approx([0.3])
    assert sp.zeros_count == 1
    assert sp.ones_count == 1
    assert (sp.M, sp.N) == (2, 1)


def test_split_one_minus_geometric_gives_geometric_lam():
    xi = WeightSeq.one_minus(WeightSeq.geometric([], 0.4, 0.6))
    sp = split_mu_lambda(xi)
    assert sp.lam.kind == "geometric-tail"
    assert sp.lam.head(3) == pytest.approx([0.4, 0.24, 0.144])
    assert sp.M == 0
    assert sp.N == INF


def test_split_geometric_puts_large_head_in_lam():
    xi = WeightSeq.geometric([], 0.8, 0.5)
    sp = split_mu_lambda(xi)
    assert list(sp.lam.values) == pytest.approx([0.2])
    assert sp.mu.kind == "geometric-tail"
    assert sp.mu.total() == pytest.approx(0.8)


def test_split_periodic_block():
    xi = WeightSeq.periodic([], [0.4, 0.9])
    sp = split_mu_lambda(xi)
    assert sp.mu.total() == INF
    assert sp.lam.total() == INF
    assert sp.mu.head(2) == [0.4, 0.4]
    assert sp.lam.head(2) == pytest.approx([0.1, 0.1])


def test_strip_zeros_ones_counts():
    core, zeros, ones = strip_zeros_ones(WeightSeq.finite([0.0, 1.0, 0.5, 1.0]))
    assert list(core.values) == [0.5]
    assert zeros == 1
    assert ones == 2


def test_strip_finitely_supported_has_infinite_zeros():
    core, zeros, ones = strip_zeros_ones(WeightSeq.finitely_supported([0.5, 1.0]))
    assert list(core.values) == [0.5]
    assert zeros == INF
    assert ones == 1


def test_strip_one_minus_swaps_counts():
    inner = WeightSeq.geometric([1.0, 0.0], 0.4, 0.6)
    core, zeros, ones = strip_zeros_ones(WeightSeq.one_minus(inner))
    assert zeros == 1  # from the inner entry exactly 1
    assert ones == 1   # from the inner entry exactly 0
    assert core.head(2) == pytest.approx([0.6, 0.76])


@given(unit_lists)
def test_split_parts_recombine_total(vals):
    sp = split_mu_lambda(vals)
    rebuilt = sp.mu.total() + sum(1.0 - v for v in sp.lam.values) + sp.ones_count
    assert rebuilt == pytest.approx(math.fsum(vals), abs=1e-9)
