from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtdesc.chain_rewrite import (
    TARGET,
    ChainVector,
    CvOutcome,
    classify_outcome,
    dte_children,
    dtr_closure,
    dtr_parents,
    is_unrealizable,
    lemma_shape,
    normalize,
    parse,
    verify_min_triangle_theorem,
)
from dtdesc.errors import BudgetExceeded, NegativeEntry, ZeroInClosed


def _compositions(s):
    if s == 0:
        yield ()
        return
    for first in range(1, s + 1):
        for rest in _compositions(s - first):
            yield (first,) + rest


def all_vectors(max_sum):
    out = set()
    for s in range(1, max_sum + 1):
        for comp in _compositions(s):
            out.add(normalize(comp, closed=True))
            for breaks in product((False, True), repeat=len(comp) - 1):
                raw = []
                for x, b in zip(comp, breaks + (True,)):
                    raw.append(x)
                    if b:
                        raw.append(0)
                out.add(normalize(raw, closed=False))
    return sorted(out)


VECTORS = all_vectors(8)


def test_normalize_examples():
    assert parse("3,0,1,2,0,0,2,0") == parse("0,2,0,3,0,2,1,0")
    assert parse("3,0,1,2,0,0,2,0") == parse("3,0,1,2,0,2,0")
    assert normalize([3, 2, 3], closed=True) == normalize([2, 3, 3], closed=True)
    assert normalize([3, 3, 2], closed=True) == normalize([2, 3, 3], closed=True)


def test_normalize_errors():
    with pytest.raises(NegativeEntry):
        normalize([2, -1, 0], closed=False)
    with pytest.raises(ZeroInClosed):
        normalize([2, 0, 3], closed=True)


def test_parse_markers():
    assert parse("3,3").closed
    assert not parse("2,0").closed
    assert not parse("2,1o").closed
    assert parse("(9)*") == ChainVector((9,), True)


raw_open = st.lists(st.integers(0, 5), min_size=1, max_size=9)
raw_closed = st.lists(st.integers(1, 5), min_size=1, max_size=7)


@given(raw_open)
def test_open_normalize_idempotent_and_invariant(raw):
    cv = normalize(raw, closed=False)
    assert normalize(cv.entries, closed=False) == cv
    assert normalize(raw[::-1], closed=False) == cv
    assert cv.total == sum(raw)


@given(raw_closed, st.integers(0, 6))
def test_closed_normalize_rotation_reflection(raw, r):
    cv = normalize(raw, closed=True)
    r %= len(raw)
    assert normalize(raw[r:] + raw[:r], closed=True) == cv
    assert normalize(raw[::-1], closed=True) == cv
    assert normalize(cv.entries, closed=True) == cv


def test_expansion_changes_sum_by_at_most_one():
    for cv in VECTORS:
        for _, child in dte_children(cv):
            assert child.total - cv.total in (-1, 0, 1)


def test_expansion_and_reduction_are_inverse():
    for parent in VECTORS:
        for typ, child in dte_children(parent):
            assert (typ, parent) in dtr_parents(child)
    for child in VECTORS:
        for typ, parent in dtr_parents(child):
            assert (typ, child) in dte_children(parent)


def test_type_111_child():
    # (..., m+n+4, ...) -> (..., m, 3, n, ...)
    children = {c for t, c in dte_children(parse("9,0")) if t == (1, 1, 1)}
    assert parse("2,3,3,0") in children
    assert parse("5,3,0") in children


def test_closed_single_expansion():
    kids = dte_children(parse("9"))
    assert ((0, 0, 1), parse("10")) in kids
    assert ((0, 0, 0), parse("10")) in kids
    assert ((1, 1, 1), parse("5,3")) in kids


def test_closed_single_reduction():
    for n in range(4, 12):
        parents = dtr_parents(parse(str(n)))
        assert {p for _, p in parents} == {parse(str(n - 1))}


def test_parents_of_two_zero():
    parents = {p for _, p in dtr_parents(parse("2,0"))}
    assert {parse("2,1,0"), parse("2,0"), parse("0,1,1,0"), parse("1,0")} <= parents


def test_outcomes():
    assert classify_outcome(parse("1,0,1,0")) is CvOutcome.INVALID
    assert classify_outcome(parse("7")) is CvOutcome.CLOSED_SINGLE
    assert classify_outcome(parse("5,2")) is CvOutcome.UNREALIZABLE_LEMMA
    assert classify_outcome(parse("4,1,1")) is CvOutcome.UNREALIZABLE_LEMMA
    assert classify_outcome(parse("3,3")) is CvOutcome.CANDIDATE


def test_open_lemma_shapes_stay_candidates():
    # (2,1,0) is itself a starting vector of the minimum-triangle argument
    for text in ("2,1,0", "5,2,0", "3,1,1,0"):
        cv = parse(text)
        assert lemma_shape(cv) and not is_unrealizable(cv)
        assert classify_outcome(cv) is CvOutcome.CANDIDATE


def test_closure_from_target():
    res = dtr_closure(TARGET)
    assert res.reached_target and res.saturated


def test_closure_budget():
    with pytest.raises(BudgetExceeded):
        dtr_closure(parse("2,0"), max_sum=2)


@pytest.mark.parametrize("start", ["2,0", "2,1,0", "2,0,1,0", "3,0"])
def test_min_triangle_starts_cannot_reach_target(start):
    res = dtr_closure(parse(start), 12)
    assert res.saturated and not res.reached_target
    assert res.largest_sum <= 12
    cert = res.certificate()
    assert cert["start"] == str(parse(start))


def test_min_triangle_theorem():
    assert verify_min_triangle_theorem(12).passed


def test_descendant_vectors_reach_target(db12):
    starts = {r.chain_vector for n in range(9, 13) for r in db12.layer(n) if not r.one_zigzag}
    assert starts
    for cv in starts:
        assert dtr_closure(cv, 40).reached_target
