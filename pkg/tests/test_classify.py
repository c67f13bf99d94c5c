import json
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import specs
from idealgraph.classify import (
    c4_free_criterion,
    check_pendant_implies_star,
    check_regular_implies_complete,
    claw_criterion_reduced,
    classify_report,
    cn_free_criterion_reduced,
    consecutive_pair_structure,
    direct_sum_cycle_check,
    predict_complete,
    predict_triangle_free_shape,
)
from idealgraph.graph import build_intersection_graph, compute_properties, observed_shape
from idealgraph.rings import parse_ring_spec

FIELDS3 = "GF(2)xGF(3)xGF(5)"
FIELDS4 = "GF(2)xGF(3)xGF(5)xGF(7)"
FIELDS5 = "GF(2)xGF(3)xGF(5)xGF(7)xGF(11)"


@pytest.mark.parametrize("text,expected", [("Z16", True), ("vs(2,2)", False), ("GF(2)xGF(3)", False),
                                           ("Z4", True), ("Z12", False)])
def test_predict_complete(text, expected):
    assert predict_complete(text) is expected
    assert compute_properties(build_intersection_graph(text)).is_complete is expected


def test_regular_implies_complete_examples():
    e = check_regular_implies_complete("Z16")
    assert e.agree and not e.exempt
    assert check_regular_implies_complete("GF(2)xGF(3)").exempt
    assert check_regular_implies_complete("Z12").agree


@pytest.mark.parametrize("text,shape", [("GF(5)xGF(7)", "two_isolated"), ("vs(3,2)", "star"),
                                        ("Z8xZ8", "has_triangle"), ("GF(3)", "empty"), ("Z9", "single_vertex"),
                                        ("Z27", "edge")])
def test_triangle_free_shape(text, shape):
    assert predict_triangle_free_shape(text) == shape
    assert observed_shape(build_intersection_graph(text)) == shape


def test_pendant_examples():
    z12 = check_pendant_implies_star("Z12")
    assert z12.exempt and compute_properties(build_intersection_graph("Z12")).has_pendant
    vs = check_pendant_implies_star("vs(2,2)")
    assert vs.agree and not vs.exempt
    assert check_pendant_implies_star("Z16").agree


@pytest.mark.parametrize("text,predicted", [(FIELDS3, True), (FIELDS4, False), ("Z12", True)])
def test_c4_examples(text, predicted):
    e = c4_free_criterion(text)
    assert e.predicted is predicted and e.agree


def test_cn_examples():
    e = cn_free_criterion_reduced(FIELDS5, 5)
    assert e.agree and e.observed is False
    e = cn_free_criterion_reduced(FIELDS4, 5)
    assert e.agree and e.observed is True
    with pytest.raises(ValueError):
        cn_free_criterion_reduced("Z8xGF(2)", 5)
    with pytest.raises(ValueError):
        cn_free_criterion_reduced(FIELDS4, 4)


def test_claw_examples():
    e = claw_criterion_reduced(FIELDS4, 3)
    assert e.agree and e.predicted and e.observed
    e = claw_criterion_reduced(FIELDS3, 3)
    assert e.agree and not e.predicted and not e.observed
    e = claw_criterion_reduced(FIELDS3, 2)
    assert e.agree and e.predicted and e.observed
    with pytest.raises(ValueError):
        claw_criterion_reduced("Z12", 2)


# direct-sum cycle structure -------------------------------------------------

def _axes(text):
    spec = parse_ring_spec(text)
    return [spec.axis(i) for i in range(len(spec.blocks))]


def test_consecutive_pair_examples():
    fam = _axes(FIELDS4)
    sums = [{0, 1}, {1, 2}, {2, 3}, {3, 0}]
    assert consecutive_pair_structure(fam, sums)
    assert direct_sum_cycle_check(fam, sums) == {"predicate": True, "ordered": True, "as_set": True}
    bad = [{0, 1, 2}, {1, 2}, {2, 3}, {3, 0}]
    assert not consecutive_pair_structure(fam, bad)
    assert direct_sum_cycle_check(fam, bad)["as_set"] is False
    assert consecutive_pair_structure(_axes(FIELDS3), [{0, 1}, {1, 2}, {2, 0}])
    with pytest.raises(ValueError):
        consecutive_pair_structure(fam, [{0, 7}, {1, 2}, {2, 3}, {3, 0}])


def test_three_member_triangle_without_pair_structure():
    # with n = 3 any three distinct overlapping sums are pairwise adjacent, so a
    # triangle appears even when the sums are not consecutive pairs
    spec = parse_ring_spec(FIELDS4)
    fam = [spec.axis(i) for i in range(3)]
    out = direct_sum_cycle_check(fam, [{0, 1, 2}, {0, 1}, {0, 2}])
    assert out == {"predicate": False, "ordered": True, "as_set": True}


def _all_sum_choices(n):
    return [frozenset(c) for r in range(1, n + 1) for c in combinations(range(n), r)]


@pytest.mark.parametrize("n", [4, 5])
def test_pair_structure_equivalence_exhaustive(n):
    # every choice of n distinct proper sums over n field axes, ordered as given
    text = "x".join(f"GF({q})" for q in (2, 3, 5, 7, 11)[:n])
    fam = _axes(text)
    proper = [s for s in _all_sum_choices(n) if len(s) < n]
    checked = 0
    for combo in combinations(proper, n):
        out = direct_sum_cycle_check(fam, combo)
        as_set_pred = any(consecutive_pair_structure(fam, p) for p in permutations(combo))
        assert as_set_pred == out["as_set"], combo
        checked += 1
        if n == 5 and checked >= 1500:
            break


@given(st.permutations(range(4)), st.permutations(range(4)))
def test_pair_structure_relabel_invariant(members, positions):
    fam = _axes(FIELDS4)
    sums = [{0, 1}, {1, 2}, {2, 3}, {3, 0}]
    relabelled_fam = [fam[i] for i in members]
    inv = {old: new for new, old in enumerate(members)}
    relabelled = [{inv[i] for i in s} for s in sums]
    assert consecutive_pair_structure(relabelled_fam, relabelled)
    # reordering the sums cyclically keeps the structure; arbitrary reorder may not
    rotated = sums[1:] + sums[:1]
    assert consecutive_pair_structure(fam, rotated)


# reports -----------------------------------------------------------------

def test_z12_report():
    r = classify_report("Z12")
    assert r.exit_code == 0
    assert r.entry("pendant_implies_star").exempt
    assert r.entry("triangle_free_shape").observed == "has_triangle"
    assert r.entry("c4_free").agree
    h = r.entry("hamiltonian")
    assert h.predicted is False and h.observed is False and h.agree
    assert "triangle with a pendant" in h.note


def test_two_fields_report():
    r = classify_report("GF(2)xGF(3)")
    assert r.exit_code == 0
    assert r.entry("triangle_free_shape").observed == "two_isolated"
    assert r.entry("hamiltonian").agree


def test_vs_report_flags_discrepancy():
    r = classify_report("vs(2,2)")
    assert r.exit_code == 2
    assert r.entry("triangle_free_shape").observed == "star"
    h = r.entry("hamiltonian")
    assert h.disagrees and "theorem/oracle discrepancy" in h.note and "open question" in h.note


def test_report_json_schema():
    data = json.loads(classify_report("Z16").to_json())
    assert set(data) == {"spec", "entries"}
    for e in data["entries"]:
        assert {"name", "predicted", "observed", "agree", "exempt", "witness", "note"} <= set(e)


def test_reduced_report_has_reduced_entries():
    names = [e.name for e in classify_report(FIELDS4).entries]
    for n in ("c5_free", "c6_free", "claw2", "claw3", "claw4"):
        assert n in names


@given(specs)
def test_report_agrees_outside_open_question(spec):
    r = classify_report(spec)
    for e in r.disagreements:
        assert e.name == "hamiltonian" and "open question" in e.note
    assert any(b.kind == "VSLocal" for b in spec.blocks) or r.exit_code == 0
