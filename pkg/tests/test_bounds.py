from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import C5, E1, E5, K4, K5, catalog, graphs
from stingy.bounds import (
    BOUNDS,
    CATALOG,
    PROVEN,
    BoundVerdict,
    MissingInvariantError,
    evaluate_bound,
    evaluate_pair,
    slack_statistics,
)
from stingy.graph import encode_graph6
from stingy.harness import compute_record
from stingy.invariants import basic_record
from stingy.graph import complement


def verdict(g, bound_id):
    return evaluate_bound(encode_graph6(g), compute_record(g), bound_id)


def test_catalog_shape():
    assert len(CATALOG) == 14
    assert [b.id for b in CATALOG if b.conjecture] == ["REED"]
    assert "REED" not in PROVEN and len(PROVEN) == 13


def test_key_tight_on_c5():
    v = verdict(C5, "KEY")
    assert (v.lhs, v.rhs_value, v.slack) == (3, F(3), F(0))
    assert v.satisfied and v.tight and v.hypothesis_holds


def test_dc_third_tight_on_k4():
    v = verdict(K4, "DC_THIRD")
    assert v.hypothesis_holds and v.rhs_value == F(4) and v.tight


def test_single_vertex_key():
    v = verdict(E1, "KEY")
    assert v.lhs == 1 and v.rhs_value == F(5, 4) and v.satisfied and not v.tight


def test_vacuous_hypothesis():
    v = verdict(C5, "DC_THIRD")
    assert not v.hypothesis_holds and v.satisfied and not v.tight


def test_rhs_values_are_exact_fractions():
    rec = compute_record(C5)
    for b in CATALOG:
        v = evaluate_bound("Dhc", rec, b)
        assert isinstance(v.rhs_value, F) and isinstance(v.slack, F)


def test_reed_ceiling():
    # C5: ceil((2 + 2 + 1)/2) = 3
    assert verdict(C5, "REED").rhs_value == 3
    assert verdict(C5, "CHI_BIG_REED").rhs_value == F(5, 2)


def test_missing_invariant():
    rec = basic_record(C5)
    with pytest.raises(MissingInvariantError):
        evaluate_bound("Dhc", rec, "KEY")
    with pytest.raises(MissingInvariantError):
        evaluate_bound("Dhc", rec, "MAIN_RESULT")
    assert evaluate_bound("Dhc", rec, "REED").satisfied
    with pytest.raises(KeyError):
        evaluate_bound("Dhc", rec, "NOPE")


def test_pair_c5_both_tight():
    v = evaluate_pair("Dhc", basic_record(C5), basic_record(complement(C5)))
    assert v.satisfied and v.tight and v.detail == "both" and v.rhs_value == 3


def test_pair_k5_and_e5():
    v = evaluate_pair("D~{", basic_record(K5), basic_record(E5))
    assert v.satisfied and v.detail == "both"
    assert F(5, 4) + 3 + 1 == F(21, 4)
    assert evaluate_bound("D~{", compute_record(K5), "COR_HALF_MINUS").rhs_value == F(21, 4)
    w = evaluate_pair("D??", basic_record(E5), basic_record(K5))
    assert w.satisfied and w.detail == "both"


def test_pair_rejects_mismatched_records():
    with pytest.raises(ValueError):
        evaluate_pair("Dhc", basic_record(C5), basic_record(K4))


def _v(slack, bound="KEY", hyp=True, g6="x"):
    return BoundVerdict(bound, g6, hyp, 0, F(slack), not hyp or slack >= 0, F(slack), hyp and slack == 0)


def test_slack_statistics_examples():
    assert slack_statistics([]) == {}
    one = slack_statistics([_v(0)])["KEY"]
    assert one.min_slack == 0 and one.tight_count == 1
    two = slack_statistics([_v(F(1, 4)), _v(0, g6="y")])["KEY"]
    assert two.min_slack == 0 and two.tight_count == 1 and two.tight == ["y"]


def test_slack_statistics_counts_hits_and_violations():
    s = slack_statistics([_v(-1), _v(2, hyp=False), _v(1)])["KEY"]
    assert s.evaluated == 3 and s.hypothesis_hits == 2 and s.satisfied == 2
    assert s.min_slack == -1 and len(s.violations) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_verdict_invariants(g):
    rec = compute_record(g)
    for b in CATALOG:
        v = evaluate_bound(encode_graph6(g), rec, b)
        assert v.satisfied == (not v.hypothesis_holds or v.lhs <= v.rhs_value)
        assert v.slack == v.rhs_value - v.lhs
        if v.tight:
            assert v.satisfied and v.hypothesis_holds


def test_proof_path_implications():
    for g in catalog(7):
        rec = compute_record(g)
        first = F(rec.omega, 3) + F(2 * (rec.delta + 1), 3)
        if rec.has_doubly_critical_edge:
            assert rec.chi <= first
            assert evaluate_bound("", rec, "MAIN_DISJUNCT").satisfied
        elif rec.chi > first:
            assert rec.iota < 2
            assert rec.chi <= F(1 + rec.omega + rec.delta + rec.n + 2, 4)
        # two singleton classes are adjacent and form a doubly critical edge
        if rec.iota >= 2:
            assert rec.has_doubly_critical_edge


def test_bounds_table_lists_every_id():
    assert set(BOUNDS) == {
        "REED", "DC_THIRD", "CHI_BIG_REED", "ALPHA2_REED", "SMALLCLASS_REED", "IOTA_AVG",
        "RESPECTFUL_HALF", "KEY", "MAIN_DISJUNCT", "COR_HALF", "COR_HALF_MINUS", "MAIN_RESULT",
        "STINGY_REED", "EIGHTH_DISJUNCT",
    }
