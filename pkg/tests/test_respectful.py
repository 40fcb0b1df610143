import pytest

from conftest import C5, C6, K4, catalog
from stingy.coloring import iter_optimal_colorings
from stingy.graph import bits, from_edge_list
from stingy.invariants import GuardExceeded, chromatic_number
from stingy.respectful import (
    PartialColoring,
    independent_sets_at_least,
    is_r_greedy,
    is_respectful,
    minimal_remainder_respectful,
    oracle_minimal_remainder,
)


def remainder_via_colorings(g, r):
    """A family is respectful iff it is part of an optimal coloring, so the
    minimal remainder is n minus the most vertices an optimal coloring puts
    into classes of order >= r."""
    return g.n - max(sum(len(c) for c in col.classes if len(c) >= r) for col in iter_optimal_colorings(g))


def test_r_greedy_examples():
    assert is_r_greedy(PartialColoring(C6), 3)
    assert is_r_greedy(PartialColoring(C6, [[0, 2, 4]]), 3)
    assert not is_r_greedy(PartialColoring(C5, [[0, 2]]), 3)


def test_respectful_examples():
    assert is_respectful(K4, PartialColoring(K4))
    assert is_respectful(C6, PartialColoring(C6, [[0, 2, 4]]))
    # C5 - {0, 2} is an edge plus an isolated vertex, chi 2 = 3 - 1
    assert is_respectful(C5, PartialColoring(C5, [[0, 2]]))
    # C6 - {0, 3} is two disjoint edges, chi 2 != 2 - 1
    assert not is_respectful(C6, PartialColoring(C6, [[0, 3]]))
    with pytest.raises(ValueError):
        is_respectful(C5, PartialColoring(C6, [[0, 2, 4]]))


def test_partial_coloring_validation():
    with pytest.raises(ValueError):
        PartialColoring(C5, [[0, 1]])
    with pytest.raises(ValueError):
        PartialColoring(C5, [[0, 2], [2, 4]])


def test_minimal_remainder_examples():
    rep = minimal_remainder_respectful(K4, 3)
    assert rep.partial.classes == () and rep.remainder_order == 4
    rep = minimal_remainder_respectful(C6, 3)
    assert rep.partial.classes == ((0, 2, 4), (1, 3, 5)) and rep.remainder_order == 0
    assert rep.remainder_chi == 0 and rep.class_count == 2
    rep = minimal_remainder_respectful(C5, 3)
    assert rep.partial.classes == () and rep.remainder_order == 5 and rep.remainder_chi == 3


def test_guard_and_r_validation():
    with pytest.raises(GuardExceeded):
        minimal_remainder_respectful(from_edge_list(11, []))
    with pytest.raises(ValueError):
        minimal_remainder_respectful(C5, 0)


def test_independent_sets_order():
    sets = independent_sets_at_least(C6, 2)
    tuples = [tuple(bits(m)) for m in sets]
    assert tuples == sorted(tuples)
    assert (0, 2, 4) in tuples and (0, 1) not in tuples


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_minimality_against_coloring_oracle(r):
    for g in catalog(7):
        rep = minimal_remainder_respectful(g, r)
        assert rep.remainder_order == remainder_via_colorings(g, r)


def test_minimality_against_family_brute_force():
    for g in catalog(7):
        assert minimal_remainder_respectful(g, 3).remainder_order == oracle_minimal_remainder(g, 3)


def test_report_invariants():
    for g in catalog(7):
        rep = minimal_remainder_respectful(g, 3)
        p = rep.partial
        assert is_r_greedy(p, 3) and is_respectful(g, p)
        assert rep.remainder_chi == chromatic_number(g) - rep.class_count
        assert rep.remainder_order == p.remainder.bit_count()


def test_canonical_least_witness():
    # Among families covering the most vertices, the first in (least vertex, lexicographic) order.
    g = from_edge_list(6, [])
    assert minimal_remainder_respectful(g, 3).partial.classes == ((0, 1, 2, 3, 4, 5),)
    c6 = minimal_remainder_respectful(C6, 2).partial.classes
    assert c6 == ((0, 2, 4), (1, 3, 5))
