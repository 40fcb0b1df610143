import itertools

import pytest
from hypothesis import given, settings

from conftest import C4, C5, C6, E0, E3, K3, K4, PETERSEN, catalog, graphs
from stingy.coloring import (
    Coloring,
    InvalidColoringError,
    all_optimal_classes_at_most,
    enumerate_optimal_colorings,
    iota,
    is_stingy,
    iter_optimal_colorings,
    stingy_coloring,
)
from stingy.graph import from_edge_list
from stingy.invariants import GuardExceeded, chromatic_number


def brute_optimal_colorings(g):
    """Every map V -> {0..k-1} that is proper and onto, folded to class sets."""
    k = chromatic_number(g)
    seen = set()
    for colors in itertools.product(range(k), repeat=g.n):
        if len(set(colors)) != k or any(colors[u] == colors[v] for u, v in g.edges()):
            continue
        seen.add(frozenset(frozenset(v for v in range(g.n) if colors[v] == c) for c in range(k)))
    return seen


@pytest.mark.parametrize("g, expected", [(K4, 4), (C5, 1), (E3, 0), (E0, 0), (C6, 0)])
def test_iota_examples(g, expected):
    assert iota(g) == expected


def test_c5_singleton_structure_by_brute_force():
    found = brute_optimal_colorings(C5)
    assert len(found) == 5
    assert all(sorted(len(c) for c in col) == [1, 2, 2] for col in found)


def test_is_stingy_examples():
    assert is_stingy(K4, Coloring(K4, [[0], [1], [2], [3]]))
    assert is_stingy(C5, Coloring(C5, [[0, 2], [1, 3], [4]]))
    with pytest.raises(InvalidColoringError):
        Coloring(C5, [[0, 1], [2, 4], [3]])
    assert is_stingy(K3, Coloring(K3, [[0], [1], [2]]))


def test_coloring_validation():
    with pytest.raises(InvalidColoringError):
        Coloring(C5, [[0, 2], [1, 3]])  # does not cover 4
    with pytest.raises(InvalidColoringError):
        Coloring(C5, [[0, 2], [2, 4], [1, 3]])
    with pytest.raises(InvalidColoringError):
        Coloring(C5, [[0, 2], [], [1, 3], [4]])
    with pytest.raises(InvalidColoringError):
        is_stingy(C4, Coloring(C5, [[0, 2], [1, 3], [4]]))


def test_is_stingy_rejects_non_optimal():
    assert not is_stingy(C4, Coloring(C4, [[0], [2], [1, 3]]))


def test_all_optimal_classes_examples():
    assert all_optimal_classes_at_most(C5, 2)
    assert not all_optimal_classes_at_most(E3, 2)
    assert all_optimal_classes_at_most(K4, 1)
    with pytest.raises(ValueError):
        all_optimal_classes_at_most(K4, 0)


def test_enumeration_examples():
    assert [c.classes for c in iter_optimal_colorings(K3)] == [((0,), (1,), (2,))]
    assert [c.classes for c in iter_optimal_colorings(C4)] == [((0, 2), (1, 3))]
    c5 = [c.classes for c in iter_optimal_colorings(C5)]
    assert len(c5) == 5
    assert sorted({next(cls for cls in col if len(cls) == 1)[0] for col in c5}) == [0, 1, 2, 3, 4]


def test_enumeration_budget_and_guard():
    part = enumerate_optimal_colorings(C5, 3)
    assert len(part.colorings) == 3 and not part.complete
    full = enumerate_optimal_colorings(C5, 5)
    assert len(full.colorings) == 5 and full.complete
    with pytest.raises(GuardExceeded):
        list(iter_optimal_colorings(from_edge_list(11, [])))


def test_enumeration_matches_brute_force():
    for g in catalog(6):
        got = [c.classes for c in iter_optimal_colorings(g)]
        assert got == sorted(set(got))  # canonical order, no duplicates
        assert {frozenset(map(frozenset, col)) for col in got} == brute_optimal_colorings(g)


def test_small_class_predicate_matches_enumeration():
    for g in catalog(7):
        cols = list(iter_optimal_colorings(g))
        for k in (1, 2, 3):
            expected = all(len(cls) <= k for c in cols for cls in c.classes)
            assert all_optimal_classes_at_most(g, k) == expected


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_stingy_witness_properties(g):
    c = stingy_coloring(g)
    k = chromatic_number(g)
    assert is_stingy(g, c)
    assert len(c) == k
    t = iota(g)
    assert 0 <= t <= k
    assert (t == k) == (k == g.n)
    assert 2 * k <= t + g.n


def test_petersen_iota():
    # Enumeration oracle on n = 10, still inside the guard.
    best = max(c.singletons for c in iter_optimal_colorings(PETERSEN))
    assert iota(PETERSEN) == best
