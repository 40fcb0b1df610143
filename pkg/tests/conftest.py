import itertools

import pytest
from hypothesis import strategies as st

from stingy.catalog import catalog_lines
from stingy.graph import Graph, decode_graph6, from_edge_list


def complete(n):
    return from_edge_list(n, itertools.combinations(range(n), 2))


def empty(n):
    return from_edge_list(n, [])


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


K2, K3, K4, K5 = complete(2), complete(3), complete(4), complete(5)
E0, E1, E3, E5 = empty(0), empty(1), empty(3), empty(5)
C4, C5, C6 = cycle(4), cycle(5), cycle(6)
STAR3 = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
PETERSEN = petersen()


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, chosen) if keep])


_CATALOG: dict[int, list[Graph]] = {}


def catalog(max_n):
    """Every graph up to isomorphism on at most ``max_n`` vertices."""
    if max_n not in _CATALOG:
        _CATALOG[max_n] = [decode_graph6(line) for line in catalog_lines(max_n)]
    return _CATALOG[max_n]


# --- acceptance result lines ----------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
