"""Exact chromatic, clique and independence numbers on small graphs.

Every search works on an induced subgraph given as a vertex mask of a parent
graph, so callers can evaluate many deletions of one graph without
relabelling. Ties are always broken towards the lowest vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, complement

ORACLE_MAX_N = 10


class GuardExceeded(ValueError):
    """An exhaustive routine was asked to run above its vertex guard."""


# --- clique -------------------------------------------------------------------


def _color_sort(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring of ``cand``; returns vertices and their color bounds."""
    order: list[int] = []
    bounds: list[int] = []
    rest = cand
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique_mask(adj: Sequence[int], mask: int) -> int:
    """Maximum clique inside ``mask`` (first found in lowest-index order)."""
    best = 0
    best_size = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        order, bounds = _color_sort(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best_size:
                return
            v = order[i]
            new_clique = clique | 1 << v
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best_size:
                best, best_size = new_clique, size + 1
            cand &= ~(1 << v)

    if mask:
        expand(0, 0, mask)
    return best


# --- chromatic number -----------------------------------------------------------


def _greedy_clique(adj: Sequence[int], mask: int) -> int:
    clique = 0
    cand = mask
    while cand:
        v = max(bits(cand), key=lambda u: ((adj[u] & cand).bit_count(), -u))
        clique |= 1 << v
        cand &= adj[v]
    return clique


def _pick_dsatur(adj: Sequence[int], uncolored: int, classes: list[int], mask: int) -> int:
    best_v = -1
    best_key = (-1, -1)
    for v in bits(uncolored):
        nb = adj[v]
        sat = 0
        for c in classes:
            if c & nb:
                sat += 1
        key = (sat, (nb & mask).bit_count())
        if key > best_key:
            best_key, best_v = key, v
    return best_v


def _dsatur_greedy(adj: Sequence[int], mask: int) -> list[int]:
    classes: list[int] = []
    uncolored = mask
    while uncolored:
        v = _pick_dsatur(adj, uncolored, classes, mask)
        for i, c in enumerate(classes):
            if not c & adj[v]:
                classes[i] = c | 1 << v
                break
        else:
            classes.append(1 << v)
        uncolored &= ~(1 << v)
    return classes


def optimal_coloring_mask(adj: Sequence[int], mask: int) -> list[int]:
    """An optimal coloring of the subgraph induced by ``mask`` as class masks.

    DSATUR branch and bound: a greedy clique gives the lower bound, greedy
    DSATUR the initial incumbent.
    """
    if not mask:
        return []
    lower = _greedy_clique(adj, mask).bit_count()
    best = _dsatur_greedy(adj, mask)
    if len(best) == lower:
        return best

    classes: list[int] = []

    def search(uncolored: int) -> bool:
        nonlocal best
        if not uncolored:
            best = list(classes)
            return len(best) == lower
        v = _pick_dsatur(adj, uncolored, classes, mask)
        nb = adj[v]
        rest = uncolored & ~(1 << v)
        for i in range(len(classes)):
            if not classes[i] & nb:
                classes[i] |= 1 << v
                done = search(rest)
                classes[i] &= ~(1 << v)
                if done:
                    return True
        if len(classes) + 1 < len(best):
            classes.append(1 << v)
            done = search(rest)
            classes.pop()
            if done:
                return True
        return False

    search(mask)
    return best


class SubgraphChi:
    """Memoised optimal colorings of induced subgraphs of one graph."""

    def __init__(self, g: Graph):
        self.graph = g
        self._cache: dict[int, list[int]] = {}

    def coloring(self, mask: int) -> list[int]:
        try:
            return self._cache[mask]
        except KeyError:
            classes = optimal_coloring_mask(self.graph.adj, mask)
            self._cache[mask] = classes
            return classes

    def __call__(self, mask: int) -> int:
        return len(self.coloring(mask))


# --- public surface ---------------------------------------------------------------


def chromatic_number(g: Graph) -> int:
    return len(optimal_coloring_mask(g.adj, g.full_mask))


def optimal_coloring(g: Graph) -> list[int]:
    """Witness for :func:`chromatic_number`, classes sorted by least vertex."""
    return sorted(optimal_coloring_mask(g.adj, g.full_mask), key=lambda c: c & -c)


def clique_number(g: Graph) -> int:
    return max_clique_mask(g.adj, g.full_mask).bit_count()


def max_clique(g: Graph) -> list[int]:
    return list(bits(max_clique_mask(g.adj, g.full_mask)))


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def max_degree(g: Graph) -> int:
    return max((nb.bit_count() for nb in g.adj), default=0)


def doubly_critical_edges(g: Graph, chi: SubgraphChi | None = None) -> list[tuple[int, int]]:
    """Edges ``uv`` whose joint deletion lowers the chromatic number by two."""
    if g.n < 2:
        return []
    chi = chi or SubgraphChi(g)
    full = g.full_mask
    k = chi(full)
    return [(u, v) for u, v in g.edges() if chi(full & ~(1 << u | 1 << v)) == k - 2]


def oracle_chromatic_number(g: Graph) -> int:
    """Chromatic number by exhaustive color assignment (n <= 10).

    Vertices are colored in index order and vertex 0 is pinned to color 0;
    no other symmetry reduction is applied.
    """
    if g.n > ORACLE_MAX_N:
        raise GuardExceeded(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    color = [0] * n

    def extend(v: int, k: int) -> bool:
        if v == n:
            return True
        for c in range(k) if v else (0,):
            if all(color[u] != c for u in bits(adj[v] & ((1 << v) - 1))):
                color[v] = c
                if extend(v + 1, k):
                    return True
        return False

    for k in range(1, n + 1):
        if extend(0, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def oracle_independence_number(g: Graph) -> int:
    """Largest independent vertex subset by scanning all 2^n subsets."""
    if g.n > ORACLE_MAX_N:
        raise GuardExceeded(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    best = 0
    for s in range(1 << g.n):
        if all(not g.adj[v] & s for v in bits(s)):
            best = max(best, s.bit_count())
    return best


@dataclass(frozen=True)
class InvariantRecord:
    """All per-graph quantities the bound catalogue reads.

    Fields past ``delta`` are optional: a *basic* record (as computed for
    complements) leaves them ``None``.
    """

    n: int
    chi: int
    omega: int
    alpha: int
    delta: int
    iota: int | None = None
    has_doubly_critical_edge: bool | None = None
    doubly_critical_witness: tuple[int, int] | None = None
    small_classes: bool | None = None
    r: int | None = None
    respectful_classes: tuple[tuple[int, ...], ...] | None = None
    remainder_order: int | None = None
    complement: "InvariantRecord | None" = None

    @property
    def respectful_class_count(self) -> int | None:
        return None if self.respectful_classes is None else len(self.respectful_classes)


def basic_record(g: Graph, chi: SubgraphChi | None = None) -> InvariantRecord:
    chi = chi or SubgraphChi(g)
    return InvariantRecord(
        n=g.n,
        chi=chi(g.full_mask),
        omega=clique_number(g),
        alpha=independence_number(g),
        delta=max_degree(g),
    )


__all__ = [
    "GuardExceeded",
    "InvariantRecord",
    "SubgraphChi",
    "basic_record",
    "chromatic_number",
    "clique_number",
    "doubly_critical_edges",
    "independence_number",
    "max_clique",
    "max_degree",
    "optimal_coloring",
    "oracle_chromatic_number",
    "oracle_independence_number",
]
