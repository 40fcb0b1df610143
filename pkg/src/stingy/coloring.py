"""Optimal colorings, stinginess and the small-class predicate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, bits, to_mask
from .invariants import ORACLE_MAX_N, GuardExceeded, SubgraphChi, oracle_chromatic_number

ENUM_MAX_N = ORACLE_MAX_N


class InvalidColoringError(ValueError):
    pass


def canonical_classes(g: Graph, classes: Iterable[int | Iterable[int]], *, cover: bool) -> tuple[tuple[int, ...], ...]:
    """Validate a family of vertex classes and return it in canonical form.

    Canonical form: each class a sorted tuple, classes ordered by least member.
    """
    masks = [to_mask(c) for c in classes]
    seen = 0
    for m in masks:
        if not m:
            raise InvalidColoringError("empty color class")
        if m >> g.n:
            raise InvalidColoringError(f"class {sorted(bits(m))} has vertices outside 0..{g.n - 1}")
        if m & seen:
            raise InvalidColoringError("color classes overlap")
        for v in bits(m):
            if g.adj[v] & m:
                raise InvalidColoringError(f"class {sorted(bits(m))} is not independent")
        seen |= m
    if cover and seen != g.full_mask:
        raise InvalidColoringError("classes do not cover every vertex")
    masks.sort(key=lambda m: m & -m)
    return tuple(tuple(bits(m)) for m in masks)


@dataclass(frozen=True)
class Coloring:
    """A proper coloring of ``graph`` given as its color classes."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", canonical_classes(self.graph, self.classes, cover=True))

    @property
    def singletons(self) -> int:
        return sum(len(c) == 1 for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _iota_search(g: Graph, chi: SubgraphChi) -> int:
    """Lexicographically least largest singleton set, as a mask.

    A vertex set S can be the singleton classes of an optimal coloring iff
    chi(G - S) = chi(G) - |S|. The property is closed under subsets, so the
    search only grows sets that already have it.
    """
    full = g.full_mask
    k = chi(full)
    n = g.n

    def find(t: int, chosen: int, size: int, start: int) -> int | None:
        if size == t:
            return chosen
        for v in range(start, n - (t - size) + 1):
            s = chosen | 1 << v
            if chi(full & ~s) == k - size - 1:
                found = find(t, s, size + 1, v + 1)
                if found is not None:
                    return found
        return None

    for t in range(min(k, n), -1, -1):
        found = find(t, 0, 0, 0)
        if found is not None:
            return found
    raise AssertionError("unreachable: the empty set always qualifies")


def stingy_coloring(g: Graph, chi: SubgraphChi | None = None) -> Coloring:
    """An optimal coloring with the maximum number of singleton classes."""
    chi = chi or SubgraphChi(g)
    s = _iota_search(g, chi)
    rest = chi.coloring(g.full_mask & ~s)
    return Coloring(g, [1 << v for v in bits(s)] + rest)


def iota(g: Graph, chi: SubgraphChi | None = None) -> int:
    """Stinginess: most singleton classes over all optimal colorings."""
    return _iota_search(g, chi or SubgraphChi(g)).bit_count()


def is_stingy(g: Graph, c: Coloring, chi: SubgraphChi | None = None) -> bool:
    if c.graph != g:
        raise InvalidColoringError("coloring belongs to a different graph")
    chi = chi or SubgraphChi(g)
    return len(c) == chi(g.full_mask) and c.singletons == iota(g, chi)


def maximal_independent_sets(adj, mask: int) -> Iterator[int]:
    """Bron-Kerbosch with pivoting on the complement, restricted to ``mask``."""

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pu = p | x
        pivot = max(bits(pu), key=lambda u: (p & ~adj[u] & ~(1 << u)).bit_count())
        for v in bits(p & (adj[pivot] | 1 << pivot)):
            non_nb = mask & ~adj[v] & ~(1 << v)
            yield from expand(r | 1 << v, p & non_nb, x & non_nb)
            p &= ~(1 << v)
            x |= 1 << v

    if not mask:
        yield 0
        return
    yield from expand(0, mask, 0)


def all_optimal_classes_at_most(g: Graph, k: int, chi: SubgraphChi | None = None) -> bool:
    """Whether every optimal coloring of ``g`` has all classes of size <= k.

    Refutation search: an optimal coloring with a class larger than ``k``
    exists iff some maximal independent set I with |I| > k has
    chi(G - I) = chi(G) - 1 (enlarging a class never raises chi of the rest).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    chi = chi or SubgraphChi(g)
    full = g.full_mask
    target = chi(full) - 1
    for m in maximal_independent_sets(g.adj, full):
        if m.bit_count() > k and chi(full & ~m) == target:
            return False
    return True


def iter_optimal_colorings(g: Graph) -> Iterator[Coloring]:
    """All optimal colorings in lexicographic order of their canonical class lists (n <= 10).

    Classes are chosen one at a time, each containing the least uncolored
    vertex, candidates in lexicographic order. The color count comes from the
    exhaustive oracle and nothing here relies on the branch-and-bound search,
    so this stays an independent check on :func:`iota`.
    """
    if g.n > ENUM_MAX_N:
        raise GuardExceeded(f"enumeration limited to n <= {ENUM_MAX_N}, got {g.n}")
    adj = g.adj
    k = oracle_chromatic_number(g)
    chosen: list[int] = []

    def classes_from(rest: int, left: int) -> Iterator[list[int]]:
        if not rest:
            if left == 0:
                yield chosen
            return
        if rest.bit_count() < left or left == 0:
            return
        v = (rest & -rest).bit_length() - 1

        def grow(cls: int, cand: int) -> Iterator[list[int]]:
            chosen.append(cls)
            yield from classes_from(rest & ~cls, left - 1)
            chosen.pop()
            for u in bits(cand):
                yield from grow(cls | 1 << u, cand & ~adj[u] & ~((2 << u) - 1))

        yield from grow(1 << v, rest & ~adj[v] & ~((2 << v) - 1))

    for found in classes_from(g.full_mask, k):
        yield Coloring(g, list(found))


@dataclass(frozen=True)
class ColoringEnumeration:
    colorings: tuple[Coloring, ...]
    complete: bool


def enumerate_optimal_colorings(g: Graph, budget: int) -> ColoringEnumeration:
    """At most ``budget`` optimal colorings; ``complete`` is False if more exist."""
    out = []
    it = iter_optimal_colorings(g)
    for c in it:
        if len(out) == budget:
            return ColoringEnumeration(tuple(out), complete=False)
        out.append(c)
    return ColoringEnumeration(tuple(out), complete=True)
