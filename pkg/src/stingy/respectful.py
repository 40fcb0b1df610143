"""Respectful r-greedy partial colorings with the smallest uncolored remainder."""

from __future__ import annotations

from dataclasses import dataclass
from .coloring import canonical_classes
from .graph import Graph, bits, delete_vertices, to_mask
from .invariants import ORACLE_MAX_N, GuardExceeded, SubgraphChi, oracle_chromatic_number

SEARCH_MAX_N = ORACLE_MAX_N


@dataclass(frozen=True)
class PartialColoring:
    """Disjoint independent classes of ``graph`` that need not cover it."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", canonical_classes(self.graph, self.classes, cover=False))

    @property
    def covered(self) -> int:
        """Mask of the union of the classes."""
        return to_mask(v for c in self.classes for v in c)

    @property
    def remainder(self) -> int:
        return self.graph.full_mask & ~self.covered

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class RemainderReport:
    partial: PartialColoring
    remainder_order: int
    class_count: int
    remainder_chi: int
    r: int


def is_r_greedy(p: PartialColoring, r: int) -> bool:
    return all(len(c) >= r for c in p.classes)


def is_respectful(g: Graph, p: PartialColoring, chi: SubgraphChi | None = None) -> bool:
    if p.graph != g:
        raise ValueError("partial coloring belongs to a different graph")
    chi = chi or SubgraphChi(g)
    return chi(p.remainder) == chi(g.full_mask) - len(p)


def independent_sets_at_least(g: Graph, r: int, within: int | None = None) -> list[int]:
    """Independent sets of size >= r inside ``within``, ordered by (least vertex, sorted members)."""
    within = g.full_mask if within is None else within
    out: list[tuple[tuple[int, ...], int]] = []

    def grow(chosen: int, cand: int, members: tuple[int, ...]) -> None:
        if len(members) >= r:
            out.append((members, chosen))
        for v in bits(cand):
            grow(chosen | 1 << v, cand & ~g.adj[v] & ~((2 << v) - 1), members + (v,))

    grow(0, within, ())
    out.sort()
    return [m for _, m in out]


def minimal_remainder_respectful(
    g: Graph, r: int = 3, chi: SubgraphChi | None = None
) -> RemainderReport:
    """Respectful r-greedy partial coloring leaving the fewest vertices uncolored.

    Branch and bound over families of independent sets (each of size >= r),
    classes added in increasing order of least vertex. Respectfulness is
    inherited by subfamilies, so non-respectful branches are cut at once.
    Among families with equal remainder the first in that order wins.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if g.n > SEARCH_MAX_N:
        raise GuardExceeded(f"respectful search limited to n <= {SEARCH_MAX_N}, got {g.n}")
    chi = chi or SubgraphChi(g)
    full = g.full_mask
    k = chi(full)
    sets = independent_sets_at_least(g, r)
    lows = [(m & -m).bit_length() - 1 for m in sets]

    best: list[int] = []
    best_cover = 0
    family: list[int] = []

    def search(start: int, covered: int, low: int) -> None:
        nonlocal best, best_cover
        if covered.bit_count() > best_cover:
            best, best_cover = list(family), covered.bit_count()
        if len(family) == k or best_cover == g.n:
            return
        reachable = full & ~covered & ~((2 << low) - 1) if low >= 0 else full & ~covered
        if covered.bit_count() + reachable.bit_count() <= best_cover:
            return
        remaining_chi = k - len(family)
        for i in range(start, len(sets)):
            m = sets[i]
            if m & covered:
                continue
            rest = full & ~(covered | m)
            if covered.bit_count() + (full & ~covered & ~((1 << lows[i]) - 1)).bit_count() <= best_cover:
                break
            if chi(rest) != remaining_chi - 1:
                continue
            family.append(m)
            search(_first_after(lows, i), covered | m, lows[i])
            family.pop()

    search(0, 0, -1)
    partial = PartialColoring(g, best)
    return RemainderReport(
        partial=partial,
        remainder_order=g.n - best_cover,
        class_count=len(best),
        remainder_chi=k - len(best),
        r=r,
    )


def _first_after(lows: list[int], i: int) -> int:
    """Index of the first set whose least vertex exceeds that of set ``i``."""
    j = i + 1
    while j < len(lows) and lows[j] == lows[i]:
        j += 1
    return j


def oracle_minimal_remainder(g: Graph, r: int = 3) -> int:
    """Smallest remainder over every disjoint family of independent sets of size >= r.

    Brute force: every family is built and its respectfulness checked directly,
    without using heredity. Exponential; meant for n <= 7.
    """
    if g.n > SEARCH_MAX_N:
        raise GuardExceeded(f"oracle limited to n <= {SEARCH_MAX_N}, got {g.n}")
    sets = independent_sets_at_least(g, r)
    k = oracle_chromatic_number(g)
    chi_cache: dict[int, int] = {}
    best = g.n

    def chi_rest(covered: int) -> int:
        if covered not in chi_cache:
            chi_cache[covered] = oracle_chromatic_number(delete_vertices(g, covered)[0])
        return chi_cache[covered]

    def walk(start: int, covered: int, count: int) -> None:
        nonlocal best
        if chi_rest(covered) == k - count:
            best = min(best, g.n - covered.bit_count())
        for i in range(start, len(sets)):
            if not sets[i] & covered:
                walk(i + 1, covered | sets[i], count + 1)

    walk(0, 0, 0)
    return best

