"""Graph sources: bundled non-isomorphic catalogs and seeded random graphs."""

from __future__ import annotations

import random
from importlib import resources
from typing import Iterator

from .graph import Graph, encode_graph6

CATALOG_MAX_N = 8


def catalog_lines(max_n: int, min_n: int = 0) -> Iterator[str]:
    """graph6 lines of every graph (up to isomorphism) with min_n <= n <= max_n."""
    if max_n > CATALOG_MAX_N:
        raise ValueError(f"bundled catalogs stop at n = {CATALOG_MAX_N}")
    root = resources.files("stingy") / "data"
    for n in range(max(min_n, 0), max_n + 1):
        yield from (root / f"graphs{n}.g6").read_text().split()


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def random_lines(n: int, p: float, seed: int, count: int) -> Iterator[str]:
    """``count`` G(n, p) graphs from a ``random.Random(seed)`` stream, as graph6."""
    rng = random.Random(seed)
    for _ in range(count):
        yield encode_graph6(random_graph(n, p, rng))
