"""Regenerate the bundled catalogs of non-isomorphic graphs (src/stingy/data/).

Graphs on n vertices come from every graph on n-1 vertices plus a new vertex
joined to every possible neighbour subset; duplicates are removed by an
invariant hash followed by networkx isomorphism tests inside each bucket.
Counts are checked against the known sequence 1, 1, 2, 4, 11, 34, 156, 1044,
12346 (OEIS A000088).

    python scripts/build_catalog.py --max-n 8
"""

import argparse
import time
from collections import defaultdict
from pathlib import Path

import networkx as nx

from stingy.graph import Graph, bits, encode_graph6

KNOWN_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
DATA = Path(__file__).resolve().parent.parent / "src" / "stingy" / "data"


def invariant_key(g: Graph):
    deg = [nb.bit_count() for nb in g.adj]
    tri = [sum((g.adj[u] & g.adj[v]).bit_count() for u in bits(g.adj[v])) // 2 for v in range(g.n)]
    local = sorted(
        (deg[v], tri[v], tuple(sorted(deg[u] for u in bits(g.adj[v])))) for v in range(g.n)
    )
    return tuple(local)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def extend(graphs: list[Graph]) -> list[Graph]:
    buckets: dict = defaultdict(list)
    out: list[Graph] = []
    for g in graphs:
        n = g.n
        for nb in range(1 << n):
            adj = tuple(a | ((nb >> v & 1) << n) for v, a in enumerate(g.adj)) + (nb,)
            h = Graph(n + 1, adj)
            key = invariant_key(h)
            bucket = buckets[key]
            hx = to_nx(h)
            if any(nx.is_isomorphic(hx, other) for other in bucket):
                continue
            bucket.append(hx)
            out.append(h)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    DATA.mkdir(parents=True, exist_ok=True)
    level = [Graph(0, ())]
    for n in range(args.max_n + 1):
        if n:
            t0 = time.perf_counter()
            level = extend(level)
            print(f"n={n}: {len(level)} graphs in {time.perf_counter() - t0:.1f}s")
        if len(level) != KNOWN_COUNTS[n]:
            raise SystemExit(f"n={n}: got {len(level)} graphs, expected {KNOWN_COUNTS[n]}")
        lines = sorted(encode_graph6(g) for g in level)
        (DATA / f"graphs{n}.g6").write_text("".join(line + "\n" for line in lines))


if __name__ == "__main__":
    main()
