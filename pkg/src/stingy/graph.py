"""Simple undirected graphs over bitset adjacency, plus the graph6 codec.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is a
member). Public functions also accept any iterable of vertex indices wherever
a vertex set is expected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class GraphFormatError(ValueError):
    """Malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: int | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = self.full_mask
        total = 0
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has out-of-range neighbours")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += nb.bit_count()
        object.__setattr__(self, "edge_count", total // 2)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges are collapsed."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def _check_vertex_set(g: Graph, mask: int) -> None:
    if mask < 0 or mask >> g.n:
        raise GraphError(f"vertex set {mask:#x} references vertices outside 0..{g.n - 1}")


def induced_subgraph(g: Graph, keep: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, relabelled contiguously.

    Returns the subgraph and the map from old vertex labels to new ones.
    """
    mask = to_mask(keep)
    _check_vertex_set(g, mask)
    old = list(bits(mask))
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        nb = 0
        for u in bits(g.adj[v] & mask):
            nb |= 1 << index[u]
        adj.append(nb)
    return Graph(len(old), tuple(adj)), index


def delete_vertices(g: Graph, removed: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    mask = to_mask(removed)
    _check_vertex_set(g, mask)
    return induced_subgraph(g, g.full_mask & ~mask)


# --- graph6 -----------------------------------------------------------------


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    if g.n > MAX_VERTICES:
        raise GraphError(f"graph6 encoding supports at most {MAX_VERTICES} vertices")
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. A trailing newline is allowed, nothing else."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise GraphFormatError("graph6 must be printable ASCII") from exc
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphFormatError("empty graph6 line")
    if any(not 63 <= b <= 126 for b in data):
        raise GraphFormatError("byte outside the graph6 range 63..126")

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        raise GraphFormatError("8-byte size header (n > 258047) is not supported")
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated size header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise GraphFormatError(f"non-canonical long header for n={n}")
    if n > MAX_VERTICES:
        raise GraphFormatError(f"n={n} exceeds the supported maximum {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < need:
        raise GraphFormatError(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise GraphFormatError("trailing bytes after payload")

    stream = 0
    for b in payload:
        stream = stream << 6 | (b - 63)
    pad = need * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    stream >>= pad

    adj = [0] * n
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))
