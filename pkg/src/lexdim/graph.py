"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Each row of the adjacency is a Python ``int`` whose bit ``v`` is set when the
row vertex is adjacent to ``v``. All graphs are immutable; every operation
returns a new graph.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import CapExceededError, DomainError, GraphFormatError

# construction cap for join/product; graph6 itself has no such limit
ORDER_CAP = 64

UNREACHABLE = np.iinfo(np.int32).max
INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    """Labeled simple graph. ``rows[v]`` is the neighbor bitmask of ``v``."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.rows) != self.order:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{self.order - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not self.rows[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def closed_mask(self, v: int) -> int:
        return self.rows[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.rows[u]) if u < v]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, g6={to_graph6(self)!r})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# graph6


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as header-less graph6 text."""
    bits = [g.rows[i] >> j & 1 for j in range(1, g.order) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_order(g.order) + body


def from_graph6(text: str) -> Graph:
    """Decode graph6 text. An optional ``>>graph6<<`` header is accepted."""
    data = text.strip("\n")
    start = 0
    if data.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    if len(data) == start:
        raise GraphFormatError("empty graph6 string", offset=start)
    for k in range(start, len(data)):
        if not 63 <= ord(data[k]) <= 126:
            raise GraphFormatError(f"character {data[k]!r} outside graph6 range 63..126", offset=k)
    vals = [ord(c) - 63 for c in data]

    pos = start
    if vals[pos] != 63:
        n = vals[pos]
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(vals) and vals[pos] == 63:
            width = 6
            pos += 1
        if len(vals) < pos + width:
            raise GraphFormatError("truncated order field", offset=len(vals))
        n = 0
        for v in vals[pos:pos + width]:
            n = n << 6 | v
        pos += width

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit field: expected {nbytes} bytes for order {n}, got {len(body)}",
            offset=len(vals),
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing bytes after bit field", offset=pos + nbytes)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# named families and graph specs


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("P_n needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("N_n needs n >= 1")
    return Graph.empty(n)


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise ValueError("K_{r,s} needs r, s >= 1")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


_SPEC_RE = re.compile(r"^(?:([PCKN])(\d+)|K(\d+),(\d+))$")


def generate(spec: str) -> Graph:
    """Build a named graph from a token such as ``P4``, ``C7``, ``K5``, ``N3`` or ``K2,3``."""
    m = _SPEC_RE.match(spec.strip())
    if not m:
        raise GraphFormatError(f"unknown graph family token {spec!r}")
    if m.group(3) is not None:
        return complete_bipartite(int(m.group(3)), int(m.group(4)))
    builder = {"P": path, "C": cycle, "K": complete, "N": empty}[m.group(1)]
    return builder(int(m.group(2)))


def parse_graph_spec(spec: str) -> Graph:
    """Parse a named token or ``g6:<graph6>``."""
    spec = spec.strip()
    if spec.startswith("g6:"):
        return from_graph6(spec[3:])
    try:
        return generate(spec)
    except ValueError as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"invalid graph spec {spec!r}: {exc}") from exc


# constructions


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph, cap: int = ORDER_CAP) -> Graph:
    """All edges between disjoint copies of ``g`` (first) and ``h`` (second)."""
    n = g.order + h.order
    if n > cap:
        raise CapExceededError("join order", n, cap)
    gm = g.vertex_mask
    hm = h.vertex_mask << g.order
    rows = tuple(r | hm for r in g.rows) + tuple((r << g.order) | gm for r in h.rows)
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    return Graph.from_edges(
        len(vs), [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    )


# metric primitives


class DistanceMatrix:
    """All-pairs BFS distances; entries across components are ``UNREACHABLE``."""

    def __init__(self, values: np.ndarray):
        values = np.asarray(values, dtype=np.int32)
        values.setflags(write=False)
        self.values = values

    @property
    def order(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return int(self.values[key])

    def truncated(self, t: int) -> np.ndarray:
        """Matrix of ``min(d, t)``; unreachable entries become ``t``."""
        if t < 1:
            raise ValueError("truncation parameter must be >= 1")
        return np.minimum(self.values, t)

    def is_connected(self) -> bool:
        return bool((self.values != UNREACHABLE).all())

    def diameter(self) -> int | float:
        if self.order == 0:
            return 0
        if not self.is_connected():
            return INFINITE
        return int(self.values.max())


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    dist = [UNREACHABLE] * g.order
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    if g.order == 0:
        return DistanceMatrix(np.zeros((0, 0), dtype=np.int32))
    return DistanceMatrix(np.array([bfs_layers(g, v) for v in range(g.order)], dtype=np.int32))


def truncated_distance(dm: DistanceMatrix, t: int, x: int, y: int) -> int:
    if t < 1:
        raise ValueError("truncation parameter must be >= 1")
    n = dm.order
    if not (0 <= x < n and 0 <= y < n):
        raise IndexError(f"vertex out of range for order {n}")
    return min(dm[x, y], t)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by minimum vertex."""
    remaining = g.vertex_mask
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(list(iter_bits(seen)))
        remaining &= ~seen
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def eccentricities(g: Graph) -> list[int]:
    if not is_connected(g):
        raise DomainError("eccentricity is undefined on a disconnected graph")
    return [max(bfs_layers(g, v)) for v in range(g.order)]


def radius(g: Graph) -> int:
    if g.order == 0:
        raise DomainError("radius of the order-0 graph is undefined")
    return min(eccentricities(g))


def diameter(g: Graph) -> int:
    if g.order == 0:
        return 0
    return max(eccentricities(g))


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ``INFINITE`` for forests."""
    best = INFINITE
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(g.rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.order
    for s in range(g.order):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertices into true-twin classes (equal closed neighborhoods)."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def nonsingleton(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)

    def class_of(self, v: int) -> tuple[int, ...]:
        for c in self.classes:
            if v in c:
                return c
        raise IndexError(v)

    @property
    def twin_vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.nonsingleton for v in c)


def true_twin_classes(g: Graph) -> TwinPartition:
    groups: dict[int, list[int]] = {}
    for v in range(g.order):
        groups.setdefault(g.closed_mask(v), []).append(v)
    classes = sorted(tuple(vs) for vs in groups.values())
    return TwinPartition(tuple(classes))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, ordered by edge-subset bitmask."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))
