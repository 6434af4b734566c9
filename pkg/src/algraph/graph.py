"""Simple undirected graphs on vertices 0..n-1 with bitmask neighbour rows."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad endpoints, bad parameters)."""


class BoundExceeded(RuntimeError):
    """An exact search refused to run because the input exceeds its size bound."""


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
    Construct through :func:`from_edges` or :meth:`Graph.from_adjacency` so the
    symmetry and loop invariants are checked.
    """

    n: int
    adj: tuple[int, ...]
    _checked: bool = field(default=False, repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        if not self._checked:
            full = (1 << self.n) - 1
            for v, row in enumerate(self.adj):
                if row & ~full:
                    raise GraphError(f"vertex {v} has a neighbour out of range")
                if row >> v & 1:
                    raise GraphError(f"loop at vertex {v}")
                for u in _bits(row):
                    if not self.adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_adjacency(cls, rows: Sequence[int]) -> "Graph":
        return cls(len(rows), tuple(rows))

    @classmethod
    def _trusted(cls, rows: Sequence[int]) -> "Graph":
        return cls(len(rows), tuple(rows), True)

    # -- basic queries -------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples, one per vertex."""
        return tuple(tuple(_bits(row)) for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @cached_property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (min, max) pairs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors[u]]

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def regularity(self) -> Optional[int]:
        """The common degree, or None if the graph is not regular."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def is_regular(self) -> bool:
        return self.n == 0 or self.regularity() is not None

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled in increasing order of the given vertices."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            for u in self.neighbors[v]:
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph._trusted(rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose edge set is {perm[u] perm[v] : uv an edge}."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph._trusted(rows)

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(range(self.n)):
            return False
        return all(self.has_edge(perm[u], perm[v]) for u, v in self.edges())

    def adjacency_matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = bfs_mask(self, s)
            seen |= comp
            comps.append(_bits(comp))
        return comps


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; loops and out-of-range endpoints are rejected."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted([full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order; adjacent iff they share an endpoint."""
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    rows = [0] * len(edges)
    for group in incident:
        mask = 0
        for i in group:
            mask |= 1 << i
        for i in group:
            rows[i] |= mask & ~(1 << i)
    return Graph._trusted(rows)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) has index a * h.n + b."""
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * h.n + b, a * h.n + c))
    for a, c in g.edges():
        for b in range(h.n):
            edges.append((a * h.n + b, c * h.n + b))
    return from_edges(g.n * h.n, edges)


def k_fold_subdivision(g: Graph, k: int) -> Graph:
    """Replace every edge by a path of length ``k``.

    Original vertices keep their ids; the k-1 inner vertices of edge number i
    (lexicographic order) follow, in order from the smaller endpoint.
    """
    if k < 1:
        raise GraphError("subdivision factor must be at least 1")
    if k == 1:
        return g
    edges = []
    nxt = g.n
    for u, v in g.edges():
        path = [u] + list(range(nxt, nxt + k - 1)) + [v]
        nxt += k - 1
        edges.extend(zip(path, path[1:]))
    return from_edges(nxt, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph._trusted(rows)


# -- metric queries ----------------------------------------------------------


def bfs_mask(g: Graph, source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Hop counts from ``source``; None marks unreachable vertices."""
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop counts; ``None`` stands for infinite distance."""

    d: tuple[tuple[Optional[int], ...], ...]

    def __getitem__(self, uv):
        u, v = uv
        return self.d[u][v]

    def layer(self, v: int, i: int) -> list[int]:
        """The vertices at distance exactly ``i`` from ``v``."""
        return [u for u, x in enumerate(self.d[v]) if x == i]


def metrics(g: Graph) -> DistanceTable:
    return DistanceTable(tuple(tuple(bfs_distances(g, v)) for v in range(g.n)))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or bfs_mask(g, 0) == (1 << g.n) - 1


def diameter(g: Graph) -> Optional[int]:
    """Largest distance; None if disconnected (infinite)."""
    if not is_connected(g):
        return None
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_distances(g, v)))
    return best


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle; None for forests."""
    best: Optional[int] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def bipartition(g: Graph) -> Optional[tuple[list[int], list[int]]]:
    """2-colouring by BFS parity, colour class of each component root first; None if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    left = [v for v in range(g.n) if colour[v] == 0]
    right = [v for v in range(g.n) if colour[v] == 1]
    return left, right


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    return (g.adj[u] & g.adj[v]).bit_count()

