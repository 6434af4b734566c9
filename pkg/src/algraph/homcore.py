"""Homomorphisms, cores, colourings, cliques, Hamiltonicity, matchings and
connectivity numbers, all by exact search.

Searches that return a witness return the lexicographically least one with
respect to the vertex order 0, 1, 2, ...  The core computation is the
exception: it only promises some core, as an induced subgraph.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .aut import automorphism_group
from .graph import BoundExceeded, Graph, GraphError, _bits, bipartition, is_connected

HOM_SOURCE_LIMIT = 60
HOM_TARGET_LIMIT = 12
CORE_LIMIT = 40
ALPHA_LIMIT = 60
HAMILTON_LIMIT = 64
LONG_CYCLE_LIMIT = 40


class Cancelled(RuntimeError):
    pass


class CancelToken:
    """Cooperative cancellation: long searches poll ``check``."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self) -> bool:
        return self._event.is_set()

    def check(self):
        if self._event.is_set():
            raise Cancelled("search cancelled")


def _poll(token: Optional[CancelToken]):
    if token is not None:
        token.check()


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


# -- homomorphism engine ------------------------------------------------------


def _search(
    g: Graph,
    h: Graph,
    injective: bool = False,
    induced: bool = False,
    dynamic: bool = False,
    token: Optional[CancelToken] = None,
) -> Optional[list[int]]:
    """Backtracking with forward checking.

    With ``dynamic`` off, vertices are assigned in the order 0..n-1 and values
    tried in increasing order, so the first solution is the lexicographically
    least.  With it on, the unassigned vertex with the smallest domain goes
    next (faster, no ordering promise).
    """
    n, m = g.n, h.n
    if n == 0:
        return []
    if m == 0:
        return None
    full = (1 << m) - 1
    nonisolated = 0
    for a in range(m):
        if h.adj[a]:
            nonisolated |= 1 << a
    dom = [nonisolated if g.adj[v] else full for v in range(n)]
    if any(d == 0 for d in dom):
        return None
    assign = [-1] * n
    counter = [0]

    def choose(dom: list[int], unassigned: int) -> int:
        if not dynamic:
            return _low(unassigned)
        best, bestc = -1, m + 1
        for v in _bits(unassigned):
            c = dom[v].bit_count()
            if c < bestc:
                best, bestc = v, c
                if c <= 1:
                    break
        return best

    def rec(dom: list[int], unassigned: int) -> bool:
        if not unassigned:
            return True
        counter[0] += 1
        if counter[0] & 1023 == 0:
            _poll(token)
        v = choose(dom, unassigned)
        rest = unassigned & ~(1 << v)
        nbrs = g.adj[v] & rest
        others = rest & ~g.adj[v]
        d = dom[v]
        while d:
            a = _low(d)
            d &= d - 1
            new = dom[:]
            ok = True
            bit = 1 << a
            for w in _bits(nbrs):
                nd = new[w] & h.adj[a]
                if not nd:
                    ok = False
                    break
                new[w] = nd
            if ok and (injective or induced):
                keep = ~bit
                if induced:
                    keep &= ~h.adj[a]
                for w in _bits(others):
                    nd = new[w] & keep
                    if not nd:
                        ok = False
                        break
                    new[w] = nd
            if not ok:
                continue
            assign[v] = a
            if rec(new, rest):
                return True
        assign[v] = -1
        return False

    return assign[:] if rec(dom, (1 << n) - 1) else None


@dataclass(frozen=True)
class HomWitness:
    mapping: tuple[int, ...]
    source: Graph
    target: Graph

    def __post_init__(self):
        for u, v in self.source.edges():
            if not self.target.has_edge(self.mapping[u], self.mapping[v]):
                raise ValueError(f"edge {u}-{v} is not preserved")


def find_homomorphism(
    g: Graph,
    h: Graph,
    token: Optional[CancelToken] = None,
    source_limit: int = HOM_SOURCE_LIMIT,
    target_limit: int = HOM_TARGET_LIMIT,
) -> Optional[HomWitness]:
    if g.n > source_limit or h.n > target_limit:
        raise BoundExceeded(
            f"homomorphism search bounded to |V(G)| <= {source_limit}, |V(H)| <= {target_limit}"
        )
    f = _search(g, h, token=token)
    return None if f is None else HomWitness(tuple(f), g, h)


def find_induced_subgraph(pattern: Graph, g: Graph, token: Optional[CancelToken] = None) -> Optional[list[int]]:
    """Injective map of the pattern onto an induced copy inside g, lexicographically least."""
    return _search(pattern, g, injective=True, induced=True, token=token)


# -- colourings ---------------------------------------------------------------


def _colouring(g: Graph, c: int, token: Optional[CancelToken] = None) -> Optional[list[int]]:
    """Lexicographically least proper c-colouring.

    Colours are broken by symmetry: a vertex may only open the next unused
    colour.  The lexicographically least colouring already has that shape.
    """
    n = g.n
    col = [-1] * n
    if n == 0:
        return []
    full = (1 << c) - 1
    counter = [0]

    def rec(v: int, used: int, dom: list[int]) -> bool:
        if v == n:
            return True
        counter[0] += 1
        if counter[0] & 1023 == 0:
            _poll(token)
        allowed = dom[v] & ((1 << min(c, used + 1)) - 1)
        while allowed:
            a = _low(allowed)
            allowed &= allowed - 1
            new = dom[:]
            ok = True
            for w in _bits(g.adj[v] >> (v + 1) << (v + 1)):
                new[w] &= ~(1 << a)
                if not new[w]:
                    ok = False
                    break
            if ok:
                col[v] = a
                if rec(v + 1, max(used, a + 1), new):
                    return True
        col[v] = -1
        return False

    return col[:] if rec(0, 0, [full] * n) else None


def chromatic_number(g: Graph, token: Optional[CancelToken] = None) -> int:
    return len(set(optimal_colouring(g, token))) if g.n else 0


def optimal_colouring(g: Graph, token: Optional[CancelToken] = None) -> list[int]:
    if g.n > HOM_SOURCE_LIMIT:
        raise BoundExceeded(f"colouring search bounded to n <= {HOM_SOURCE_LIMIT}")
    if g.n == 0:
        return []
    start = 1 if not g.num_edges else (2 if bipartition(g) is not None else max(3, clique_number(g)))
    c = start
    while True:
        col = _colouring(g, c, token)
        if col is not None:
            return col
        c += 1


# -- cliques and independent sets ---------------------------------------------


def _max_cliques(adj: Sequence[int], n: int, collect: bool, token: Optional[CancelToken] = None):
    """Size of a maximum clique and, if ``collect``, all maximum cliques."""
    best = [0]
    found: list[int] = []
    counter = [0]

    def bound(cand: int) -> int:
        # greedy colouring of the candidate set bounds the clique size
        colours = 0
        rest = cand
        while rest:
            colours += 1
            avail = rest
            while avail:
                v = _low(avail)
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
        return colours

    def rec(size: int, clique: int, cand: int):
        counter[0] += 1
        if counter[0] & 1023 == 0:
            _poll(token)
        if not cand:
            if size > best[0]:
                best[0] = size
                found.clear()
            if size == best[0] and collect:
                found.append(clique)
            return
        limit = size + bound(cand)
        if limit < best[0] or (limit == best[0] and not collect):
            return
        while cand:
            if size + cand.bit_count() < best[0] or (size + cand.bit_count() == best[0] and not collect):
                return
            v = _low(cand)
            cand &= ~(1 << v)
            rec(size + 1, clique | 1 << v, cand & adj[v])

    rec(0, 0, (1 << n) - 1)
    cliques = sorted({tuple(_bits(c)) for c in found}) if collect else []
    return best[0], cliques


def _complement_rows(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]


def clique_number(g: Graph, token: Optional[CancelToken] = None) -> int:
    if g.n > ALPHA_LIMIT:
        raise BoundExceeded(f"clique search bounded to n <= {ALPHA_LIMIT}")
    return _max_cliques(g.adj, g.n, False, token)[0]


def independence_number(g: Graph, token: Optional[CancelToken] = None) -> int:
    if g.n > ALPHA_LIMIT:
        raise BoundExceeded(f"independence search bounded to n <= {ALPHA_LIMIT}")
    return _max_cliques(_complement_rows(g), g.n, False, token)[0]


def max_independent_sets(g: Graph, token: Optional[CancelToken] = None) -> list[tuple[int, ...]]:
    """All maximum independent sets, each sorted, in lexicographic order."""
    if g.n > ALPHA_LIMIT:
        raise BoundExceeded(f"independence search bounded to n <= {ALPHA_LIMIT}")
    return _max_cliques(_complement_rows(g), g.n, True, token)[1]


def max_cliques(g: Graph, token: Optional[CancelToken] = None) -> list[tuple[int, ...]]:
    if g.n > ALPHA_LIMIT:
        raise BoundExceeded(f"clique search bounded to n <= {ALPHA_LIMIT}")
    return _max_cliques(g.adj, g.n, True, token)[1]


# -- cores --------------------------------------------------------------------


def _dominated_pair(g: Graph) -> Optional[tuple[int, int]]:
    """(u, v) non-adjacent, u != v, N(u) a subset of N(v); u folds onto v."""
    for u in range(g.n):
        if not g.adj[u]:
            continue
        for v in range(g.n):
            if v != u and not g.adj[u] >> v & 1 and g.adj[u] & ~g.adj[v] == 0:
                return u, v
    return None


def _shrink(g: Graph, token: Optional[CancelToken]) -> Optional[list[int]]:
    """Vertices of a proper hom-equivalent induced subgraph, or None if g is a core."""
    n = g.n
    if n <= 1:
        return None
    if not g.num_edges:
        return [0]
    if bipartition(g) is not None:
        if n == 2:
            return None
        return list(g.edges()[0])
    pair = _dominated_pair(g)
    if pair is not None:
        return [x for x in range(n) if x != pair[0]]
    w = clique_number(g, token)
    if w < n and _colouring(g, w, token) is not None:
        return list(max_cliques(g, token)[0])
    for orb in automorphism_group(g).orbits():
        v = orb[0]
        rest = [x for x in range(n) if x != v]
        sub = g.induced_subgraph(rest)
        f = _search(g, sub, dynamic=True, token=token)
        if f is not None:
            return sorted({rest[a] for a in f})
    return None


def core_vertices(g: Graph, token: Optional[CancelToken] = None, limit: int = CORE_LIMIT) -> list[int]:
    """Vertices of g inducing a core of g."""
    if g.n > limit:
        raise BoundExceeded(f"core search bounded to n <= {limit}")
    current = list(range(g.n))
    h = g
    while True:
        keep = _shrink(h, token)
        if keep is None:
            return current
        current = [current[i] for i in keep]
        h = g.induced_subgraph(current)


def core(g: Graph, token: Optional[CancelToken] = None, limit: int = CORE_LIMIT) -> Graph:
    return g.induced_subgraph(core_vertices(g, token, limit))


def is_core(g: Graph, token: Optional[CancelToken] = None, limit: int = CORE_LIMIT) -> bool:
    if g.n > limit:
        raise BoundExceeded(f"core search bounded to n <= {limit}")
    return _shrink(g, token) is None


# -- Hamiltonicity -------------------------------------------------------------


def hamiltonian_cycle(
    g: Graph, token: Optional[CancelToken] = None, limit: int = HAMILTON_LIMIT
) -> Optional[list[int]]:
    """Vertex sequence starting at 0 (lexicographically least), or None."""
    n = g.n
    if n > limit:
        raise BoundExceeded(f"Hamiltonicity search bounded to n <= {limit}")
    if n < 3 or not is_connected(g) or g.min_degree() < 2:
        return None
    adj = g.adj
    path = [0]
    counter = [0]

    def viable(unvisited: int, end: int) -> bool:
        # every unvisited vertex keeps two usable neighbours; the rest stays connected to the end
        usable = unvisited | 1 << end | 1
        for u in _bits(unvisited):
            if (adj[u] & usable).bit_count() < 2:
                return False
        seen = 1 << end
        frontier = seen
        target = unvisited | 1 << end
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u] & target
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen == target

    def rec(end: int, unvisited: int) -> bool:
        counter[0] += 1
        if counter[0] & 1023 == 0:
            _poll(token)
        if not unvisited:
            return bool(adj[end] & 1)
        for w in _bits(adj[end] & unvisited):
            rest = unvisited & ~(1 << w)
            if rest and not viable(rest, w):
                continue
            path.append(w)
            if rec(w, rest):
                return True
            path.pop()
        return False

    full = (1 << n) - 1
    return path if rec(0, full & ~1) else None


def hamiltonian_path(
    g: Graph, token: Optional[CancelToken] = None, limit: int = HAMILTON_LIMIT
) -> Optional[list[int]]:
    n = g.n
    if n > limit:
        raise BoundExceeded(f"Hamiltonicity search bounded to n <= {limit}")
    if n == 0:
        return None
    if n == 1:
        return [0]
    if not is_connected(g):
        return None
    adj = g.adj
    full = (1 << n) - 1
    counter = [0]

    def viable(unvisited: int, end: int) -> bool:
        usable = unvisited | 1 << end
        ends = 0
        for u in _bits(unvisited):
            c = (adj[u] & usable).bit_count()
            if c == 0:
                return False
            if c == 1:
                ends += 1
                if ends > 1:
                    return False
        seen = 1 << end
        frontier = seen
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u] & usable
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen == usable

    def rec(path: list[int], unvisited: int) -> bool:
        counter[0] += 1
        if counter[0] & 1023 == 0:
            _poll(token)
        if not unvisited:
            return True
        end = path[-1]
        for w in _bits(adj[end] & unvisited):
            rest = unvisited & ~(1 << w)
            if rest and not viable(rest, w):
                continue
            path.append(w)
            if rec(path, rest):
                return True
            path.pop()
        return False

    for s in range(n):
        path = [s]
        if rec(path, full & ~(1 << s)):
            return path
    return None


def long_cycle_at_least(
    g: Graph, length: int, token: Optional[CancelToken] = None, limit: int = LONG_CYCLE_LIMIT
) -> Optional[list[int]]:
    """A cycle with at least ``length`` vertices, whose least vertex comes first."""
    n = g.n
    if n > limit:
        raise BoundExceeded(f"long cycle search bounded to n <= {limit}")
    length = max(length, 3)
    adj = g.adj
    counter = [0]

    def reach(end: int, allowed: int) -> int:
        seen = 0
        frontier = 1 << end
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u] & allowed
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen

    for s in range(n):
        above = ((1 << n) - 1) >> (s + 1) << (s + 1)
        path = [s]

        def rec(end: int, free: int) -> bool:
            counter[0] += 1
            if counter[0] & 1023 == 0:
                _poll(token)
            if len(path) >= length and adj[end] & 1 << s and len(path) >= 3:
                return True
            if len(path) + reach(end, free).bit_count() < length:
                return False
            for w in _bits(adj[end] & free):
                path.append(w)
                if rec(w, free & ~(1 << w)):
                    return True
                path.pop()
            return False

        if rec(s, above):
            return path
    return None


# -- matchings ---------------------------------------------------------------


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum matching by Edmonds' blossom algorithm, as sorted (u, v) pairs with u < v."""
    n = g.n
    nbrs = g.neighbors
    match = [-1] * n
    for u, v in g.edges():
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            mark = [False] * n
            while True:
                a = base[a]
                mark[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if mark[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = find_path(root)
        # flip the augmenting path ending at v
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return sorted((u, v) for u, v in enumerate(match) if u < v)


def is_matching(g: Graph, edges) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen |= {u, v}
    return True


def max_matching_with_edge(g: Graph, u: int, v: int) -> list[tuple[int, int]]:
    """Largest matching forced to contain the edge uv."""
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    rest = [x for x in range(g.n) if x not in (u, v)]
    sub = max_matching(g.induced_subgraph(rest))
    return sorted([(min(u, v), max(u, v))] + [(rest[a], rest[b]) for a, b in sub])


# -- connectivity -------------------------------------------------------------


def _max_flow(cap: list[dict[int, int]], s: int, t: int, cutoff: int) -> int:
    """Unit-style augmenting paths on a residual map; stops early at ``cutoff``."""
    flow = 0
    while flow < cutoff:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        y = t
        while y != s:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow


def local_edge_connectivity(g: Graph, s: int, t: int, cutoff: Optional[int] = None) -> int:
    cap = [{w: 1 for w in g.neighbors[v]} for v in range(g.n)]
    return _max_flow(cap, s, t, g.n if cutoff is None else cutoff)


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: Optional[int] = None) -> int:
    """Internally disjoint s-t paths for non-adjacent s, t (vertex v split into 2v -> 2v+1)."""
    if g.has_edge(s, t) or s == t:
        raise GraphError("local vertex connectivity needs distinct non-adjacent vertices")
    n = g.n
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1 if v not in (s, t) else n
        for w in g.neighbors[v]:
            cap[2 * v + 1][2 * w] = n
    return _max_flow(cap, 2 * s + 1, 2 * t, n if cutoff is None else cutoff)


def edge_connectivity(g: Graph) -> int:
    if not is_connected(g):
        raise GraphError("edge connectivity needs a connected graph")
    if g.n == 1:
        return 0
    best = g.min_degree()
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t, best))
    return best


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; K_n gives n-1."""
    if not is_connected(g):
        raise GraphError("vertex connectivity needs a connected graph")
    n = g.n
    if g.num_edges == n * (n - 1) // 2:
        return n - 1
    best = g.min_degree()
    # some vertex among the first best+1 avoids a minimum cut
    i = 0
    while i <= best and i < n:
        for w in range(n):
            if w != i and not g.has_edge(i, w):
                best = min(best, local_vertex_connectivity(g, i, w, best))
        i += 1
    return best
