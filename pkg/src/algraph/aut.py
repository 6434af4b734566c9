"""Automorphism groups, isomorphism testing and the transitivity ladder.

The search is individualization-refinement.  Partitions are ordered and cells
are identified by their start position in the vertex ordering, so every
refinement step is label independent and can be recorded in a trace.  One
reference path is descended to a discrete partition; then, level by level
from the bottom, every vertex of the target cell that is not yet in the
known orbit of the reference choice is tried, and the first leaf whose
trace matches and whose induced map preserves adjacency gives a new
generator.  The orbit lengths along the reference path multiply to the
group order.
"""

from __future__ import annotations

import heapq
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .graph import Graph, bfs_distances, diameter, girth, is_connected
from .perm import PermGroup, orbits_of, orbits_on


class _State:
    __slots__ = ("lab", "cell", "clen")

    def __init__(self, lab, cell, clen):
        self.lab = lab
        self.cell = cell
        self.clen = clen

    def copy(self) -> "_State":
        return _State(self.lab[:], self.cell[:], self.clen[:])

    def discrete(self) -> bool:
        return all(self.clen[self.cell[v]] == 1 for v in self.lab)

    def target(self) -> int:
        i, n = 0, len(self.lab)
        while i < n:
            if self.clen[i] > 1:
                return i
            i += self.clen[i]
        return -1

    def members(self, start: int) -> list[int]:
        return self.lab[start : start + self.clen[start]]


class _Refiner:
    def __init__(self, g: Graph):
        self.g = g
        self.nbrs = g.neighbors

    def initial(self, keys: Sequence) -> tuple[_State, list]:
        n = self.g.n
        order = sorted(range(n), key=lambda v: (keys[v], v))
        lab = order[:]
        cell = [0] * n
        clen = [0] * n
        starts = []
        i = 0
        while i < n:
            j = i
            while j < n and keys[order[j]] == keys[order[i]]:
                j += 1
            for p in range(i, j):
                cell[lab[p]] = i
            clen[i] = j - i
            starts.append(i)
            i = j
        st = _State(lab, cell, clen)
        header = [tuple((keys[lab[s]], clen[s]) for s in starts)]
        trace = self.refine(st, starts)
        return st, header + trace

    def refine(self, st: _State, splitters, ref: Optional[list] = None, offset: int = 0):
        """Refine to the coarsest equitable partition below ``st``.

        With ``ref`` given, abort (return None) as soon as the trace leaves it.
        """
        lab, cell, clen, nbrs = st.lab, st.cell, st.clen, self.nbrs
        heap = list(dict.fromkeys(splitters))
        heapq.heapify(heap)
        inq = set(heap)
        trace: list = []
        pos = offset
        while heap:
            s = heapq.heappop(heap)
            inq.discard(s)
            count: dict[int, int] = {}
            for w in lab[s : s + clen[s]]:
                for u in nbrs[w]:
                    count[u] = count.get(u, 0) + 1
            for c in sorted({cell[u] for u in count}):
                size = clen[c]
                if size == 1:
                    continue
                seg = lab[c : c + size]
                buckets: dict[int, list[int]] = {}
                for v in seg:
                    buckets.setdefault(count.get(v, 0), []).append(v)
                if len(buckets) == 1:
                    continue
                keys = sorted(buckets)
                step = (s, c, tuple((k, len(buckets[k])) for k in keys))
                if ref is not None and (pos >= len(ref) or ref[pos] != step):
                    return None
                trace.append(step)
                pos += 1
                p = c
                frags = []
                for k in keys:
                    b = buckets[k]
                    frags.append((p, len(b)))
                    for v in b:
                        lab[p] = v
                        cell[v] = frags[-1][0]
                        p += 1
                for fs, fl in frags:
                    clen[fs] = fl
                if c in inq:
                    for fs, _ in frags[1:]:
                        heapq.heappush(heap, fs)
                        inq.add(fs)
                else:
                    biggest = max(frags, key=lambda f: (f[1], -f[0]))
                    for f in frags:
                        if f is not biggest:
                            heapq.heappush(heap, f[0])
                            inq.add(f[0])
        trace.append(("end", pos))
        if ref is not None and (pos >= len(ref) or ref[pos] != trace[-1]):
            return None
        return trace

    def individualize(self, st: _State, v: int, ref: Optional[list] = None):
        c = st.cell[v]
        size = st.clen[c]
        lab = st.lab
        i = lab.index(v, c, c + size)
        lab[c], lab[i] = lab[i], lab[c]
        st.clen[c] = 1
        st.clen[c + 1] = size - 1
        for p in range(c + 1, c + size):
            st.cell[lab[p]] = c + 1
        head = ("ind", c, size)
        if ref is not None and (not ref or ref[0] != head):
            return None
        tail = self.refine(st, [c], None if ref is None else ref, 1)
        if tail is None:
            return None
        return [head] + tail


def _vertex_keys(g: Graph, colors: Optional[Sequence] = None) -> list:
    keys = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        prof: dict[int, int] = {}
        for d in dist:
            d = -1 if d is None else d
            prof[d] = prof.get(d, 0) + 1
        key = (g.degree(v), tuple(sorted(prof.items())))
        keys.append(key if colors is None else (colors[v],) + key)
    return keys


@dataclass
class _Path:
    states: list  # state before individualizing at each level
    targets: list
    choices: list
    traces: list  # trace of individualize+refine at each level
    leaf: list


def _reference_path(ref: _Refiner, st: _State) -> _Path:
    path = _Path([], [], [], [], [])
    while not st.discrete():
        c = st.target()
        v = st.lab[c]
        path.states.append(st.copy())
        path.targets.append(c)
        path.choices.append(v)
        path.traces.append(ref.individualize(st, v))
    path.leaf = st.lab[:]
    return path


def _descend(ref: _Refiner, path: _Path, st: _State, level: int, accept):
    if level == len(path.targets):
        return accept(st.lab)
    c = path.targets[level]
    for x in st.members(c):
        st2 = st.copy()
        if ref.individualize(st2, x, path.traces[level]) is None:
            continue
        res = _descend(ref, path, st2, level + 1, accept)
        if res is not None:
            return res
    return None


@dataclass
class AutResult:
    generators: list[tuple[int, ...]]
    base: list[int]
    orbit_lengths: list[int]

    @property
    def order(self) -> int:
        out = 1
        for k in self.orbit_lengths:
            out *= k
        return out


def automorphism_search(g: Graph, colors: Optional[Sequence] = None) -> AutResult:
    """Generators, base and fundamental orbit lengths of Aut(g) (colour-preserving if ``colors``)."""
    n = g.n
    if n == 0:
        return AutResult([], [], [])
    ref = _Refiner(g)
    st0, _ = ref.initial(_vertex_keys(g, colors))
    path = _reference_path(ref, st0)
    leaf = path.leaf

    def accept(lab):
        perm = [0] * n
        for a, b in zip(leaf, lab):
            perm[a] = b
        return tuple(perm) if g.is_automorphism(perm) else None

    gens: list[tuple[int, ...]] = []
    lengths = [1] * len(path.targets)
    for level in reversed(range(len(path.targets))):
        st = path.states[level]
        v = path.choices[level]
        failed: set[int] = set()
        orbit = _orbit(gens, v)
        for w in sorted(st.members(path.targets[level])):
            if w in orbit or w in failed:
                continue
            st2 = st.copy()
            found = None
            if ref.individualize(st2, w, path.traces[level]) is not None:
                found = _descend(ref, path, st2, level + 1, accept)
            if found is None:
                failed.update(_orbit(gens, w))
            else:
                gens.append(found)
                orbit = _orbit(gens, v)
        lengths[level] = len(orbit)
    return AutResult(gens, list(path.choices), lengths)


def _orbit(gens, v) -> set[int]:
    seen = {v}
    queue = [v]
    for x in queue:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def automorphism_group(g: Graph, colors: Optional[Sequence] = None) -> PermGroup:
    res = automorphism_search(g, colors)
    return PermGroup(res.generators, g.n)


def automorphism_order(g: Graph) -> int:
    return automorphism_search(g).order


def are_isomorphic(g: Graph, h: Graph) -> Optional[list[int]]:
    """A vertex map ``phi`` with uv in g iff phi[u]phi[v] in h, or None."""
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees) != sorted(h.degrees):
        return None
    if g.n == 0:
        return []
    kg, kh = _vertex_keys(g), _vertex_keys(h)
    if sorted(kg) != sorted(kh):
        return None
    rg, rh = _Refiner(g), _Refiner(h)
    sg, tg = rg.initial(kg)
    sh, th = rh.initial(kh)
    if tg != th:
        return None
    path = _reference_path(rg, sg)
    leaf = path.leaf

    def accept(lab):
        phi = [0] * g.n
        for a, b in zip(leaf, lab):
            phi[a] = b
        ok = all(h.has_edge(phi[u], phi[v]) for u, v in g.edges())
        return phi if ok else None

    return _descend(rh, path, sh, 0, accept)


# -- transitivity ladder ------------------------------------------------------


def _edge_act(p, e):
    a, b = p[e[0]], p[e[1]]
    return (a, b) if a < b else (b, a)


def _arc_act(p, a):
    return tuple(p[x] for x in a)


def s_arcs(g: Graph, s: int) -> list[tuple[int, ...]]:
    """All s-arcs (walks v0..vs with v_{i-1} != v_{i+1}) in lexicographic order."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    arcs = [(v,) for v in range(g.n)]
    for _ in range(s):
        nxt = []
        for a in arcs:
            back = a[-2] if len(a) > 1 else -1
            for w in g.neighbors[a[-1]]:
                if w != back:
                    nxt.append(a + (w,))
        arcs = nxt
    return arcs


def count_s_arcs(g: Graph, s: int) -> int:
    return len(s_arcs(g, s))


def _tuple_orbit_size(gens, start: tuple) -> int:
    seen = {start}
    queue = [start]
    for a in queue:
        for p in gens:
            b = tuple(p[x] for x in a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen)


def is_s_arc_transitive(g: Graph, s: int, group: Optional[PermGroup] = None) -> bool:
    arcs = s_arcs(g, s)
    if not arcs:
        return False
    grp = group or automorphism_group(g)
    gens = [p.image for p in grp.generators]
    return _tuple_orbit_size(gens, arcs[0]) == len(arcs)


def is_s_arc_regular(g: Graph, s: int, group: Optional[PermGroup] = None) -> bool:
    grp = group or automorphism_group(g)
    return is_s_arc_transitive(g, s, grp) and grp.order() == count_s_arcs(g, s)


def max_s_arc_transitivity(g: Graph, group: Optional[PermGroup] = None) -> Optional[int]:
    """Largest s with Aut transitive on s-arcs; None if not even vertex-transitive.

    The loop is capped at the girth (the vertex count for forests), so for
    cycles, which are s-arc-transitive for every s, the cap is returned.
    """
    grp = group or automorphism_group(g)
    if not is_s_arc_transitive(g, 0, grp):
        return None
    gth = girth(g)
    cap = gth if gth is not None else g.n
    best = 0
    for s in range(1, cap + 1):
        if not is_s_arc_transitive(g, s, grp):
            break
        best = s
    return best


def arc_digraph(g: Graph, s: int) -> "Digraph":
    """Shunting digraph on s-arcs: (v0..vs) -> (v1..vs, x)."""
    arcs = s_arcs(g, s)
    index = {a: i for i, a in enumerate(arcs)}
    succ = []
    for a in arcs:
        back = a[-2] if len(a) > 1 else -1
        out = []
        for w in g.neighbors[a[-1]]:
            if s == 0 or w != back:
                out.append(index[a[1:] + (w,)])
        succ.append(sorted(out))
    return Digraph(arcs, succ)


@dataclass
class Digraph:
    labels: list
    succ: list[list[int]]

    @property
    def n(self) -> int:
        return len(self.succ)

    def is_strongly_connected(self) -> bool:
        if self.n == 0:
            return True
        pred: list[list[int]] = [[] for _ in range(self.n)]
        for u, out in enumerate(self.succ):
            for w in out:
                pred[w].append(u)
        return _reach_all(self.succ) and _reach_all(pred)


def _reach_all(adj) -> bool:
    seen = [False] * len(adj)
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return all(seen)


def is_strongly_connected(d: Digraph) -> bool:
    return d.is_strongly_connected()


@dataclass
class SymmetryCertificate:
    aut_order: int
    generators: list[list[int]]
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    max_s_arc_transitive: Optional[int]
    s_arc_regular: Optional[int]
    distance_transitive: Optional[bool]
    semisymmetric: bool
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def distance_transitive(g: Graph, group: Optional[PermGroup] = None) -> Optional[bool]:
    """None for disconnected graphs."""
    if not is_connected(g):
        return None
    grp = group or automorphism_group(g)
    gens = [p.image for p in grp.generators]
    n = g.n
    parent = list(range(n * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for x in range(n):
            px = p[x] * n
            for y in range(n):
                a, b = find(x * n + y), find(px + p[y])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    count = sum(1 for i in range(n * n) if find(i) == i)
    return count == diameter(g) + 1


def transitivity(g: Graph) -> SymmetryCertificate:
    res = automorphism_search(g)
    grp = PermGroup(res.generators, g.n)
    gens = res.generators
    vorb = len(orbits_of(gens, g.n))
    edges = g.edges()
    arcs = g.arcs()
    eorb = len(orbits_on(gens, edges, _edge_act)) if edges else 0
    aorb = len(orbits_on(gens, arcs, _arc_act)) if arcs else 0
    vt = vorb == 1
    et = eorb == 1
    at = aorb == 1 and vt
    max_s = max_s_arc_transitivity(g, grp) if vt and arcs else (0 if vt else None)
    s_reg = None
    if max_s is not None and max_s >= 1 and grp.order() == count_s_arcs(g, max_s):
        s_reg = max_s
    dt = distance_transitive(g, grp) if vt else (False if is_connected(g) else None)
    semi = bool(edges) and g.regularity() is not None and et and not vt
    return SymmetryCertificate(
        aut_order=res.order,
        generators=[list(p) for p in gens],
        vertex_orbits=vorb,
        edge_orbits=eorb,
        arc_orbits=aorb,
        vertex_transitive=vt,
        edge_transitive=et,
        arc_transitive=at,
        max_s_arc_transitive=max_s,
        s_arc_regular=s_reg,
        distance_transitive=dt,
        semisymmetric=semi,
    )


def is_vertex_transitive(g: Graph) -> bool:
    return len(orbits_of(automorphism_search(g).generators, g.n)) == 1
