"""Constructors for the named graphs.

Labelings are part of the contract, so tests can name vertices:

* Fano plane: points 0..6 stand for 1..7, lines are ``FANO_LINES`` in order.
* Johnson graphs list k-subsets of 0..v-1 in colex order.
* Hoffman-Singleton: the 35 triples of 0..6 in colex order, then the 15
  heptads of the orbit containing ``H0``, sorted.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb
from typing import Callable

from .fields import FieldError, gf, prime_power
from .graph import Graph, GraphError, from_edges
from .perm import orbits_on

# Fano lines {123, 145, 167, 246, 257, 347, 356}, shifted to 0-based points
FANO_LINES: tuple[tuple[int, int, int], ...] = tuple(
    tuple(int(c) - 1 for c in s) for s in ("123", "145", "167", "246", "257", "347", "356")
)
H0 = frozenset(FANO_LINES)


def colex_subsets(v: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(v), k), key=lambda s: s[::-1])


# -- classic families ---------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return from_edges(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    return from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def classic(kind: str, *params: int) -> Graph:
    table: dict[str, Callable[..., Graph]] = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "complete_bipartite": complete_bipartite,
        "empty": empty,
    }
    if kind not in table:
        raise GraphError(f"unknown classic family {kind!r}")
    return table[kind](*params)


def hypercube(k: int) -> Graph:
    if k < 1:
        raise GraphError("hypercube dimension must be >= 1")
    n = 1 << k
    return from_edges(n, [(x, x ^ (1 << b)) for x in range(n) for b in range(k) if not x >> b & 1])


def johnson(v: int, k: int, i: int) -> Graph:
    """k-subsets of 0..v-1 (colex order), adjacent when they meet in exactly i points."""
    if not v >= k >= i >= 0:
        raise GraphError("johnson graph needs v >= k >= i >= 0")
    subsets = colex_subsets(v, k)
    sets = [frozenset(s) for s in subsets]
    edges = [(a, b) for a, b in combinations(range(len(sets)), 2) if len(sets[a] & sets[b]) == i]
    return from_edges(len(sets), edges)


def kneser(v: int, k: int) -> Graph:
    return johnson(v, k, 0)


def odd_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError("odd graph needs k >= 1")
    return johnson(2 * k + 1, k, 0)


def petersen() -> Graph:
    return johnson(5, 2, 0)


def paley(q: int) -> Graph:
    if prime_power(q) is None:
        raise GraphError(f"{q} is not a prime power")
    if q % 4 != 1:
        raise GraphError(f"Paley graph needs q = 1 mod 4, got {q}")
    F = gf(q)
    sq = F.nonzero_squares
    return from_edges(q, [(x, y) for x, y in combinations(range(q), 2) if F.sub(x, y) in sq])


def hamming(d: int, q: int) -> Graph:
    """q^d tuples in row-major order, adjacent when they differ in one coordinate."""
    if d < 1 or q < 2:
        raise GraphError("hamming graph needs d >= 1 and q >= 2")
    n = q**d
    edges = []
    for x in range(n):
        for pos in range(d):
            w = q ** (d - 1 - pos)
            digit = x // w % q
            for val in range(digit + 1, q):
                edges.append((x, x + (val - digit) * w))
    return from_edges(n, edges)


def circulant(n: int, jumps) -> Graph:
    s = {j % n for j in jumps} | {(-j) % n for j in jumps}
    if 0 in s:
        raise GraphError("connection set contains 0")
    return from_edges(n, [(x, (x + j) % n) for x in range(n) for j in s if x < (x + j) % n])


# -- Fano-derived graphs ------------------------------------------------------


def heawood() -> Graph:
    """Points 0..6 then lines 7..13 in ``FANO_LINES`` order."""
    return from_edges(14, [(p, 7 + i) for i, line in enumerate(FANO_LINES) for p in line])


def coxeter_triples() -> list[tuple[int, int, int]]:
    lines = set(FANO_LINES)
    return [t for t in colex_subsets(7, 3) if t not in lines]


def coxeter() -> Graph:
    """Non-line triples of the Fano plane (colex), adjacent when disjoint."""
    ts = [frozenset(t) for t in coxeter_triples()]
    return from_edges(28, [(a, b) for a, b in combinations(range(28), 2) if not ts[a] & ts[b]])


def coxeter_antiflag() -> Graph:
    """Anti-flags (p, l) with p not on l, ordered by (p, line index); adjacency l | l' | {p, p'} = all points."""
    flags = [(p, i) for p in range(7) for i, line in enumerate(FANO_LINES) if p not in line]
    points = frozenset(range(7))
    edges = []
    for a, b in combinations(range(len(flags)), 2):
        (p, i), (q, j) = flags[a], flags[b]
        if set(FANO_LINES[i]) | set(FANO_LINES[j]) | {p, q} == points:
            edges.append((a, b))
    return from_edges(len(flags), edges)


def duads() -> list[tuple[int, int]]:
    return list(combinations(range(6), 2))


def synthemes() -> list[tuple[tuple[int, int], ...]]:
    out = []
    for a, b in combinations(duads(), 2):
        if set(a) & set(b):
            continue
        rest = tuple(sorted(set(range(6)) - set(a) - set(b)))
        s = tuple(sorted([a, b, rest]))
        if s not in out:
            out.append(s)
    return sorted(out)


def tutte_coxeter() -> Graph:
    """Duads 0..14 (lex) then synthemes 15..29 (lex), joined by containment."""
    ds = duads()
    index = {d: i for i, d in enumerate(ds)}
    edges = [(index[d], 15 + j) for j, s in enumerate(synthemes()) for d in s]
    return from_edges(30, edges)


# -- heptads and Hoffman-Singleton --------------------------------------------


def _a7_generators() -> list[tuple[int, ...]]:
    three = (1, 2, 0, 3, 4, 5, 6)
    seven = (1, 2, 3, 4, 5, 6, 0)
    return [three, seven]


def _act_heptad(g, heptad):
    return frozenset(tuple(sorted(g[x] for x in t)) for t in heptad)


def triads() -> list[frozenset]:
    """Sets of three triples sharing one point and otherwise partitioning the rest."""
    out = []
    for x in range(7):
        others = [p for p in range(7) if p != x]
        seen = set()
        for a in combinations(others, 2):
            for b in combinations([p for p in others if p not in a], 2):
                c = tuple(p for p in others if p not in a and p not in b)
                key = frozenset(tuple(sorted((x,) + pair)) for pair in (a, b, c))
                if key not in seen:
                    seen.add(key)
                    out.append(key)
    return out


def all_heptads() -> list[frozenset]:
    """All 30 heptads found by exhaustive search, sorted."""
    triples = colex_subsets(7, 3)
    sets = [frozenset(t) for t in triples]
    found = []

    def extend(chosen: list[int], start: int):
        if len(chosen) == 7:
            found.append(frozenset(triples[i] for i in chosen))
            return
        for i in range(start, len(triples)):
            if all(len(sets[i] & sets[j]) == 1 for j in chosen):
                chosen.append(i)
                extend(chosen, i + 1)
                chosen.pop()

    extend([], 0)
    return sorted(found, key=lambda h: sorted(h))


def heptads() -> tuple[list[frozenset], list[frozenset]]:
    """The two Alt(7)-orbits (O1 containing H0, then O2), each sorted."""
    hs = all_heptads()
    orbs = orbits_on(_a7_generators(), hs, _act_heptad)
    o1 = next(o for o in orbs if H0 in o)
    o2 = [h for h in hs if h not in o1]
    key = lambda h: sorted(h)  # noqa: E731
    return sorted(o1, key=key), sorted(o2, key=key)


def hoffman_singleton() -> Graph:
    triples = colex_subsets(7, 3)
    tindex = {t: i for i, t in enumerate(triples)}
    o1, _ = heptads()
    edges = []
    sets = [frozenset(t) for t in triples]
    for a, b in combinations(range(35), 2):
        if not sets[a] & sets[b]:
            edges.append((a, b))
    for h, hept in enumerate(o1):
        for t in hept:
            edges.append((tindex[t], 35 + h))
    return from_edges(50, edges)


# -- other named graphs -------------------------------------------------------


def folkman() -> Graph:
    """K5 vertex i copy c is 2i+c (0..9); the midpoint of K5 edge j (lex) is 10+j."""
    edges = []
    for j, (a, b) in enumerate(combinations(range(5), 2)):
        for c in range(2):
            edges.append((2 * a + c, 10 + j))
            edges.append((2 * b + c, 10 + j))
    return from_edges(20, edges)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4, element (a, b) at index 4a+b, connection set +-(1,0), +-(0,1), +-(1,1)."""
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a, b in product(range(4), repeat=2):
        for da, db in conn:
            u, w = 4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4
            if u < w:
                edges.append((u, w))
    return from_edges(16, edges)


def asymmetric6() -> Graph:
    """The 6-vertex asymmetric graph with edges 12, 23, 34, 24, 35, 56 (1-based)."""
    return from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 3), (2, 4), (4, 5)])


def johnson_degree(v: int, k: int, i: int) -> int:
    return comb(k, i) * comb(v - k, k - i)


REGISTRY: dict[str, tuple[Callable[..., Graph], int]] = {
    "complete": (complete, 1),
    "empty": (empty, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "johnson": (johnson, 3),
    "kneser": (kneser, 2),
    "odd": (odd_graph, 1),
    "petersen": (petersen, 0),
    "paley": (paley, 1),
    "hamming": (hamming, 2),
    "heawood": (heawood, 0),
    "coxeter": (coxeter, 0),
    "tutte_coxeter": (tutte_coxeter, 0),
    "hoffman_singleton": (hoffman_singleton, 0),
    "folkman": (folkman, 0),
    "shrikhande": (shrikhande, 0),
    "asymmetric6": (asymmetric6, 0),
}


_FIXED_ORDER = {
    "petersen": 10,
    "heawood": 14,
    "coxeter": 28,
    "tutte_coxeter": 30,
    "hoffman_singleton": 50,
    "folkman": 20,
    "shrikhande": 16,
    "asymmetric6": 6,
}


def family_order(name: str, *params: int) -> int:
    """Vertex count of ``build(name, *params)`` without building it (parameters unchecked)."""
    if name in _FIXED_ORDER:
        return _FIXED_ORDER[name]
    p = params
    if name in ("complete", "empty", "cycle", "path", "paley"):
        return p[0]
    if name == "complete_bipartite":
        return p[0] + p[1]
    if name == "hypercube":
        return 2 ** max(p[0], 0)
    if name in ("johnson", "kneser"):
        return comb(p[0], p[1]) if 0 <= p[1] <= p[0] else 0
    if name == "odd":
        return comb(2 * p[0] + 1, p[0]) if p[0] >= 0 else 0
    if name == "hamming":
        return p[1] ** p[0] if p[0] >= 0 and p[1] >= 0 else 0
    raise GraphError(f"unknown family {name!r}")


def build(name: str, *params: int) -> Graph:
    if name not in REGISTRY:
        raise GraphError(f"unknown family {name!r}")
    fn, arity = REGISTRY[name]
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} integer parameter(s), got {len(params)}")
    try:
        return fn(*params)
    except FieldError as exc:
        raise GraphError(str(exc)) from None
