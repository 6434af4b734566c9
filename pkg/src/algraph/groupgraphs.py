"""Graphs built from groups: Cayley, coset, double coset and Frucht graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .aut import Digraph, automorphism_group
from .graph import Graph, from_edges
from .groups import FiniteGroup, GroupError, Subgroup
from .perm import GroupTooLarge, _inv, _is_id, _mul


class LoopError(GroupError):
    """Connection set contains the identity."""


class DirectedError(GroupError):
    """Connection set is not closed under inverses."""


def _connection_set(G: FiniteGroup, C: Iterable[int]) -> frozenset[int]:
    C = frozenset(C)
    bad = [c for c in C if not 0 <= c < G.order]
    if bad:
        raise GroupError(f"connection set element {bad[0]} is not a group element")
    return C


def cayley_digraph(G: FiniteGroup, C: Iterable[int]) -> Digraph:
    """Arc g -> c*g for every c in C."""
    C = _connection_set(G, C)
    if G.identity in C:
        raise LoopError("identity in connection set gives loops")
    succ = tuple(tuple(sorted(G.mul(c, g) for c in C)) for g in range(G.order))
    return Digraph(tuple(range(G.order)), succ)


def cayley_graph(G: FiniteGroup, C: Iterable[int]) -> Graph:
    """Vertex i is group element i; g ~ h iff h g^-1 lies in C."""
    C = _connection_set(G, C)
    if G.identity in C:
        raise LoopError("identity in connection set gives loops")
    if any(G.inv(c) not in C for c in C):
        raise DirectedError("connection set not closed under inverses; the Cayley graph is directed")
    return from_edges(G.order, [(g, G.mul(c, g)) for g in range(G.order) for c in C if g < G.mul(c, g)])


def _element_order(p: tuple) -> int:
    q, k = p, 1
    while not _is_id(q):
        q = _mul(q, p)
        k += 1
    return k


def _largest_prime_factor(n: int) -> int:
    p, out = 2, 1
    while p * p <= n:
        while n % p == 0:
            out, n = p, n // p
        p += 1
    return max(out, n)


def _regular_subgroup(group, n: int, bound: int) -> Optional[dict[int, tuple]]:
    """A regular subgroup as a map v -> its unique element sending 0 to v.

    A regular subgroup R contains a fixed-point-free element x of prime order
    p (the largest prime dividing n).  Conjugating R inside Aut we may assume
    x(0) is a representative of its Stab(0)-orbit and x is a representative
    of its Stab(0, x(0))-conjugacy class, so the search starts from <x> for
    each such representative and then extends one vertex at a time.
    """
    if group.order() > bound:
        raise GroupTooLarge(f"|Aut| = {group.order()} exceeds the bound {bound}")
    ch = group.chain(base_prefix=(0,))
    trans = ch.levels[0].trans
    stab_group = group.stabilizer(0)
    stab = list(stab_group._raw_elements(bound))
    ident = tuple(range(n))

    def fpf(p: tuple) -> bool:
        return all(p[x] != x for x in range(n))

    cands: dict[int, list[tuple]] = {}

    def candidates(v: int) -> list[tuple]:
        if v not in cands:
            t = trans[v]
            cands[v] = [p for p in (_mul(s, t) for s in stab) if fpf(p) and n % _element_order(p) == 0]
        return cands[v]

    def close(elems: dict[int, tuple], gens: list[tuple]) -> Optional[dict[int, tuple]]:
        out = dict(elems)
        queue = list(elems.values())
        for x in queue:
            for s in gens:
                y = _mul(x, s)
                prev = out.get(y[0])
                if prev is None:
                    if y[0] != 0 and not fpf(y):
                        return None
                    out[y[0]] = y
                    queue.append(y)
                    if len(out) > n:
                        return None
                elif prev != y:
                    return None
        if n % len(out):
            return None
        return out

    def search(elems: dict[int, tuple], gens: list[tuple]) -> Optional[dict[int, tuple]]:
        if len(elems) == n:
            return elems
        v = next(x for x in range(n) if x not in elems)
        for g in candidates(v):
            nxt = close(elems, gens + [g])
            if nxt is not None:
                found = search(nxt, gens + [g])
                if found is not None:
                    return found
        return None

    p = _largest_prime_factor(n)
    for orb in stab_group.orbits():
        v = orb[0]
        if v == 0:
            continue
        sub = [c for c in candidates(v) if _element_order(c) == p]
        if not sub:
            continue
        two = group.pointwise_stabilizer((0, v))._gens
        reps: list[tuple] = []
        seen: set[tuple] = set()
        for x in sub:
            if x in seen:
                continue
            reps.append(x)
            cls = {x}
            queue = [x]
            for y in queue:
                for a in two:
                    z = _mul(_mul(_inv(a), y), a)
                    if z not in cls:
                        cls.add(z)
                        queue.append(z)
            seen |= cls
        for x in reps:
            start = close({0: ident}, [x])
            if start is None:
                continue
            found = search(start, [x])
            if found is not None:
                return found
    return None


def is_cayley(g: Graph, bound: int = 10**7) -> Optional[tuple[FiniteGroup, frozenset[int]]]:
    """Find a regular subgroup of Aut(g) and rebuild g as a Cayley graph.

    Group element i is the automorphism sending vertex 0 to vertex i, so
    the returned Cayley graph is identical (not just isomorphic) to ``g``.
    """
    n = g.n
    group = automorphism_group(g)
    if n == 1:
        return FiniteGroup.cyclic(1), frozenset()
    if len(group.orbit(0)) != n:
        return None
    reg = _regular_subgroup(group, n, bound)
    if reg is None:
        return None
    # product a*b is the element sending 0 to r_b(a): apply r_a, then r_b
    table = [[reg[b][a] for b in range(n)] for a in range(n)]
    G = FiniteGroup(table, labels=[reg[i] for i in range(n)], _verify=False)
    C = frozenset(g.neighbors[0])
    assert cayley_graph(G, C) == g
    return G, C


def _check_subgroup(G: FiniteGroup, H) -> Subgroup:
    if isinstance(H, Subgroup):
        if H.group is not G:
            raise GroupError("subgroup belongs to a different group")
        return H
    return Subgroup(G, frozenset(H))


def coset_graph(G: FiniteGroup, H, K) -> Graph:
    """Bipartite graph on right cosets of H (first) and K (after), joined when they meet."""
    H = _check_subgroup(G, H)
    K = _check_subgroup(G, K)
    hc = H.right_cosets()
    kc = K.right_cosets()
    edges = [(i, len(hc) + j) for i, a in enumerate(hc) for j, b in enumerate(kc) if a & b]
    return from_edges(len(hc) + len(kc), edges)


def double_coset(G: FiniteGroup, H, s: int) -> frozenset[int]:
    H = _check_subgroup(G, H)
    return frozenset(G.mul(G.mul(a, s), b) for a in H.elements for b in H.elements)


def double_cosets(G: FiniteGroup, H) -> list[frozenset[int]]:
    """All H-double cosets, ordered by least element."""
    H = _check_subgroup(G, H)
    seen: set[int] = set()
    out = []
    for s in range(G.order):
        if s not in seen:
            d = double_coset(G, H, s)
            seen |= d
            out.append(d)
    return out


def double_coset_graph(G: FiniteGroup, H, S: Iterable[int]) -> Graph:
    """Vertices are the left cosets gH (ordered by least element); gH ~ g'H iff g^-1 g' in S."""
    H = _check_subgroup(G, H)
    S = _connection_set(G, S)
    hsh = frozenset(G.mul(G.mul(a, s), b) for s in S for a in H.elements for b in H.elements)
    if hsh != S:
        raise GroupError("S is not a union of H-double cosets")
    if any(G.inv(s) not in S for s in S):
        raise DirectedError("S is not closed under inverses; the graph is directed")
    if S & H.elements:
        raise LoopError("S meets H, giving loops")
    cosets = H.left_cosets()
    reps = [min(c) for c in cosets]
    edges = [
        (i, j)
        for i, j in combinations(range(len(cosets)), 2)
        if G.mul(G.inv(reps[i]), reps[j]) in S
    ]
    return from_edges(len(cosets), edges)


def frucht_graph(G: FiniteGroup) -> Graph:
    """Simple graph whose automorphism group is isomorphic to G.

    Vertices 0..n-1 are the group elements.  For every ordered pair (i, j) with
    i != j, in lexicographic order, let k be the colour of g_i g_j^-1, where the
    non-identity elements are coloured 1, 2, ... in element order.  The arc is
    replaced by a path of length k+2 from i to j; each inner vertex carries a
    pendant vertex, except the inner vertex next to j, which carries a path of
    length 2.
    """
    n = G.order
    if n < 2:
        raise GroupError("Frucht construction needs a nontrivial group")
    colour = {}
    for x in range(n):
        if x != G.identity:
            colour[x] = len(colour) + 1
    edges: list[tuple[int, int]] = []
    nxt = n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            k = colour[G.mul(i, G.inv(j))]
            inner = list(range(nxt, nxt + k + 1))
            nxt += k + 1
            chain = [i] + inner + [j]
            edges += list(zip(chain, chain[1:]))
            for v in inner[:-1]:
                edges.append((v, nxt))
                nxt += 1
            edges += [(inner[-1], nxt), (nxt, nxt + 1)]
            nxt += 2
    return from_edges(nxt, edges)


def frucht_size(order: int) -> tuple[int, int]:
    """(vertices, edges) of the Frucht graph of a group of the given order."""
    n = order
    return n + n * (n - 1) * (n + 3), n * (n - 1) * (n + 4)


def regular_representation_in(G: FiniteGroup, group) -> bool:
    """True when every right translation x -> x*g lies in the permutation group."""
    return all(group.contains(p) for p in G.regular_permutations())


def is_core_free(G: FiniteGroup, H) -> bool:
    H = _check_subgroup(G, H)
    return H.core() == frozenset({G.identity})

