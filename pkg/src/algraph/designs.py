"""Incidence structures, t-designs, Steiner systems and small finite geometries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Optional, Sequence

from .families import FANO_LINES, duads, synthemes
from .fields import gf, prime_power
from .graph import Graph, from_edges


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceStructure:
    """Points 0..v-1 and a tuple of blocks, each a sorted tuple of points."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.v < 0:
            raise DesignError("negative point count")
        norm = tuple(tuple(sorted(b)) for b in self.blocks)
        for b in norm:
            if any(not 0 <= p < self.v for p in b):
                raise DesignError(f"block {b} has a point outside 0..{self.v - 1}")
            if len(set(b)) != len(b):
                raise DesignError(f"block {b} repeats a point")
        if len(set(norm)) != len(norm):
            raise DesignError("repeated block")
        object.__setattr__(self, "blocks", norm)

    @classmethod
    def from_blocks(cls, v: int, blocks: Iterable[Iterable[int]]) -> "IncidenceStructure":
        return cls(v, tuple(tuple(b) for b in blocks))

    @property
    def b(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def uniform_size(self) -> Optional[int]:
        sizes = set(self.block_sizes())
        return sizes.pop() if len(sizes) == 1 else None

    def replication(self) -> list[int]:
        r = [0] * self.v
        for blk in self.blocks:
            for p in blk:
                r[p] += 1
        return r

    def dual(self) -> "IncidenceStructure":
        """Blocks become points; point p becomes the block of blocks through p."""
        through = [[] for _ in range(self.v)]
        for i, blk in enumerate(self.blocks):
            for p in blk:
                through[p].append(i)
        return IncidenceStructure(self.b, tuple(tuple(t) for t in through))

    def is_partial_linear_space(self) -> bool:
        """Any two points lie together in at most one block."""
        seen: set[tuple[int, int]] = set()
        for blk in self.blocks:
            for pair in combinations(blk, 2):
                if pair in seen:
                    return False
                seen.add(pair)
        return True

    def relabel_points(self, perm: Sequence[int]) -> "IncidenceStructure":
        return IncidenceStructure(self.v, tuple(sorted(tuple(sorted(perm[p] for p in b)) for b in self.blocks)))


def levi_graph(s: IncidenceStructure) -> Graph:
    """Points 0..v-1, then blocks v..v+b-1, joined by membership."""
    return from_edges(s.v + s.b, [(p, s.v + i) for i, blk in enumerate(s.blocks) for p in blk])


def block_intersection_graph(s: IncidenceStructure) -> Graph:
    sets = [frozenset(b) for b in s.blocks]
    return from_edges(s.b, [(i, j) for i, j in combinations(range(s.b), 2) if sets[i] & sets[j]])


# -- designs -----------------------------------------------------------------


@dataclass(frozen=True)
class DesignParams:
    t: int
    v: int
    k: int
    lam: int

    def __post_init__(self):
        for s in range(self.t + 1):
            if lambda_s(self, s).denominator != 1:
                raise DesignError(f"lambda_{s} is not an integer for {self}")

    @property
    def lambdas(self) -> tuple[int, ...]:
        """(lambda_0, ..., lambda_t); lambda_0 = b and lambda_1 = r."""
        return tuple(int(lambda_s(self, s)) for s in range(self.t + 1))

    @property
    def b(self) -> int:
        return self.lambdas[0]

    @property
    def r(self) -> int:
        return self.lambdas[1] if self.t >= 1 else self.b * self.k // self.v

    @property
    def fisher(self) -> bool:
        """b >= v (meaningful for 2-designs with k < v)."""
        return self.b >= self.v

    @property
    def symmetric(self) -> bool:
        return self.b == self.v

    def __str__(self):
        return f"{self.t}-({self.v},{self.k},{self.lam})"


def lambda_s(p: DesignParams, s: int) -> Fraction:
    """Blocks through a fixed s-subset: lambda_t C(v-s, t-s) / C(k-s, t-s)."""
    if not 0 <= s <= p.t:
        raise DesignError(f"need 0 <= s <= t, got s = {s}")
    return Fraction(p.lam * comb(p.v - s, p.t - s), comb(p.k - s, p.t - s))


def is_t_design(s: IncidenceStructure, t: int) -> Optional[DesignParams]:
    """Parameters when every t-subset of points lies in the same positive number of blocks."""
    k = s.uniform_size()
    if k is None or t < 0 or t > k or not s.blocks:
        return None
    counts: dict[tuple[int, ...], int] = {}
    for blk in s.blocks:
        for sub in combinations(blk, t):
            counts[sub] = counts.get(sub, 0) + 1
    if len(counts) != comb(s.v, t):
        return None
    values = set(counts.values())
    if len(values) != 1:
        return None
    lam = values.pop()
    try:
        params = DesignParams(t, s.v, k, lam)
    except DesignError:
        return None
    # the closed formulas must agree with direct counts
    assert params.b == s.b
    if t >= 1:
        assert set(s.replication()) == {params.r}
    assert params.b * k == s.v * params.r
    return params


def is_steiner(s: IncidenceStructure, t: int) -> bool:
    p = is_t_design(s, t)
    return p is not None and p.lam == 1


@dataclass(frozen=True)
class SteinerCounts:
    """lambda_p for p = 0..t of a putative S(t, k, v): (b, r, ..., 1)."""

    t: int
    k: int
    v: int
    values: tuple[Fraction, ...]

    @property
    def integral(self) -> tuple[bool, ...]:
        return tuple(x.denominator == 1 for x in self.values)

    @property
    def admissible(self) -> bool:
        return all(self.integral)

    @property
    def b(self) -> Fraction:
        return self.values[0]

    @property
    def r(self) -> Fraction:
        return self.values[1]


def steiner_counts(t: int, k: int, v: int) -> SteinerCounts:
    if not 1 < t < k < v:
        raise DesignError(f"need 1 < t < k < v, got t={t}, k={k}, v={v}")
    values = tuple(Fraction(comb(v - p, t - p), comb(k - p, t - p)) for p in range(t + 1))
    return SteinerCounts(t, k, v, values)


def contraction(s: IncidenceStructure, x: int, t: int) -> IncidenceStructure:
    """Blocks through x with x deleted, points above x shifted down by one."""
    if t < 3:
        raise DesignError("contraction needs t >= 3; at t = 2 the result is not a Steiner system")
    if not 0 <= x < s.v:
        raise DesignError(f"point {x} outside 0..{s.v - 1}")
    if not is_steiner(s, t):
        raise DesignError(f"input is not a Steiner system with t = {t}")
    shift = lambda p: p - 1 if p > x else p  # noqa: E731
    blocks = tuple(tuple(shift(p) for p in blk if p != x) for blk in s.blocks if x in blk)
    out = IncidenceStructure(s.v - 1, blocks)
    if not is_steiner(out, t - 1):
        raise AssertionError("contraction failed to produce a Steiner system")
    return out


# -- finite geometries ---------------------------------------------------------


def fano_plane() -> IncidenceStructure:
    return IncidenceStructure(7, FANO_LINES)


def projective_points(q: int, dim: int) -> list[tuple[int, ...]]:
    """Vectors of F_q^dim with first nonzero coordinate 1, in lexicographic order."""
    out = []
    for vec in product(range(q), repeat=dim):
        nz = next((c for c in vec if c), None)
        if nz == 1:
            out.append(vec)
    return out


def _check_q(q: int, top: int):
    if prime_power(q) is None or q > top:
        raise DesignError(f"q must be a prime power <= {top}, got {q}")


def pg2(q: int) -> IncidenceStructure:
    """Points and lines of PG(2, q); line i is the kernel of the i-th normalized covector."""
    _check_q(q, 16)
    F = gf(q)
    pts = projective_points(q, 3)
    blocks = [tuple(i for i, p in enumerate(pts) if F.dot(n, p) == 0) for n in pts]
    return IncidenceStructure(len(pts), tuple(blocks))


def symplectic_form(F, u, v) -> int:
    """u^T H v with H = [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]]."""
    t1 = F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]))
    t2 = F.sub(F.mul(u[2], v[3]), F.mul(u[3], v[2]))
    return F.add(t1, t2)


def _normalize(F, vec) -> tuple[int, ...]:
    nz = next(c for c in vec if c)
    return F.scale(F.inv(nz), vec)


def w_quadrangle(q: int) -> IncidenceStructure:
    """All points of PG(3, q); lines are the totally isotropic 2-spaces, sorted by their point sets."""
    _check_q(q, 5)
    F = gf(q)
    pts = projective_points(q, 4)
    index = {p: i for i, p in enumerate(pts)}
    lines: set[tuple[int, ...]] = set()
    for i, j in combinations(range(len(pts)), 2):
        u, w = pts[i], pts[j]
        if symplectic_form(F, u, w) != 0:
            continue
        span = {index[_normalize(F, F.vadd(F.scale(a, u), F.scale(c, w)))]
                for a in range(q) for c in range(q) if a or c}
        lines.add(tuple(sorted(span)))
    return IncidenceStructure(len(pts), tuple(sorted(lines)))


def perfect_matchings(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Perfect matchings of K_n, each as sorted pairs, in lexicographic order."""
    def rec(rest: tuple[int, ...]):
        if not rest:
            yield ()
            return
        a = rest[0]
        for j in range(1, len(rest)):
            b = rest[j]
            for tail in rec(rest[1:j] + rest[j + 1:]):
                yield ((a, b),) + tail
    return sorted(rec(tuple(range(n))))


def gq22_from_k6() -> IncidenceStructure:
    """Points are the 15 edges of K6 (lex), lines its 15 perfect matchings (lex)."""
    edges = list(combinations(range(6), 2))
    index = {e: i for i, e in enumerate(edges)}
    return IncidenceStructure(15, tuple(tuple(sorted(index[e] for e in m)) for m in perfect_matchings(6)))


def duad_syntheme() -> IncidenceStructure:
    """Duads as points, synthemes as blocks, in the order used by the Tutte-Coxeter graph."""
    index = {d: i for i, d in enumerate(duads())}
    return IncidenceStructure(15, tuple(tuple(sorted(index[d] for d in s)) for s in synthemes()))


def duad_path_count(a: int, b: int) -> int:
    """Synthemes containing both duads a and b (3 when a == b)."""
    ds = list(duad_syntheme().blocks)
    return sum(1 for s in ds if a in s and b in s)


def affine_lines_f3() -> IncidenceStructure:
    """STS(9): lines of AG(2, 3), point (x, y) at index 3x + y."""
    lines = set()
    for p in product(range(3), repeat=2):
        for d in ((0, 1), (1, 0), (1, 1), (1, 2)):
            pts = tuple(sorted(3 * ((p[0] + s * d[0]) % 3) + (p[1] + s * d[1]) % 3 for s in range(3)))
            lines.add(pts)
    return IncidenceStructure(9, tuple(sorted(lines)))


def affine_planes_f2() -> IncidenceStructure:
    """S(3, 4, 8): planes of AG(3, 2), vector x at index x (bit i = coordinate i)."""
    planes = set()
    for a, b in combinations(range(1, 8), 2):
        for off in range(8):
            planes.add(tuple(sorted({off, off ^ a, off ^ b, off ^ a ^ b})))
    return IncidenceStructure(8, tuple(sorted(planes)))


def is_generalized_quadrangle(s: IncidenceStructure) -> bool:
    """Partial linear space where each point off a line is collinear with exactly one of its points."""
    if not s.is_partial_linear_space():
        return False
    collinear = [set() for _ in range(s.v)]
    for blk in s.blocks:
        for p in blk:
            collinear[p] |= set(blk) - {p}
    for blk in s.blocks:
        for p in range(s.v):
            if p in blk:
                continue
            if sum(1 for x in blk if x in collinear[p]) != 1:
                return False
    return True
