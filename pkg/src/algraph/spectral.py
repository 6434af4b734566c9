"""Exact regularity certificates: strongly regular parameters, spectra,
intersection arrays, Moore bounds and generalized polygons.

Everything here is integer or rational arithmetic.  Square roots are kept
symbolic as ``(a + sqrt(delta)) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Optional

from .graph import BoundExceeded, Graph, GraphError, bipartition, diameter, girth, is_connected, metrics

CHAR_POLY_LIMIT = 64


def is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


# -- strongly regular graphs -------------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.n - self.k - 1) * self.mu:
            raise ValueError(f"inconsistent SRG parameters {self.astuple()}")

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    def complement(self) -> "SrgParams":
        n, k, lam, mu = self.astuple()
        return SrgParams(n, n - 1 - k, n - 2 - 2 * k + mu, n - 2 * k + lam)


def srg_check(g: Graph) -> Optional[SrgParams]:
    """SRG parameters of g, or None.  The matrix identity is re-checked on the counts found."""
    n = g.n
    k = g.regularity()
    if k is None or k == 0 or k == n - 1:
        return None
    lam = mu = None
    for u, v in combinations(range(n), 2):
        c = (g.adj[u] & g.adj[v]).bit_count()
        if g.adj[u] >> v & 1:
            if lam is None:
                lam = c
            elif c != lam:
                return None
        else:
            if mu is None:
                mu = c
            elif c != mu:
                return None
    # A^2 = kI + lam A + mu (J - I - A), entry by entry
    A = g.adjacency_matrix()
    for u in range(n):
        for v in range(n):
            a2 = sum(A[u][w] * A[w][v] for w in range(n))
            rhs = k if u == v else (lam if A[u][v] else mu)
            if a2 != rhs:
                return None
    return SrgParams(n, k, lam, mu)


@dataclass(frozen=True)
class SrgSpectrum:
    """theta, tau = (a +- sqrt(delta)) / 2 with multiplicities.

    Multiplicities are Fractions, or None when they come out irrational.
    """

    k: int
    a: int
    delta: int
    m_theta: Optional[Fraction]
    m_tau: Optional[Fraction]

    @property
    def rational(self) -> bool:
        return is_square(self.delta)

    @property
    def theta(self) -> Fraction:
        if not self.rational:
            raise ValueError("theta is irrational; use theta_str")
        return Fraction(self.a + isqrt(self.delta), 2)

    @property
    def tau(self) -> Fraction:
        if not self.rational:
            raise ValueError("tau is irrational; use tau_str")
        return Fraction(self.a - isqrt(self.delta), 2)

    def _fmt(self, sign: str) -> str:
        if self.rational:
            return str(self.theta if sign == "+" else self.tau)
        return f"({self.a} {sign} sqrt({self.delta}))/2"

    @property
    def theta_str(self) -> str:
        return self._fmt("+")

    @property
    def tau_str(self) -> str:
        return self._fmt("-")

    @property
    def feasible(self) -> bool:
        ms = (self.m_theta, self.m_tau)
        return all(m is not None and m.denominator == 1 and m >= 0 for m in ms)

    def as_multiset(self) -> dict:
        """Eigenvalue -> multiplicity, with k included; rational spectra only."""
        out = {Fraction(self.k): 1}
        out[self.theta] = out.get(self.theta, 0) + int(self.m_theta)
        out[self.tau] = out.get(self.tau, 0) + int(self.m_tau)
        return out


def srg_spectrum(p: SrgParams) -> SrgSpectrum:
    n, k, lam, mu = p.astuple()
    if not mu < k:
        raise ValueError("spectrum formulas need mu < k")
    a = lam - mu
    delta = a * a + 4 * (k - mu)
    # m_theta, m_tau = ((n-1) -+ (2k + (n-1)a)/sqrt(delta)) / 2
    num = 2 * k + (n - 1) * a
    if num == 0:
        m = Fraction(n - 1, 2)
        return SrgSpectrum(k, a, delta, m, m)
    if not is_square(delta):
        return SrgSpectrum(k, a, delta, None, None)
    r = isqrt(delta)
    return SrgSpectrum(
        k, a, delta, Fraction((n - 1) * r - num, 2 * r), Fraction((n - 1) * r + num, 2 * r)
    )


# -- characteristic polynomial ------------------------------------------------


def _berkowitz(A: list[list[int]]) -> list[int]:
    """det(xI - A), highest degree first, without division."""
    n = len(A)
    # column vector of coefficients for the leading r x r block, highest first
    vect = [1, -A[0][0]] if n else [1]
    for r in range(1, n):
        R = A[r][:r]
        S = [A[i][r] for i in range(r)]
        Mtop = [row[:r] for row in A[:r]]
        t = r + 1
        # Toeplitz column: 1, -a_rr, -R S, -R M S, ...
        col = [1, -A[r][r]]
        vec = S
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, vec)))
            vec = [sum(Mtop[i][j] * vec[j] for j in range(r)) for i in range(r)]
        col = col[: t + 1]
        new = [0] * (t + 1)
        for i in range(t + 1):
            acc = 0
            for j in range(min(i, len(vect) - 1) + 1):
                acc += col[i - j] * vect[j]
            new[i] = acc
        vect = new
    return vect


def char_poly(g: Graph, limit: int = CHAR_POLY_LIMIT) -> list[int]:
    """Integer coefficients of det(xI - A), highest degree first."""
    if g.n > limit:
        raise BoundExceeded(f"characteristic polynomial refused for n = {g.n} > {limit}")
    return _berkowitz(g.adjacency_matrix())


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    while len(a) >= len(b) and any(a):
        c = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= c * b[i]
        a.pop(0)
    return _poly_trim(a) if a else [Fraction(0)]


def poly_gcd(a: list[int], b: list[int]) -> list[Fraction]:
    x = _poly_trim([Fraction(c) for c in a])
    y = _poly_trim([Fraction(c) for c in b])
    while any(y):
        x, y = y, _poly_rem(x, y)
    return [c / x[0] for c in x]


def derivative(p: list[int]) -> list[int]:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [0]


def distinct_eigenvalue_count(g: Graph, limit: int = CHAR_POLY_LIMIT) -> int:
    p = char_poly(g, limit)
    gcd = poly_gcd(p, derivative(p))
    return (len(p) - 1) - (len(gcd) - 1)


def poly_eval(p: list[int], x) -> int:
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def root_multiplicity(p: list[int], x: int) -> int:
    """Multiplicity of the integer root x in p."""
    m = 0
    q = [Fraction(c) for c in p]
    while len(q) > 1 and poly_eval(q, x) == 0:
        # synthetic division by (t - x)
        out = [q[0]]
        for c in q[1:-1]:
            out.append(c + out[-1] * x)
        q = out
        m += 1
    return m


# -- distance-regular graphs --------------------------------------------------


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        if self.c and self.c[0] != 1:
            raise ValueError("c_1 must be 1")
        if any(x < 0 for x in self.b + self.c):
            raise ValueError("negative intersection number")

    @property
    def diameter(self) -> int:
        return len(self.c)

    @property
    def valency(self) -> int:
        return self.b[0]

    @property
    def a(self) -> tuple[int, ...]:
        k = self.valency
        bs = self.b + (0,)
        return tuple(k - bs[i] - self.c[i - 1] for i in range(1, self.diameter + 1))

    def __str__(self):
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


def intersection_array(g: Graph) -> Optional[IntersectionArray]:
    if not is_connected(g):
        raise GraphError("intersection array needs a connected graph")
    dt = metrics(g)
    d = max(max(row) for row in dt.d)
    # layer masks per vertex
    layers = []
    for x in range(g.n):
        masks = [0] * (d + 2)
        for y, dist in enumerate(dt.d[x]):
            masks[dist] |= 1 << y
        layers.append(masks)
    seen: dict[int, tuple[int, int, int]] = {}
    for x in range(g.n):
        for y in range(g.n):
            i = dt.d[x][y]
            ny = g.adj[y]
            c = (layers[x][i - 1] & ny).bit_count() if i else 0
            a = (layers[x][i] & ny).bit_count()
            b = (layers[x][i + 1] & ny).bit_count()
            if seen.setdefault(i, (c, a, b)) != (c, a, b):
                return None
    return IntersectionArray(
        tuple(seen[i][2] for i in range(d)), tuple(seen[i][0] for i in range(1, d + 1))
    )


# -- Moore graphs ------------------------------------------------------------


def moore_bound(k: int, d: int) -> int:
    if k < 2 or d < 1:
        raise ValueError("moore bound needs k >= 2 and d >= 1")
    return 1 + k * sum((k - 1) ** i for i in range(d))


def is_moore(g: Graph) -> bool:
    k = g.regularity()
    if k is None or k < 2 or not is_connected(g):
        return False
    d = diameter(g)
    if d is None or d < 1:
        return False
    by_count = g.n == moore_bound(k, d)
    by_girth = girth(g) == 2 * d + 1
    if by_count != by_girth:
        raise AssertionError("Moore count and girth characterisations disagree")
    return by_count


def moore_d2_feasible(k: int) -> bool:
    """Whether SRG(k^2+1, k, 0, 1) passes the eigenvalue multiplicity test."""
    if k < 2:
        raise ValueError("need k >= 2")
    return srg_spectrum(SrgParams(k * k + 1, k, 0, 1)).feasible


# -- generalized polygons -----------------------------------------------------


@dataclass(frozen=True)
class PolygonOrder:
    d: int
    s: int
    t: int
    thick: bool


def generalized_polygon(g: Graph) -> Optional[PolygonOrder]:
    """Order (s, t): points (vertex 0's side) have valency t+1, lines s+1."""
    parts = bipartition(g)
    if parts is None:
        raise GraphError("generalized polygon test needs a bipartite graph")
    if not is_connected(g) or g.n < 2:
        return None
    d = diameter(g)
    if girth(g) != 2 * d:
        return None
    points, lines = parts
    dp = {g.degree(v) for v in points}
    dl = {g.degree(v) for v in lines}
    if len(dp) != 1 or len(dl) != 1:
        return None
    t, s = dp.pop() - 1, dl.pop() - 1
    return PolygonOrder(d, s, t, min(s, t) >= 2)


def feit_higman_admissible(d: int, s: int, t: int) -> bool:
    """Necessary conditions on (d, s, t) for a generalized d-gon; thin orders always pass."""
    if d < 2 or s < 1 or t < 1:
        return False
    if s < 2 or t < 2:
        return True
    if d not in (3, 4, 6, 8):
        return False
    if d == 4:
        return s <= t * t and t <= s * s
    if d == 6:
        return is_square(s * t) and s <= t**3 and t <= s**3
    if d == 8:
        return is_square(2 * s * t) and s <= t * t and t <= s * s
    return True
