"""Permutations and permutation groups.

Points are 0..n-1 and groups act on the right: ``x ** (p * q) == (x ** p) ** q``,
i.e. ``p * q`` applies ``p`` first.  Orders and membership come from a base and
strong generating set built by Schreier-Sims.
"""

from __future__ import annotations

import random
import re
import threading
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Optional, Sequence


class PermError(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    """Raised instead of enumerating a group above the configured size bound."""


# -- raw tuple helpers (hot paths work on plain tuples) ----------------------


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(q[i] for i in p)


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _is_id(p: tuple) -> bool:
    return all(i == j for i, j in enumerate(p))


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise PermError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
        image = list(range(n))
        stripped = re.sub(r"\s+", " ", text.strip())
        if not re.fullmatch(r"(\(\s?(\d+( \d+)*)?\s?\)\s?)*", stripped):
            raise PermError(f"bad cycle notation: {text!r}")
        seen: set[int] = set()
        for body in re.findall(r"\(([^)]*)\)", stripped):
            pts = [int(x) for x in body.replace(",", " ").split()]
            if any(p >= n for p in pts) or seen & set(pts) or len(set(pts)) != len(pts):
                raise PermError(f"bad cycle {body!r} for degree {n}")
            seen.update(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                image[a] = b
        return cls(tuple(image))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __rpow__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise PermError("degree mismatch")
        return Permutation(_mul(self.image, other.image))

    def __invert__(self) -> "Permutation":
        return Permutation(_inv(self.image))

    inverse = __invert__

    def is_identity(self) -> bool:
        return _is_id(self.image)

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.image) if i == j]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.image[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.image[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles including fixed points."""
        return len(self.cycles()) + len(self.fixed_points())

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


# -- Schreier-Sims -----------------------------------------------------------


class _Level:
    __slots__ = ("point", "gens", "trans")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple] = []
        # trans[x] maps the base point to x
        self.trans: dict[int, tuple] = {}

    def rebuild(self, ident: tuple):
        trans = {self.point: ident}
        queue = [self.point]
        for x in queue:
            ux = trans[x]
            for g in self.gens:
                y = g[x]
                if y not in trans:
                    trans[y] = _mul(ux, g)
                    queue.append(y)
        self.trans = trans


class _StabChain:
    def __init__(self, n: int, gens: list[tuple], base_prefix: Sequence[int] = (), seed: int = 0):
        self.n = n
        self.ident = tuple(range(n))
        self.levels: list[_Level] = [_Level(b) for b in base_prefix]
        gens = [g for g in dict.fromkeys(gens) if not _is_id(g)]
        for g in gens:
            self._extend_base(g)
        for i, lev in enumerate(self.levels):
            lev.gens = [g for g in gens if all(g[self.levels[j].point] == self.levels[j].point for j in range(i))]
            lev.rebuild(self.ident)
        if gens:
            self._random_phase(gens, random.Random(seed))
        self._deterministic_phase()

    def _extend_base(self, h: tuple) -> int:
        if all(h[lev.point] == lev.point for lev in self.levels):
            moved = next(i for i, j in enumerate(h) if i != j)
            self.levels.append(_Level(moved))
        return len(self.levels)

    def strip(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self.levels)):
            lev = self.levels[i]
            x = g[lev.point]
            u = lev.trans.get(x)
            if u is None:
                return g, i
            g = _mul(g, _inv(u))
        return g, len(self.levels)

    def _random_phase(self, gens: list[tuple], rng: random.Random):
        # product replacement; a run of sifts to the identity ends the phase
        pool = list(gens) * max(1, 5 // len(gens) + 1)
        acc = self.ident
        quiet = 0
        while quiet < 20:
            i, j = rng.sample(range(len(pool)), 2) if len(pool) > 1 else (0, 0)
            pool[i] = _mul(pool[i], pool[j]) if i != j else _mul(pool[i], pool[i])
            acc = _mul(acc, pool[i])
            h, j = self.strip(acc)
            if j == len(self.levels) and _is_id(h):
                quiet += 1
            else:
                quiet = 0
                self._add_sifted(h, j)

    def _add_sifted(self, h: tuple, j: int):
        # h fixes base points 0..j-1, so it belongs to levels 0..j
        if j == len(self.levels):
            self._extend_base(h)
            self.levels[-1].gens = []
        for lev in self.levels[: j + 1]:
            lev.gens.append(h)
            lev.rebuild(self.ident)

    def _deterministic_phase(self):
        i = len(self.levels) - 1
        while i >= 0:
            lev = self.levels[i]
            restart = None
            for beta, ub in list(lev.trans.items()):
                for s in lev.gens:
                    g = _mul(_mul(ub, s), _inv(lev.trans[s[beta]]))
                    if _is_id(g):
                        continue
                    h, j = self.strip(g, i + 1)
                    if j < len(self.levels) or not _is_id(h):
                        if j == len(self.levels):
                            self._extend_base(h)
                            self.levels[-1].gens = []
                        for lev2 in self.levels[i + 1 : j + 1]:
                            lev2.gens.append(h)
                            lev2.rebuild(self.ident)
                        restart = j
                        break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self.levels]

    def order(self) -> int:
        out = 1
        for lev in self.levels:
            out *= len(lev.trans)
        return out


class PermGroup:
    """Group generated by permutations of 0..degree-1.

    The stabiliser chain is built lazily on first use, under a lock, and is
    read-only afterwards.
    """

    def __init__(self, generators: Iterable[Permutation | Sequence[int]], degree: Optional[int] = None):
        gens = [g.image if isinstance(g, Permutation) else tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise PermError("degree required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise PermError("generator degree mismatch")
            Permutation(g)
        self.degree = degree
        self._gens = gens
        self._chain: Optional[_StabChain] = None
        self._lock = threading.Lock()

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        if n <= 1:
            return cls([], n)
        cyc = tuple(list(range(1, n)) + [0])
        tr = tuple([1, 0] + list(range(2, n)))
        return cls([tr, cyc], n)

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation(g) for g in self._gens]

    def chain(self, base_prefix: Sequence[int] = ()) -> _StabChain:
        if base_prefix:
            return _StabChain(self.degree, self._gens, base_prefix)
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _StabChain(self.degree, self._gens)
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def base(self) -> list[int]:
        return self.chain().base

    def contains(self, p: Permutation | Sequence[int]) -> bool:
        g = p.image if isinstance(p, Permutation) else tuple(p)
        if len(g) != self.degree:
            raise PermError("degree mismatch")
        h, j = self.chain().strip(g)
        return j == len(self.chain().levels) and _is_id(h)

    __contains__ = contains

    def _check_point(self, x: int):
        if not 0 <= x < self.degree:
            raise PermError(f"point {x} outside 0..{self.degree - 1}")

    def orbit(self, x: int) -> list[int]:
        """The orbit of ``x`` in discovery order."""
        self._check_point(x)
        seen = {x}
        queue = [x]
        for y in queue:
            for g in self._gens:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return queue

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted lists, ordered by least element."""
        return orbits_of(self._gens, self.degree)

    def stabilizer(self, x: int) -> "PermGroup":
        self._check_point(x)
        ch = self.chain(base_prefix=(x,))
        gens = ch.levels[1].gens if len(ch.levels) > 1 else []
        return PermGroup(gens, self.degree)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        for x in points:
            self._check_point(x)
        if not points:
            return self
        ch = self.chain(base_prefix=tuple(points))
        k = len(points)
        gens = ch.levels[k].gens if len(ch.levels) > k else []
        return PermGroup(gens, self.degree)

    def elements(self, bound: int = 10**6) -> Iterator[Permutation]:
        for g in self._raw_elements(bound):
            yield Permutation(g)

    def _raw_elements(self, bound: int = 10**6) -> Iterator[tuple]:
        ch = self.chain()
        if ch.order() > bound:
            raise GroupTooLarge(f"group order {ch.order()} exceeds enumeration bound {bound}")
        transversals = [list(lev.trans.values()) for lev in reversed(ch.levels)]
        for combo in product(*transversals):
            g = ch.ident
            for u in combo:
                g = _mul(g, u)
            yield g

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def is_semiregular(self) -> bool:
        """No non-identity element fixes a point, i.e. every point stabiliser is trivial."""
        for orb in self.orbits():
            if self.stabilizer(orb[0]).order() != 1:
                return False
        return True

    def is_regular_action(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def burnside_orbit_count(self, fix_counter: Callable[[Permutation], int], bound: int = 10**6) -> int:
        """Average number of fixed objects over the group; exact."""
        total = sum(fix_counter(Permutation(g)) for g in self._raw_elements(bound))
        order = self.order()
        if total % order:
            raise ArithmeticError("fixed-point total not divisible by the group order")
        return total // order

    # -- blocks and orbitals --------------------------------------------------

    def _require_transitive(self):
        if not self.is_transitive():
            raise PermError("group is not transitive")

    def minimal_block(self, a: int, b: int) -> list[int]:
        """Smallest block containing ``a`` and ``b``."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(b)] = find(a)
        pending = [(a, b)]
        while pending:
            x, y = pending.pop()
            for g in self._gens:
                u, v = find(g[x]), find(g[y])
                if u != v:
                    parent[v] = u
                    pending.append((u, v))
        root = find(a)
        return [x for x in range(self.degree) if find(x) == root]

    def blocks(self) -> Optional[list[list[int]]]:
        """A nontrivial block system, or None if the group is primitive."""
        self._require_transitive()
        for x in range(1, self.degree):
            blk = self.minimal_block(0, x)
            if len(blk) < self.degree:
                return self.block_system(blk)
        return None

    def block_system(self, block: Sequence[int]) -> list[list[int]]:
        """Images of ``block`` under the group, sorted by least element."""
        first = tuple(sorted(block))
        seen = {first}
        queue = [first]
        for blk in queue:
            for g in self._gens:
                img = tuple(sorted(g[x] for x in blk))
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return sorted(list(b) for b in seen)

    def is_primitive(self) -> bool:
        return self.blocks() is None

    def orbitals(self) -> list[list[tuple[int, int]]]:
        """Orbits on ordered pairs, diagonal first, others ordered by least pair."""
        self._require_transitive()
        n = self.degree
        pair_gens = [g for g in self._gens]
        parent = list(range(n * n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in pair_gens:
            for x in range(n):
                gx = g[x]
                for y in range(n):
                    a, b = find(x * n + y), find(gx * n + g[y])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        groups: dict[int, list[tuple[int, int]]] = {}
        for p in range(n * n):
            groups.setdefault(find(p), []).append(divmod(p, n))
        return sorted(groups.values(), key=lambda orb: (orb[0][0] != orb[0][1], orb[0]))

    def rank(self) -> int:
        return len(self.orbitals())

    def is_generously_transitive(self) -> bool:
        for orb in self.orbitals():
            members = set(orb)
            x, y = orb[0]
            if (y, x) not in members:
                return False
        return True


def orbits_of(gens: Sequence[tuple], n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return list(groups.values())


def orbits_on(gens: Sequence[tuple], objects: Sequence, act: Callable[[tuple, object], object]) -> list[list]:
    """Orbits of the group generated by ``gens`` on a finite invariant set of hashable objects."""
    index = {obj: i for i, obj in enumerate(objects)}
    parent = list(range(len(objects)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, obj in enumerate(objects):
            a, b = find(i), find(index[act(g, obj)])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list] = {}
    for i, obj in enumerate(objects):
        groups.setdefault(find(i), []).append(obj)
    return list(groups.values())


def closure(gens: Sequence[tuple], bound: int = 10**5) -> list[tuple]:
    """All elements of the generated group by breadth-first multiplication."""
    if not gens:
        raise PermError("closure of an empty generator list needs the degree")
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in gens:
            y = _mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if len(seen) > bound:
                    raise GroupTooLarge(f"closure exceeds {bound} elements")
    return queue
