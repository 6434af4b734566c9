"""Abstract finite groups given by Cayley tables, and their subgroups."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .perm import Permutation, closure


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Elements are 0..order-1; ``table[a][b]`` is the product ``a*b``."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence | None = None, _verify: bool = True):
        self.table = tuple(tuple(r) for r in table)
        n = len(self.table)
        self.order = n
        if any(len(r) != n for r in self.table):
            raise GroupError("table is not square")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise GroupError("table entry out of range")
        ids = [e for e in range(n) if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n))]
        if not ids:
            raise GroupError("no identity element")
        self.identity = ids[0]
        inv = []
        for x in range(n):
            ys = [y for y in range(n) if self.table[x][y] == self.identity]
            if len(ys) != 1 or self.table[ys[0]][x] != self.identity:
                raise GroupError(f"element {x} has no two-sided inverse")
            inv.append(ys[0])
        self.inverse_table = tuple(inv)
        self.labels = list(labels) if labels is not None else list(range(n))
        if _verify:
            self._check_associative()

    def _check_associative(self, sample: int = 20000):
        n = self.order
        t = self.table
        if n <= 64:
            triples: Iterable = product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"not associative at ({a}, {b}, {c})")

    @classmethod
    def from_table(cls, table) -> "FiniteGroup":
        return cls(table)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        if n < 1:
            raise GroupError("cyclic group needs n >= 1")
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], _verify=False)

    @classmethod
    def abelian(cls, moduli: Sequence[int]) -> "FiniteGroup":
        """Z_{m1} x ... x Z_{mk}, tuples in row-major order."""
        elems = list(product(*[range(m) for m in moduli]))
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[tuple((x + y) % m for x, y, m in zip(a, b, moduli))] for b in elems] for a in elems]
        return cls(table, labels=elems, _verify=False)

    @classmethod
    def from_permutations(cls, gens: Sequence[Permutation | Sequence[int]], bound: int = 10**5) -> "FiniteGroup":
        """Closure of permutation generators; elements sorted, so the identity is 0.

        Products compose left to right: ``a*b`` applies ``a`` first.
        """
        raw = [g.image if isinstance(g, Permutation) else tuple(g) for g in gens]
        if not raw:
            raise GroupError("need at least one generator")
        elems = sorted(closure(raw, bound))
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[tuple(b[i] for i in a)] for b in elems] for a in elems]
        return cls(table, labels=elems, _verify=False)

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        if n == 1:
            return cls([[0]], labels=[(0,)], _verify=False)
        tr = tuple([1, 0] + list(range(2, n)))
        cyc = tuple(list(range(1, n)) + [0])
        return cls.from_permutations([tr, cyc])

    @classmethod
    def dihedral(cls, n: int) -> "FiniteGroup":
        """Symmetries of the n-gon as permutations of its vertices."""
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((-i) % n for i in range(n))
        return cls.from_permutations([rot, ref])

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def generated(self, elements: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by the given elements."""
        gens = list(dict.fromkeys(elements))
        seen = {self.identity}
        queue = [self.identity]
        for x in queue:
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def subgroup(self, elements: Iterable[int]) -> "Subgroup":
        return Subgroup(self, frozenset(elements))

    def regular_permutations(self) -> list[tuple[int, ...]]:
        """Right-regular representation: element g acts by x -> x*g."""
        return [tuple(self.table[x][g] for x in range(self.order)) for g in range(self.order)]


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup
    elements: frozenset

    def __post_init__(self):
        g = self.group
        if g.identity not in self.elements:
            raise GroupError("subset does not contain the identity")
        for a in self.elements:
            if g.inv(a) not in self.elements:
                raise GroupError("subset not closed under inverses")
            for b in self.elements:
                if g.mul(a, b) not in self.elements:
                    raise GroupError("subset not closed under products")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def right_cosets(self) -> list[frozenset]:
        """Cosets Hg, ordered by least element."""
        g = self.group
        seen: set[int] = set()
        out = []
        for x in range(g.order):
            if x in seen:
                continue
            cos = frozenset(g.mul(h, x) for h in self.elements)
            seen |= cos
            out.append(cos)
        return out

    def left_cosets(self) -> list[frozenset]:
        """Cosets gH, ordered by least element."""
        g = self.group
        seen: set[int] = set()
        out = []
        for x in range(g.order):
            if x in seen:
                continue
            cos = frozenset(g.mul(x, h) for h in self.elements)
            seen |= cos
            out.append(cos)
        return out

    def index(self) -> int:
        return self.group.order // len(self.elements)

    def core(self) -> frozenset:
        """Intersection of all conjugates."""
        g = self.group
        out = set(self.elements)
        for x in range(g.order):
            out &= {g.mul(g.mul(g.inv(x), h), x) for h in self.elements}
        return frozenset(out)

    def is_conjugate_to(self, other: "Subgroup") -> bool:
        g = self.group
        for x in range(g.order):
            if frozenset(g.mul(g.mul(g.inv(x), h), x) for h in self.elements) == other.elements:
                return True
        return False
