"""Finite fields GF(p^m) as explicit addition and multiplication tables.

Element ``x`` encodes the polynomial whose coefficient of ``t^i`` is the
i-th base-p digit of ``x``.  For m > 1 the modulus is the monic irreducible
of degree m whose low coefficients, read as a base-p integer, are smallest.
"""

from __future__ import annotations

from functools import lru_cache


class FieldError(ValueError):
    pass


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, m) with q == p**m, or None."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(x % p)
        x //= p
    return out


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic, coefficients low to high
    a = a[:]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(poly: list[int], p: int) -> bool:
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            div = _digits(low, p, d) + [1]
            if not any(_poly_mod(poly, div, p)[:d]):
                return False
    return True


def conway_free_modulus(p: int, m: int) -> list[int]:
    for low in range(p**m):
        poly = _digits(low, p, m) + [1]
        if _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


class FiniteField:
    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None:
            raise FieldError(f"{q} is not a prime power")
        self.q = q
        self.p, self.m = pm
        p, m = pm
        self.modulus = conway_free_modulus(p, m) if m > 1 else [0, 1]
        digits = [_digits(x, p, m) for x in range(q)]
        enc = {tuple(d): x for x, d in enumerate(digits)}
        self.add_table = tuple(
            tuple(enc[tuple((a + b) % p for a, b in zip(digits[x], digits[y]))] for y in range(q)) for x in range(q)
        )
        mul = []
        for x in range(q):
            row = []
            for y in range(q):
                prod = [0] * (2 * m - 1)
                for i, a in enumerate(digits[x]):
                    if a:
                        for j, b in enumerate(digits[y]):
                            prod[i + j] += a * b
                red = _poly_mod(prod, self.modulus, p) if m > 1 else [prod[0] % p]
                row.append(enc[tuple(red)])
            mul.append(tuple(row))
        self.mul_table = tuple(mul)
        self.neg_table = tuple(next(y for y in range(q) if self.add_table[x][y] == 0) for x in range(q))
        self.inv_table = tuple(
            None if x == 0 else next(y for y in range(q) if self.mul_table[x][y] == 1) for x in range(q)
        )
        self.nonzero_squares = frozenset(self.mul_table[x][x] for x in range(1, q))

    def __repr__(self):
        return f"FiniteField({self.q})"

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def sub(self, x: int, y: int) -> int:
        return self.add_table[x][self.neg_table[y]]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[x]

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            acc = self.add_table[acc][self.mul_table[a][b]]
        return acc

    def scale(self, c: int, u) -> tuple[int, ...]:
        return tuple(self.mul_table[c][a] for a in u)

    def vadd(self, u, v) -> tuple[int, ...]:
        return tuple(self.add_table[a][b] for a, b in zip(u, v))


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    return FiniteField(q)
