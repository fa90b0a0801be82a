"""Finite fields GF(q) for prime powers q, table driven.

Elements are integers ``0..q-1``: the element ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}``
of GF(p)[x]/(f) is stored as ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_MAX_Q = 32
# Tables are q*q; beyond this the memory cost stops being reasonable.
HARD_MAX_Q = 1024


class FieldError(ValueError):
    pass


def max_q() -> int:
    raw = os.environ.get("GEODETIC_LAB_MAX_Q")
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        value = int(raw)
    except ValueError:
        raise FieldError(f"GEODETIC_LAB_MAX_Q={raw!r} is not an integer") from None
    return min(value, HARD_MAX_Q)


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``; raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


# Polynomials over GF(p): coefficient lists, constant term first, no trailing zeros.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree in increasing integer encoding."""
    for code in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def is_irreducible(f: list[int], p: int) -> bool:
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> list[int]:
    """Least monic irreducible of degree k, ordered by ``sum c_i p^i``."""
    return next(f for f in _monic_polys(p, k) if is_irreducible(f, p))


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    neg_table: tuple[int, ...]
    inv_table: tuple[int, ...]  # inv_table[0] is unused (0)
    generator: int

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def order(self) -> int:
        return self.q

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element_str(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i in range(self.k):
            c = a % self.p
            a //= self.p
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}{'' if i == 0 else '*' + mono}")
        return "+".join(reversed(terms)) or "0"

    def __repr__(self) -> str:
        return f"GF({self.q})"


def _to_poly(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _from_poly(c: list[int], p: int) -> int:
    return sum(v * p**i for i, v in enumerate(c))


@lru_cache(maxsize=None)
def _build(q: int) -> FiniteField:
    p, k = prime_power(q)
    modulus = least_irreducible(p, k) if k > 1 else [0, 1]
    polys = [_to_poly(a, p, k) for a in range(q)]
    add = tuple(
        tuple(_from_poly([(x + y) % p for x, y in zip(polys[a], polys[b])], p) for b in range(q))
        for a in range(q)
    )
    neg = tuple(_from_poly([(-x) % p for x in polys[a]], p) for a in range(q))
    mul_rows = []
    for a in range(q):
        row = []
        for b in range(q):
            prod = [0] * (2 * k - 1)
            for i, x in enumerate(polys[a]):
                if x:
                    for j, y in enumerate(polys[b]):
                        prod[i + j] = (prod[i + j] + x * y) % p
            rem = _poly_mod(prod, modulus, p) if k > 1 else [prod[0] % p]
            row.append(_from_poly(rem, p))
        mul_rows.append(tuple(row))
    mul = tuple(mul_rows)
    inv = [0] * q
    for a in range(1, q):
        inv[a] = next(b for b in range(1, q) if mul[a][b] == 1)
    generator = _find_generator(mul, q)
    return FiniteField(p, k, tuple(modulus), add, mul, neg, tuple(inv), generator)


def _find_generator(mul, q: int) -> int:
    for g in range(1, q):
        x, order = g, 1
        while x != 1:
            x = mul[x][g]
            order += 1
        if order == q - 1:
            return g
    raise FieldError(f"no generator found for GF({q}); modulus is not irreducible")


def build_field(q: int) -> FiniteField:
    """The field of order ``q``; q must be a prime power no larger than :func:`max_q`."""
    prime_power(q)
    bound = max_q()
    if q > bound:
        raise FieldError(f"q={q} exceeds the bound {bound} (set GEODETIC_LAB_MAX_Q to raise it)")
    return _build(q)
