"""Table-driven arithmetic in GF(q), q = p^m <= 256.

Elements are the integers ``0 .. q-1``.  The integer ``x`` stands for the
polynomial ``sum(c_i * X^i)`` where ``c_i`` are the base-``p`` digits of
``x`` (least significant first), reduced modulo a fixed monic irreducible
polynomial of degree ``m``.  The modulus is the irreducible polynomial
whose lower coefficients, read as a base-``p`` number, are smallest, so
the labeling is reproducible across runs.

For GF(4) this gives ``X^2 + X + 1`` with ``2 = X`` (often written w) and
``3 = X + 1``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import FieldTooLarge, NotPrimePower

MAX_ORDER = 256


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrimePower(f"q={q} has at least two distinct prime divisors")
    return p, m


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _from_digits(ds, p: int) -> int:
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``f`` (coefficient lists, low first)."""
    a = list(a)
    deg_f = len(f) - 1
    for i in range(len(a) - 1, deg_f - 1, -1):
        c = a[i] % p
        if c:
            shift = i - deg_f
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - c * fj) % p
    return [c % p for c in a[:deg_f]] + [0] * max(0, deg_f - len(a))


def _is_irreducible(f: list[int], p: int) -> bool:
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_poly_mod(f, g, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Coefficients (low first, monic) of the first irreducible of degree ``m``."""
    for code in range(p**m):
        f = _digits(code, p, m) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("an irreducible polynomial exists for every degree")


class Field:
    """The finite field GF(q) with full lookup tables.

    Instances are immutable after construction and are cached by
    :func:`make_field`, so ``make_field(q) is make_field(q)``.
    """

    def __init__(self, q: int):
        p, m = _factor_prime_power(q)
        if q > MAX_ORDER:
            raise FieldTooLarge(f"q={q} exceeds the table limit {MAX_ORDER}")
        self.q, self.p, self.m = q, p, m
        self.modulus = smallest_irreducible(p, m) if m > 1 else (0, 1)

        digits = [_digits(x, p, m) for x in range(q)]
        self.add = tuple(
            tuple(_from_digits([(a + b) % p for a, b in zip(digits[x], digits[y])], p) for y in range(q))
            for x in range(q)
        )
        self.neg = tuple(_from_digits([(-a) % p for a in digits[x]], p) for x in range(q))
        self.sub = tuple(tuple(self.add[x][self.neg[y]] for y in range(q)) for x in range(q))

        def polymul(x: int, y: int) -> int:
            a, b = digits[x], digits[y]
            prod = [0] * (2 * m - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
            if m == 1:
                return prod[0] % p
            return _from_digits(_poly_mod(prod, list(self.modulus), p), p)

        self.mul = tuple(tuple(polymul(x, y) for y in range(q)) for x in range(q))
        inv = [0] * q
        for x in range(1, q):
            inv[x] = next(y for y in range(1, q) if self.mul[x][y] == 1)
        self.inv = tuple(inv)

        def power(x: int, e: int) -> int:
            r = 1
            for _ in range(e):
                r = self.mul[r][x]
            return r

        self.frob = tuple(power(x, p) for x in range(q))
        # frob_pow[e][x] = x^(p^e)
        tables = [tuple(range(q))]
        for _ in range(1, m):
            tables.append(tuple(self.frob[y] for y in tables[-1]))
        self.frob_pow = tuple(tables)

    def __repr__(self) -> str:
        return f"Field(q={self.q})"

    def __reduce__(self):
        return (make_field, (self.q,))

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        for g in range(1, self.q):
            x, order = g, 1
            while x != 1:
                x = self.mul[x][g]
                order += 1
            if order == self.q - 1:
                return g
        raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Return the (cached) field of order ``q``.

    Raises :class:`NotPrimePower` for non prime powers and
    :class:`FieldTooLarge` above 256.
    """
    return Field(q)


def frobenius(F: Field, x: int, e: int = 1) -> int:
    """``x ** (p ** e)``; the exponent ``e`` is taken modulo ``m``."""
    return F.frob_pow[e % F.m][x]
