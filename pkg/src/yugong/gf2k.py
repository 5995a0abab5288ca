"""Binary extension fields GF(2^n) with exp/log tables.

Field elements are plain ints holding the coefficient vector of a polynomial
residue (bit i is the coefficient of x^i). Moduli are bitmasks of degree n,
so x^4 + x + 1 is ``0x13``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_DEGREE = 32
# exp/log tables above this degree would need more than 64 MiB each
TABLE_DEGREE_LIMIT = 24


class FieldError(ValueError):
    pass


class _Infinity:
    """Discrete log of zero; also marks a zero column in a shift sequence."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


# -- polynomial arithmetic over GF(2), polynomials as int bitmasks ----------

def poly_degree(a: int) -> int:
    return a.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    n = poly_degree(m)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= m
    return r


def poly_powmod(a: int, e: int, m: int) -> int:
    r = 1
    a = poly_mod(a, m)
    while e:
        if e & 1:
            r = poly_mulmod(r, a, m)
        a = poly_mulmod(a, a, m)
        e >>= 1
    return r


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return out


def is_irreducible(modulus: int) -> bool:
    """Rabin's test: x^(2^n) = x mod f and gcd(x^(2^(n/p)) - x, f) = 1."""
    n = poly_degree(modulus)
    if n < 1:
        return False
    if n == 1:
        return True
    if not modulus & 1:
        return False

    def x_pow_2_pow(j):
        r = 2
        for _ in range(j):
            r = poly_mulmod(r, r, modulus)
        return r

    if x_pow_2_pow(n) != poly_mod(2, modulus):
        return False
    for p in _prime_factors(n):
        if poly_gcd(modulus, x_pow_2_pow(n // p) ^ 2) != 1:
            return False
    return True


def multiplicative_order_of_x(modulus: int) -> int:
    """Order of the class of x modulo an irreducible ``modulus``."""
    n = poly_degree(modulus)
    order = (1 << n) - 1
    for p in _prime_factors(order):
        while order % p == 0 and poly_powmod(2, order // p, modulus) == 1:
            order //= p
    return order


def is_primitive(modulus: int) -> bool:
    n = poly_degree(modulus)
    if not modulus & 1 or not is_irreducible(modulus):
        return False
    return multiplicative_order_of_x(modulus) == (1 << n) - 1


def primitive_polynomials(n: int):
    """Yield the primitive polynomials of degree n in increasing mask order."""
    for m in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_primitive(m):
            yield m


def default_modulus(n: int) -> int:
    return next(primitive_polynomials(n))


# -- the field ---------------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    """GF(2^n) built on a primitive modulus; the generator is the class of x."""

    degree: int
    modulus: int

    @property
    def generator(self) -> int:
        return poly_mod(2, self.modulus)

    @property
    def size(self) -> int:
        return 1 << self.degree

    @property
    def order(self) -> int:
        """Order of the multiplicative group, 2^n - 1."""
        return (1 << self.degree) - 1

    @cached_property
    def exp_table(self) -> np.ndarray:
        if self.degree > TABLE_DEGREE_LIMIT:
            raise FieldError(
                f"exp/log tables for degree {self.degree} exceed the limit "
                f"of {TABLE_DEGREE_LIMIT}")
        out = np.empty(self.order, dtype=np.uint32)
        x = 1
        n, m = self.degree, self.modulus
        for i in range(self.order):
            out[i] = x
            x <<= 1
            if (x >> n) & 1:
                x ^= m
        out.setflags(write=False)
        return out

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[x] for x != 0; entry 0 holds -1."""
        out = np.full(self.size, -1, dtype=np.int64)
        out[self.exp_table] = np.arange(self.order, dtype=np.int64)
        out.setflags(write=False)
        return out

    def exp(self, i: int) -> int:
        return int(self.exp_table[i % self.order])

    def log(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("log of zero")
        return int(self.log_table[x])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.degree > TABLE_DEGREE_LIMIT:
            return poly_mulmod(a, b, self.modulus)
        return self.exp(self.log(a) + self.log(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        if self.degree > TABLE_DEGREE_LIMIT:
            return poly_powmod(a, e % self.order, self.modulus)
        return self.exp(self.log(a) * e)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 1)

    def frobenius_sum(self, x: int, step: int, count: int) -> int:
        """x + x^(2^step) + ... + x^(2^(step*(count-1)))."""
        acc = 0
        y = x
        for _ in range(count):
            acc ^= y
            y = self.pow(y, 1 << step)
        return acc

    def contains(self, x: int) -> bool:
        return 0 <= x < self.size


def build_field(n: int, modulus: int | None = None) -> FieldContext:
    """Build GF(2^n); with no modulus, use the smallest primitive one."""
    if not isinstance(n, int) or not 1 <= n <= MAX_DEGREE:
        raise FieldError(f"degree must be in 1..{MAX_DEGREE}, got {n!r}")
    if modulus is None:
        modulus = default_modulus(n)
    else:
        if poly_degree(modulus) != n:
            raise FieldError(
                f"modulus {modulus:#x} has degree {poly_degree(modulus)}, expected {n}")
        if not is_irreducible(modulus):
            raise FieldError(f"modulus {modulus:#x} is not irreducible over GF(2)")
        if not modulus & 1:
            raise FieldError(f"modulus {modulus:#x} is divisible by x; x is not a unit")
        order = multiplicative_order_of_x(modulus)
        if order != (1 << n) - 1:
            raise FieldError(
                f"modulus {modulus:#x} is irreducible but not primitive: "
                f"x has order {order}, not {(1 << n) - 1}")
    return FieldContext(degree=n, modulus=modulus)


def trace(ctx: FieldContext, m: int, x: int) -> int:
    """Relative trace from GF(2^n) down to the subfield GF(2^m)."""
    n = ctx.degree
    if m < 1 or n % m:
        raise FieldError(f"trace degree {m} does not divide field degree {n}")
    if not ctx.contains(x):
        raise FieldError(f"{x:#x} is not an element of GF(2^{n})")
    return ctx.frobenius_sum(x, m, n // m)


def dlog(ctx: FieldContext, x: int):
    """Index i with generator^i = x, or INF for x = 0."""
    if x == 0:
        return INF
    if not ctx.contains(x):
        raise FieldError(f"{x:#x} is not an element of GF(2^{ctx.degree})")
    return ctx.log(x)


def absolute_trace_mask(ctx: FieldContext) -> int:
    """Mask t with Tr_1^n(x) = parity(x & t), from the traces of 1, x, ..., x^(n-1)."""
    t = 0
    for i in range(ctx.degree):
        if trace(ctx, 1, 1 << i):
            t |= 1 << i
    return t
