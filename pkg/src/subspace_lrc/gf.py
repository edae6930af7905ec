"""Exact arithmetic in GF(p^m) and in extensions GF(q^s) of an existing field.

Elements are plain Python ints in range(q), read as base-p digit vectors:
the integer sum(d_i * p**i) stands for the polynomial sum(d_i * x**i) in
GF(p)[x] reduced modulo a fixed irreducible monic polynomial. The modulus
is always the irreducible monic polynomial of the requested degree with
the smallest integer encoding (digits read from the constant term up), so
a context is fully reproducible from its parameters alone. No Conway
polynomial tables and no randomness are involved.

Extensions built with ExtensionContext use the same scheme one level up:
elements of GF(q^s) are base-q digit vectors over the base field, reduced
modulo the smallest irreducible monic degree-s polynomial over GF(q).
"""

from __future__ import annotations

import functools
import re
from typing import Iterable

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    NotPrime,
    OrderTooLarge,
    OutOfRange,
)
from .limits import DEFAULT_TABLE_LIMIT

# Full q x q product tables below this order; log/antilog tables above it.
_MUL_TABLE_MAX = 1 << 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(x: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(x % base)
        x //= base
    return tuple(out)


def _from_digits(ds: Iterable[int], base: int) -> int:
    value = 0
    for d in reversed(tuple(ds)):
        value = value * base + d
    return value


# --- polynomial helpers over an arbitrary coefficient field ----------------
# Polynomials are tuples of coefficient encodings, constant term first,
# with no normalization requirement (trailing zeros allowed).


def _poly_trim(p: tuple[int, ...]) -> tuple[int, ...]:
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], cf) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = cf.add(out[i + j], cf.mul(ai, bj))
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], mod: tuple[int, ...], cf) -> tuple[int, ...]:
    # mod is monic; reduce a in place by long division.
    a = list(a)
    dm = len(mod) - 1
    for top in range(len(a) - 1, dm - 1, -1):
        c = a[top]
        if c == 0:
            continue
        a[top] = 0
        for k in range(dm):
            if mod[k]:
                a[top - dm + k] = cf.sub(a[top - dm + k], cf.mul(c, mod[k]))
    return _poly_trim(tuple(a))


def _poly_divisible(a: tuple[int, ...], d: tuple[int, ...], cf) -> bool:
    # d monic, deg d >= 1
    return not _poly_mod(a, d, cf)


def _monic_polys(degree: int, cf) -> Iterable[tuple[int, ...]]:
    """All monic polynomials of exactly this degree, smallest encoding first."""
    q = cf.q
    for code in range(q**degree):
        yield _digits(code, q, degree) + (1,)


def _is_irreducible(poly: tuple[int, ...], cf) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for div in _monic_polys(d, cf):
            if _poly_divisible(poly, div, cf):
                return False
    return True


def _smallest_irreducible(degree: int, cf) -> tuple[int, ...]:
    for cand in _monic_polys(degree, cf):
        if _is_irreducible(cand, cf):
            return cand
    raise AssertionError("no irreducible polynomial found; unreachable")


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class _PolyField:
    """Shared table-backed arithmetic for a degree-s extension of cf."""

    def __init__(self, cf, degree: int, order_limit: int):
        self.cf = cf
        self.degree = degree
        self.q = cf.q**degree
        if self.q > order_limit:
            raise OrderTooLarge(
                f"field order {cf.q}^{degree} = {self.q} exceeds table limit {order_limit}"
            )
        self.modulus = _smallest_irreducible(degree, cf)
        self._exp, self._log = self._power_tables()

    def _encode(self, poly: tuple[int, ...]) -> int:
        return _from_digits(poly + (0,) * (self.degree - len(poly)), self.cf.q)

    def _decode(self, x: int) -> tuple[int, ...]:
        return _poly_trim(_digits(x, self.cf.q, self.degree))

    def raw_mul(self, a: int, b: int) -> int:
        prod = _poly_mul(self._decode(a), self._decode(b), self.cf)
        return self._encode(_poly_mod(prod, self.modulus, self.cf))

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.raw_mul(result, base)
            base = self.raw_mul(base, base)
            e >>= 1
        return result

    def _power_tables(self) -> tuple[list[int], list[int]]:
        q = self.q
        order = q - 1
        factors = _distinct_prime_factors(order)
        gen = None
        for cand in range(1, q):
            if all(self._raw_pow(cand, order // f) != 1 for f in factors):
                gen = cand
                break
        assert gen is not None, "multiplicative group has a generator"
        exp = [1] * order
        for i in range(1, order):
            exp[i] = self.raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        return exp, log

    def add_fn(self):
        cf, degree = self.cf, self.degree
        if cf.p == 2:
            # base-q digits with q a power of two are bit-aligned: no carries
            return lambda a, b: a ^ b
        cq = cf.q
        cadd = cf.add

        def add(a: int, b: int) -> int:
            out, mult = 0, 1
            for _ in range(degree):
                out += cadd(a % cq, b % cq) * mult
                a //= cq
                b //= cq
                mult *= cq
            return out

        return add

    def neg_fn(self):
        cf, degree = self.cf, self.degree
        if cf.p == 2:
            return lambda a: a
        cq = cf.q
        cneg = cf.neg

        def neg(a: int) -> int:
            out, mult = 0, 1
            for _ in range(degree):
                out += cneg(a % cq) * mult
                a //= cq
                mult *= cq
            return out

        return neg


class _FieldOps:
    """Mixin implementing the element operations from exp/log (+ mul table)."""

    p: int
    q: int

    def _init_ops(self, add_fn, neg_fn, exp: list[int], log: list[int]) -> None:
        self._add = add_fn
        self._neg = neg_fn
        self._exp = exp
        self._log = log
        self._mul_table = None
        if self.q <= _MUL_TABLE_MAX:
            q = self.q
            table = [[0] * q for _ in range(q)]
            order = q - 1
            for a in range(1, q):
                la = log[a]
                row = table[a]
                for b in range(1, q):
                    row[b] = exp[(la + log[b]) % order]
            self._mul_table = table

    def _check(self, *elems: int) -> None:
        for a in elems:
            if not 0 <= a < self.q:
                raise OutOfRange(f"element {a} outside field of order {self.q}")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return self._add(a, b)

    def neg(self, a: int) -> int:
        self._check(a)
        return self._neg(a)

    def sub(self, a: int, b: int) -> int:
        self._check(a, b)
        return self._add(a, self._neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if self._mul_table is not None:
            return self._mul_table[a][b]
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            self._check(a)
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e for e >= 0 (0**0 = 1)."""
        self._check(a)
        if e < 0:
            raise OutOfRange("exponent must be nonnegative")
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]


class FieldContext(_FieldOps):
    """GF(p^m) with integer-encoded elements.

    modulus is the defining polynomial as a coefficient tuple, constant
    term first (for m = 1 it is x itself, i.e. (0, 1)).
    """

    def __init__(self, p: int, m: int, *, table_limit: int | None = None):
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise OutOfRange(f"extension degree must be >= 1, got {m}")
        limit = DEFAULT_TABLE_LIMIT if table_limit is None else table_limit
        self.p = p
        self.m = m
        self.q = p**m
        if self.q > limit:
            raise OrderTooLarge(f"field order {p}^{m} = {self.q} exceeds table limit {limit}")
        if m == 1:
            self.modulus = (0, 1)
            exp, log = self._prime_power_tables(p)
            add = (lambda a, b: a ^ b) if p == 2 else (lambda a, b: (a + b) % p)
            neg = (lambda a: a) if p == 2 else (lambda a: (-a) % p)
            self._init_ops(add, neg, exp, log)
        else:
            engine = _PolyField(FieldContext(p, 1), m, limit)
            self.modulus = engine.modulus
            self._init_ops(engine.add_fn(), engine.neg_fn(), engine._exp, engine._log)

    @staticmethod
    def _prime_power_tables(p: int) -> tuple[list[int], list[int]]:
        order = p - 1
        factors = _distinct_prime_factors(order)
        gen = None
        for cand in range(1, p):
            if all(pow(cand, order // f, p) != 1 for f in factors):
                gen = cand
                break
        assert gen is not None
        exp = [1] * order
        for i in range(1, order):
            exp[i] = (exp[i - 1] * gen) % p
        log = [0] * p
        for i, v in enumerate(exp):
            log[v] = i
        return exp, log

    def descriptor(self) -> str:
        return f"gf({self.p})" if self.m == 1 else f"gf({self.p}^{self.m})"

    def __repr__(self) -> str:
        return f"FieldContext({self.descriptor()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldContext) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash(("FieldContext", self.p, self.m))


class ExtensionContext(_FieldOps):
    """GF(q^s) built as degree-s polynomials over an existing field of order q.

    The basis 1, y, ..., y^(s-1) makes expand/recombine GF(q)-linear: expand
    returns the base-q digit vector of an element, recombine inverts it.
    """

    def __init__(self, base, degree: int, *, table_limit: int | None = None):
        if degree < 1:
            raise OutOfRange(f"extension degree must be >= 1, got {degree}")
        limit = DEFAULT_TABLE_LIMIT if table_limit is None else table_limit
        self.base = base
        self.degree = degree
        self.p = base.p
        self.q = base.q**degree
        engine = _PolyField(base, degree, limit)
        self.modulus = engine.modulus
        self._init_ops(engine.add_fn(), engine.neg_fn(), engine._exp, engine._log)

    @property
    def basis(self) -> tuple[int, ...]:
        """Encodings of 1, y, ..., y^(degree-1)."""
        return tuple(self.base.q**i for i in range(self.degree))

    def expand(self, x: int) -> tuple[int, ...]:
        """Coordinates of x over the base field in the power basis."""
        self._check(x)
        return _digits(x, self.base.q, self.degree)

    def recombine(self, coords: tuple[int, ...]) -> int:
        """Inverse of expand."""
        coords = tuple(coords)
        if len(coords) != self.degree:
            raise DimensionMismatch(
                f"expected {self.degree} coordinates, got {len(coords)}"
            )
        for c in coords:
            if not 0 <= c < self.base.q:
                raise OutOfRange(f"coordinate {c} outside base field of order {self.base.q}")
        return _from_digits(coords, self.base.q)

    def frobenius(self, x: int, i: int = 1) -> int:
        """x raised to the q^i power (q the base field order); frobenius(x, degree) = x."""
        if i < 0:
            raise OutOfRange("frobenius power must be nonnegative")
        return self.pow(x, self.base.q**i)

    def descriptor(self) -> str:
        return f"gf({self.base.q}^{self.degree} over {self.base.descriptor()})"

    def __repr__(self) -> str:
        return f"ExtensionContext({self.descriptor()})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionContext)
            and self.base == other.base
            and self.degree == other.degree
        )

    def __hash__(self) -> int:
        return hash(("ExtensionContext", self.base, self.degree))


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int) -> FieldContext:
    return FieldContext(p, m)


def field_new(p: int, m: int = 1) -> FieldContext:
    """GF(p^m) context; cached, contexts are immutable."""
    return _field_cached(p, m)


@functools.lru_cache(maxsize=None)
def extension_new(base: FieldContext, degree: int) -> ExtensionContext:
    """GF(q^degree) over base; cached."""
    return ExtensionContext(base, degree)


_DESCRIPTOR_RE = re.compile(r"^\s*gf\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*$", re.IGNORECASE)


def parse_field(descriptor: str) -> FieldContext:
    """Parse a field descriptor like gf(2), gf(3), gf(2^4)."""
    match = _DESCRIPTOR_RE.match(descriptor)
    if not match:
        raise OutOfRange(f"cannot parse field descriptor {descriptor!r}")
    p = int(match.group(1))
    m = int(match.group(2)) if match.group(2) else 1
    return field_new(p, m)


def field_from_order(q: int) -> FieldContext:
    """GF(q) for a prime power q, decomposed into (p, m)."""
    if q < 2:
        raise OutOfRange(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    m = 0
    rest = q
    while rest % p == 0 and rest > 1:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return field_new(p, m)
