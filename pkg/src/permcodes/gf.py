"""Exact arithmetic in GF(p^m), plus prime and prime-power utilities.

Elements of GF(p^m) are encoded as integers 0..q-1: the base-p digits of the
code, least significant first, are the coefficients of the representative
polynomial (constant term first).  The canonical element order a_0, a_1, ...
used everywhere else in the package is simply code order, so a_0 = 0 and
a_1 = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotAPrimePower, ParameterError, SpecMismatch


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the desk-scale inputs used here."""
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


@dataclass(frozen=True)
class PrimePower:
    p: int
    m: int
    q: int


def factor_prime_power(q: int) -> PrimePower:
    """Split q into (p, m) with q = p^m and p prime, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    p = q
    for f in range(2, q + 1):
        if f * f > q:
            break
        if q % f == 0:
            p = f
            break
    m = 0
    t = q
    while t % p == 0:
        t //= p
        m += 1
    if t != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    return PrimePower(p, m, q)


def is_prime_power(n: int) -> bool:
    try:
        factor_prime_power(n)
        return True
    except NotAPrimePower:
        return False


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    if n < 2:
        raise ParameterError("next_prime requires n >= 2")
    k = n
    while not is_prime(k):
        k += 1
    return k


def next_prime_power(n: int) -> int:
    """Smallest prime power >= n."""
    if n < 2:
        raise ParameterError("next_prime_power requires n >= 2")
    k = n
    while not is_prime_power(k):
        k += 1
    return k


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Polynomials are tuples of coefficients in
# 0..p-1, constant term first, with no trailing zeros (() is the zero poly).


def _pstrip(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _pmul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pstrip(tuple(out))


def _pmod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    # mod must be monic
    r = list(a)
    while r and r[-1] == 0:
        r.pop()
    while len(r) >= len(mod):
        lead = r[-1]
        shift = len(r) - len(mod)
        for i, c in enumerate(mod):
            r[shift + i] = (r[shift + i] - lead * c) % p
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _monic_polys(degree: int, p: int):
    """Yield monic polynomials of the given degree in constant-first lex order."""
    for tail in itertools.product(range(p), repeat=degree):
        yield tail + (1,)


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    deg = len(f) - 1
    for t in range(1, deg // 2 + 1):
        for g in _monic_polys(t, p):
            if not _pmod(f, g, p):
                return False
    return True


# ---------------------------------------------------------------------------


class FieldSpec:
    """A concrete GF(p^m) with a deterministic modulus and code-level ops.

    The modulus is the lexicographically smallest (constant-first coefficient
    order) monic irreducible polynomial of degree m over GF(p); for m = 1 it
    is x itself, stored as (0, 1).
    """

    __slots__ = ("p", "m", "q", "modulus", "_add", "_mul", "_neg", "_inv")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._add = None
        self._mul = None
        self._neg = None
        self._inv = None

    # -- encoding -----------------------------------------------------------

    def _digits(self, code: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(code % p)
            code //= p
        return tuple(out)

    def _encode(self, poly: tuple[int, ...]) -> int:
        code = 0
        for c in reversed(poly):
            code = code * self.p + c
        return code

    # -- code-level arithmetic ----------------------------------------------

    def add_code(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode(tuple((x + y) % p for x, y in zip(da, db)))

    def neg_code(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        return self._encode(tuple((-x) % p for x in self._digits(a)))

    def sub_code(self, a: int, b: int) -> int:
        return self.add_code(a, self.neg_code(b))

    def mul_code(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        pa = _pstrip(self._digits(a))
        pb = _pstrip(self._digits(b))
        return self._encode(_pmod(_pmul(pa, pb, self.p), self.modulus, self.p))

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_code(self.inv_code(a), -e)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul_code(out, base)
            base = self.mul_code(base, base)
            e >>= 1
        return out

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow_code(a, self.q - 2)

    # -- tables and elements --------------------------------------------------

    def tables(self) -> tuple[list[list[int]], list[list[int]], list[int], list[int]]:
        """(add, mul, neg, inv) lookup tables; built once, inv[0] is None."""
        if self._add is None:
            q = self.q
            self._add = [[self.add_code(a, b) for b in range(q)] for a in range(q)]
            self._mul = [[self.mul_code(a, b) for b in range(q)] for a in range(q)]
            self._neg = [self.neg_code(a) for a in range(q)]
            self._inv = [None] + [self.inv_code(a) for a in range(1, q)]
        return self._add, self._mul, self._neg, self._inv

    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ParameterError(f"element code {code} out of range for GF({self.q})")
        return FieldElement(self, code)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        """All q elements in canonical (code) order."""
        return [FieldElement(self, c) for c in range(self.q)]

    # -- identity ---------------------------------------------------------------

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(q={self.q}, p={self.p}, m={self.m}, modulus={self.modulus})"


_SPEC_CACHE: dict[int, FieldSpec] = {}


def field_make(q: int) -> FieldSpec:
    """Deterministically build GF(q); same q always yields the same spec."""
    spec = _SPEC_CACHE.get(q)
    if spec is not None:
        return spec
    pp = factor_prime_power(q)
    if pp.m == 1:
        modulus: tuple[int, ...] = (0, 1)
    else:
        modulus = None
        for f in _monic_polys(pp.m, pp.p):
            if _is_irreducible(f, pp.p):
                modulus = f
                break
        assert modulus is not None
    spec = FieldSpec(pp.p, pp.m, modulus)
    _SPEC_CACHE[q] = spec
    return spec


class FieldElement:
    """One element of a FieldSpec, with operator arithmetic."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        self.spec = spec
        self.code = code

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if self.spec != other.spec:
            raise SpecMismatch("elements belong to different field specs")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec.add_code(self.code, other.code))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec.sub_code(self.code, other.code))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec.mul_code(self.code, other.code))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.neg_code(self.code))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow_code(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv_code(self.code))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.code == other.code
        )

    def __hash__(self):
        return hash((self.spec, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"GF({self.spec.q}):{self.code}"
