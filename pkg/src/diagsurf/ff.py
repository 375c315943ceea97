"""Finite fields F_{p^m} built deterministically, with log/antilog tables.

Elements are plain integers.  The element c_0 + c_1 x + ... + c_{m-1} x^{m-1}
(reduced modulo the field's defining polynomial) has code
c_0 + c_1 p + ... + c_{m-1} p^{m-1}.  Code 0 is zero and code 1 is one.

The defining polynomial is the lexicographically smallest monic degree-m
polynomial (coefficients compared from the constant term upward) that is
irreducible and has x as a primitive element, so alpha is always the class
of x and the tables follow from repeated multiplication by x.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass

import numpy as np

from .errors import NotADivisor, NotPrime, SizeExceeded, ZeroToNonpositive

DEFAULT_MAX_FIELD = 2**20
# Above this size the Q x Q addition table is not materialized.
_ADD_TABLE_MAX = 1024


def max_field_size() -> int:
    """Field-size bound; overridable through DIAGSURF_MAX_FIELD."""
    return int(os.environ.get("DIAGSURF_MAX_FIELD", DEFAULT_MAX_FIELD))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
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


def _reduce(poly: list[int], lower: tuple[int, ...], p: int) -> list[int]:
    # poly mod (x^m + sum lower[i] x^i), coefficients mod p
    m = len(lower)
    poly = [c % p for c in poly]
    for i in range(len(poly) - 1, m - 1, -1):
        c = poly[i]
        if c:
            poly[i] = 0
            for j in range(m):
                poly[i - m + j] = (poly[i - m + j] - c * lower[j]) % p
    poly = poly[:m]
    return poly + [0] * (m - len(poly))


def _mulmod(a, b, lower, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _reduce(prod, lower, p)


def _x_power(e: int, lower, p) -> list[int]:
    m = len(lower)
    result = _reduce([1], lower, p)
    base = _reduce([0, 1], lower, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, lower, p)
        base = _mulmod(base, base, lower, p)
        e >>= 1
    return result + [0] * (m - len(result))


def _x_is_primitive(lower, p) -> bool:
    """True iff x has multiplicative order p^m - 1 modulo the polynomial.

    That order forces every nonzero residue to be a unit, so the polynomial
    is irreducible as a by-product.
    """
    if lower[0] == 0:
        return False
    m = len(lower)
    order = p**m - 1
    one = [1] + [0] * (m - 1)
    if _x_power(order, lower, p) != one:
        return False
    return all(_x_power(order // ell, lower, p) != one for ell in prime_factors(order))


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Coefficients (constant term first, leading 1 last) of the canonical modulus."""
    for lower in itertools.product(range(p), repeat=m):
        if _x_is_primitive(lower, p):
            return tuple(lower) + (1,)
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.p**self.m


class FieldCtx:
    """A concrete finite field with exp/log tables.

    ``exp[i]`` is the code of alpha^i for 0 <= i < Q-1 and ``log[x]`` the
    exponent of a nonzero code x (``log[0]`` is -1).  The arrays are
    read-only; the context is safe to share between threads.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = p = spec.p
        self.m = m = spec.m
        self.Q = Q = p**m
        self.order = Q - 1
        self.place = np.array([p**i for i in range(m)], dtype=np.int64)

        lower = spec.modulus[:-1]
        exp = np.empty(Q - 1, dtype=np.int64)
        cur = [1] + [0] * (m - 1)
        place = [p**i for i in range(m)]
        for i in range(Q - 1):
            exp[i] = sum(c * w for c, w in zip(cur, place))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * f) % p for c, f in zip(cur, lower)]
        log = np.full(Q, -1, dtype=np.int64)
        log[exp] = np.arange(Q - 1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("log table is not a bijection")

        codes = np.arange(Q, dtype=np.int64)
        digits = (codes[:, None] // self.place[None, :]) % p
        self.exp = exp
        self.log = log
        self.digits = digits.astype(np.int64)
        self.alpha = int(exp[1]) if Q > 2 else 1
        self._neg = self._from_digits((p - self.digits) % p)
        self._add_table = None
        if Q <= _ADD_TABLE_MAX:
            self._add_table = self._from_digits(
                (self.digits[:, None, :] + self.digits[None, :, :]) % p
            )
        for arr in (self.exp, self.log, self.digits, self._neg):
            arr.setflags(write=False)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.spec.modulus})"

    def _from_digits(self, digits):
        return digits @ self.place

    # scalar arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return int(self._from_digits((self.digits[a] + self.digits[b]) % self.p))

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % self.order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp[(-self.log[a]) % self.order])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e <= 0:
                raise ZeroToNonpositive(e)
            return 0
        return int(self.exp[(int(self.log[x]) * e) % self.order])

    # vectorized arithmetic on integer arrays of codes

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._from_digits((self.digits[a] + self.digits[b]) % self.p)

    def vneg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        zero = (a == 0) | (b == 0)
        out = self.exp[(self.log[a] + self.log[b]) % self.order]
        return np.where(zero, 0, out)

    def power_table(self, e: int) -> np.ndarray:
        """Array t with t[x] = x^e for every code x (e >= 1)."""
        if e < 1:
            raise ZeroToNonpositive(e)
        t = np.zeros(self.Q, dtype=np.int64)
        t[1:] = self.exp[(self.log[1:] * e) % self.order]
        return t

    def is_zero_sum(self, digit_acc) -> np.ndarray:
        return (digit_acc % self.p == 0).all(axis=-1)


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int) -> FieldCtx:
    return FieldCtx(FieldSpec(p, m, canonical_modulus(p, m)))


def build_field(p: int, m: int) -> FieldCtx:
    """Return the canonical field of order p^m.

    Repeated calls with the same arguments return the same context object.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    bound = max_field_size()
    if p**m > bound:
        raise SizeExceeded(f"field F_{p}^{m}", p**m, bound)
    return _cached_field(p, m)


@dataclass(frozen=True)
class UnitGroupData:
    """The subgroup U_n = {alpha^(j d)} of n-th roots of unity, n = (Q-1)/d."""

    d: int
    n: int
    members: frozenset
    mask: np.ndarray

    def __contains__(self, x):
        return x in self.members


def unit_group(ctx: FieldCtx, d: int) -> UnitGroupData:
    if d < 1 or ctx.order % d:
        raise NotADivisor(d, ctx.order)
    n = ctx.order // d
    members = ctx.exp[np.arange(n, dtype=np.int64) * d]
    mask = np.zeros(ctx.Q, dtype=bool)
    mask[members] = True
    mask.setflags(write=False)
    return UnitGroupData(d, n, frozenset(int(x) for x in members), mask)


def dth_roots(ctx: FieldCtx, a: int, d: int) -> list[int]:
    """All solutions of x^d = a, sorted by code."""
    if d < 1 or ctx.order % d:
        raise NotADivisor(d, ctx.order)
    if a == 0:
        return [0]
    la = int(ctx.log[a])
    if la % d:
        return []
    n = ctx.order // d
    t = la // d
    return sorted(int(ctx.exp[t + ell * n]) for ell in range(d))


def neg_in_unit_group(ctx: FieldCtx, d: int) -> bool:
    """Check that U_n is closed under negation (equivalently -1 in U_n)."""
    U = unit_group(ctx, d)
    return all(ctx.neg(a) in U for a in U.members)
