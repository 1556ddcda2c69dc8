"""Exact arithmetic in GF(p^r).

Elements are coefficient vectors (low degree first) of residues modulo a
monic irreducible polynomial over GF(p).  Each field has a canonical
integer encoding of its elements,

    index(c_0, ..., c_{r-1}) = c_0 p^(r-1) + c_1 p^(r-2) + ... + c_{r-1},

chosen so that comparing indices is the same as comparing coefficient
vectors lexicographically, low degree first.  The loop kernels work on
these indices through the lookup tables returned by :func:`tables`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ZeroElement,
)

DEFAULT_BOUND = 2**20
TABLE_LIMIT = 2048


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^r; raises NotPrime if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    (p,) = prime_factors(q)[:1]
    r = 0
    m = q
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, r


# -- polynomials over GF(p), coefficient tuples low-to-high ---------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for j, mj in enumerate(m):
            a[shift + j] = (a[shift + j] - f * mj) % p
        a = _trim(a)
    return a


def _monic_polys(p, d):
    """All monic polynomials of degree d, in lexicographic low-to-high order."""
    for low in itertools.product(range(p), repeat=d):
        yield tuple(low) + (1,)


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = tuple(_trim(poly))
    d = len(poly) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for f in _monic_polys(p, k):
            if not _polymod(poly, f, p):
                return False
    return True


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    for poly in _monic_polys(p, r):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- fields --------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    p: int
    r: int
    modulus: tuple[int, ...]
    primitive: tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.p**self.r

    def __repr__(self):
        return f"GF({self.q})"

    def __call__(self, value) -> FieldElement:
        """Coerce an int (as a GF(p) constant) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} vs {self!r}")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.r - 1)
        else:
            coeffs = list(value)
            if len(coeffs) > self.r:
                coeffs = _polymod(coeffs, self.modulus, self.p)
            coeffs = [c % self.p for c in coeffs] + [0] * (self.r - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    @property
    def gen(self) -> FieldElement:
        """The designated primitive element."""
        return FieldElement(self, self.primitive)

    def element(self, index: int) -> FieldElement:
        coeffs = []
        for _ in range(self.r):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(reversed(coeffs)))

    def elements(self):
        """All elements in canonical order."""
        for coeffs in itertools.product(range(self.p), repeat=self.r):
            yield FieldElement(self, coeffs)


@dataclass(frozen=True, eq=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def index(self) -> int:
        n = 0
        for c in self.coeffs:
            n = n * self.field.p + c
        return n

    def __bool__(self):
        return any(self.coeffs)

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def _check(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.r == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % f.p,))
        prod = [0] * (2 * f.r - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return f([c % f.p for c in prod])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not self:
            raise DivisionByZero("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __repr__(self):
        if self.field.r == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return "+".join(terms) or "0"


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def mult_order(x: FieldElement) -> int:
    """Smallest n >= 1 with x^n = 1."""
    if not x:
        raise ZeroElement("zero has no multiplicative order")
    n = x.field.q - 1
    one = x.field.one
    for ell in prime_factors(n):
        while n % ell == 0 and x ** (n // ell) == one:
            n //= ell
    return n


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int = 1, bound: int = DEFAULT_BOUND) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise ValueError("degree must be >= 1")
    if p**r > bound:
        raise DegreeTooLarge(f"p^r = {p**r} exceeds bound {bound}")
    modulus = smallest_irreducible(p, r)
    base = FieldSpec(p, r, modulus)
    for x in base.elements():
        if x and mult_order(x) == base.q - 1:
            return FieldSpec(p, r, modulus, x.coeffs)
    raise AssertionError("no primitive element")  # pragma: no cover


def field_of_order(q: int, bound: int = DEFAULT_BOUND) -> FieldSpec:
    p, r = prime_power(q)
    return make_field(p, r, bound)


@dataclass(frozen=True)
class FieldTables:
    """Index-level lookup tables for a small field."""

    q: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray


@functools.lru_cache(maxsize=None)
def tables(field: FieldSpec) -> FieldTables:
    q, p, r = field.q, field.p, field.r
    if q > TABLE_LIMIT:
        raise DegreeTooLarge(f"lookup tables limited to q <= {TABLE_LIMIT}")
    idx = np.arange(q)
    # digits[:, j] is the coefficient of t^j
    digits = np.stack([(idx // p ** (r - 1 - j)) % p for j in range(r)], axis=1)
    weights = p ** (r - 1 - np.arange(r))
    add_t = (((digits[:, None, :] + digits[None, :, :]) % p) * weights).sum(axis=2)
    neg_t = (((-digits) % p) * weights).sum(axis=1)

    # log/antilog through the primitive element
    g = field.gen
    exp = np.zeros(q - 1, dtype=np.int64)
    x = field.one
    for k in range(q - 1):
        exp[k] = x.index
        x = x * g
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1)
    mul_t = exp[(log[:, None] + log[None, :]) % (q - 1)]
    mul_t[0, :] = 0
    mul_t[:, 0] = 0
    inv_t = np.zeros(q, dtype=np.int64)
    inv_t[1:] = exp[(-log[1:]) % (q - 1)]

    dt = np.int32
    return FieldTables(q, add_t.astype(dt), mul_t.astype(dt), neg_t.astype(dt), inv_t.astype(dt))
