"""Zorn vector matrices over GF(q) and Paige loop elements.

A vector matrix is written (a, alpha, beta, b) with scalars a, b and
3-vectors alpha (upper right) and beta (lower left).  Paige loop elements
are unimodular vector matrices taken up to sign; each class is stored as
its canonical representative, the member of {M, -M} whose coordinate
8-tuple (a, alpha, beta, b) is lexicographically smaller.

Every matrix also has an integer *key*: the 8 coordinates, as canonical
field indices, read as the digits of a base-q number with ``a`` most
significant.  Comparing keys compares the 8-tuples, so the canonical
representative is simply the one with the smaller key.
"""

from __future__ import annotations

import functools
import operator
from dataclasses import dataclass
from math import gcd

from .errors import FieldMismatch, NotUnimodular, OrderBoundExceeded
from .gf import FieldElement, FieldSpec

Vec = tuple[FieldElement, FieldElement, FieldElement]


def dot(u: Vec, v: Vec) -> FieldElement:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec, v: Vec) -> Vec:
    # right-handed: e1 x e2 = e3
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _scale(c: FieldElement, v: Vec) -> Vec:
    return (c * v[0], c * v[1], c * v[2])


def _vadd(*vs: Vec) -> Vec:
    return tuple(functools.reduce(operator.add, parts) for parts in zip(*vs))


def _vneg(v: Vec) -> Vec:
    return (-v[0], -v[1], -v[2])


def paige_order(q: int) -> int:
    """|M*(q)| = q^3 (q^4 - 1) / gcd(2, q - 1)."""
    return q**3 * (q**4 - 1) // gcd(2, q - 1)


@dataclass(frozen=True)
class VectorMatrix:
    a: FieldElement
    alpha: Vec
    beta: Vec
    b: FieldElement

    @classmethod
    def identity(cls, field: FieldSpec) -> VectorMatrix:
        z = field.zero
        return cls(field.one, (z, z, z), (z, z, z), field.one)

    @classmethod
    def build(cls, field: FieldSpec, a, alpha, beta, b) -> VectorMatrix:
        """Construct from ints / coefficient sequences / field elements."""
        return cls(field(a), tuple(field(v) for v in alpha), tuple(field(v) for v in beta), field(b))

    @classmethod
    def from_key(cls, field: FieldSpec, key: int) -> VectorMatrix:
        q = field.q
        digits = []
        for _ in range(8):
            key, d = divmod(key, q)
            digits.append(field.element(d))
        digits.reverse()
        return cls(digits[0], tuple(digits[1:4]), tuple(digits[4:7]), digits[7])

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def flat(self) -> tuple[FieldElement, ...]:
        return (self.a, *self.alpha, *self.beta, self.b)

    @property
    def key(self) -> int:
        q = self.field.q
        k = 0
        for x in self.flat():
            k = k * q + x.index
        return k

    def __neg__(self) -> VectorMatrix:
        return VectorMatrix(-self.a, _vneg(self.alpha), _vneg(self.beta), -self.b)

    def __mul__(self, other: VectorMatrix) -> VectorMatrix:
        return zorn_mul(self, other)

    def det(self) -> FieldElement:
        return det(self)

    def __repr__(self):
        return f"({self.a!r}, {list(self.alpha)!r}, {list(self.beta)!r}, {self.b!r})"


def zorn_mul(M: VectorMatrix, N: VectorMatrix) -> VectorMatrix:
    if M.field != N.field:
        raise FieldMismatch(f"{M.field!r} vs {N.field!r}")
    a, alpha, beta, b = M.a, M.alpha, M.beta, M.b
    c, gamma, delta, d = N.a, N.alpha, N.beta, N.b
    return VectorMatrix(
        a * c + dot(alpha, delta),
        _vadd(_scale(a, gamma), _scale(d, alpha), _vneg(cross(beta, delta))),
        _vadd(_scale(c, beta), _scale(b, delta), cross(alpha, gamma)),
        dot(beta, gamma) + b * d,
    )


def det(M: VectorMatrix) -> FieldElement:
    return M.a * M.b - dot(M.alpha, M.beta)


def adjugate(M: VectorMatrix) -> VectorMatrix:
    return VectorMatrix(M.b, _vneg(M.alpha), _vneg(M.beta), M.a)


@dataclass(frozen=True)
class PaigeElement:
    """Class {M, -M} of a unimodular vector matrix; ``rep`` is canonical."""

    rep: VectorMatrix

    @classmethod
    def identity(cls, field: FieldSpec) -> PaigeElement:
        return project(VectorMatrix.identity(field))

    @classmethod
    def from_key(cls, field: FieldSpec, key: int) -> PaigeElement:
        """Trusts that ``key`` is already a canonical unimodular key."""
        return cls(VectorMatrix.from_key(field, key))

    @property
    def field(self) -> FieldSpec:
        return self.rep.field

    @functools.cached_property
    def key(self) -> int:
        return self.rep.key

    def __lt__(self, other: PaigeElement) -> bool:
        return self.key < other.key

    def __mul__(self, other: PaigeElement) -> PaigeElement:
        return paige_mul(self, other)

    def __pow__(self, n: int) -> PaigeElement:
        if n < 0:
            return paige_inv(self) ** (-n)
        result = PaigeElement.identity(self.field)
        for _ in range(n):
            result = self * result
        return result

    def inverse(self) -> PaigeElement:
        return paige_inv(self)

    def order(self) -> int:
        return element_order(self)

    def __repr__(self):
        return f"[{self.rep!r}]"


def project(M: VectorMatrix) -> PaigeElement:
    if det(M) != M.field.one:
        raise NotUnimodular(f"det = {det(M)!r}")
    neg = -M
    return PaigeElement(M if M.key <= neg.key else neg)


def paige_mul(x: PaigeElement, y: PaigeElement) -> PaigeElement:
    return project(zorn_mul(x.rep, y.rep))


def paige_inv(x: PaigeElement) -> PaigeElement:
    return project(adjugate(x.rep))


def element_order(x: PaigeElement) -> int:
    e = PaigeElement.identity(x.field)
    bound = paige_order(x.field.q)
    y = x
    n = 1
    while y != e:
        y = x * y
        n += 1
        if n > bound:
            raise OrderBoundExceeded(f"order exceeds |M*({x.field.q})| = {bound}")
    return n
