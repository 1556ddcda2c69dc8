"""Concrete model of the group (3,3|3,n) = <x, y | x^3 = y^3 = (xy)^3 = (x^-1 y)^n = 1>.

The model is E(n) = (C_n x C_n) semidirect C_3.  With a = (1, 0) and
b = (0, 1) written additively, the generator f of C_3 acts by the matrix

    F = [[-1, -1],
         [ 1,  0]]      (f(a) = a^-1 b, f(b) = a^-1),

and (v, k)(w, m) = (v + F^k w, k + m).  The group generators are
x = (0, f) and y = (a, f).  E(n) has order 3n^2, which is also the upper
bound for the presented group, so the model *is* (3,3|3,n).
"""

from __future__ import annotations

import functools
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import GroupMismatch

# -- words ---------------------------------------------------------------

_INVERSE = {"x": "X", "X": "x", "y": "Y", "Y": "y"}


@dataclass(frozen=True)
class Word:
    """Freely reduced word in x, y; capitals denote inverse letters."""

    letters: tuple[str, ...] = ()

    def __post_init__(self):
        out: list[str] = []
        for c in self.letters:
            if c not in _INVERSE:
                raise ValueError(f"bad letter {c!r}")
            if out and out[-1] == _INVERSE[c]:
                out.pop()
            else:
                out.append(c)
        object.__setattr__(self, "letters", tuple(out))

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word(tuple(_INVERSE[c] for c in reversed(self.letters)))

    def __pow__(self, n: int) -> Word:
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            c = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == c:
                j += 1
            n = (j - i) * (1 if c.islower() else -1)
            parts.append(c.lower() if n == 1 else f"{c.lower()}^{n}")
            i = j
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse expressions like ``x^2y(xy^2)^-3``; ``1`` is the empty word."""
        tokens = re.findall(r"[xyXY1()]|\^-?\d+|\S", text.replace(" ", ""))
        pos = 0

        def power():
            nonlocal pos
            if pos < len(tokens) and tokens[pos].startswith("^"):
                pos += 1
                return int(tokens[pos - 1][1:])
            return 1

        def seq():
            nonlocal pos
            w = cls()
            while pos < len(tokens) and tokens[pos] != ")":
                t = tokens[pos]
                pos += 1
                if t == "(":
                    inner = seq()
                    if pos >= len(tokens) or tokens[pos] != ")":
                        raise ValueError(f"unbalanced parentheses in {text!r}")
                    pos += 1
                    w = w * inner ** power()
                elif t in _INVERSE:
                    w = w * cls((t,)) ** power()
                elif t == "1":
                    pass
                else:
                    raise ValueError(f"cannot parse {text!r}")
            return w

        w = seq()
        if pos != len(tokens):
            raise ValueError(f"unbalanced parentheses in {text!r}")
        return w


X = Word(("x",))
Y = Word(("y",))


# -- the model -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class CoxElement:
    v: tuple[int, int]
    k: int
    n: int

    def __str__(self):
        return f"(({self.v[0]},{self.v[1]}),f^{self.k})"


def _matmul(A, B, n):
    return (
        ((A[0][0] * B[0][0] + A[0][1] * B[1][0]) % n, (A[0][0] * B[0][1] + A[0][1] * B[1][1]) % n),
        ((A[1][0] * B[0][0] + A[1][1] * B[1][0]) % n, (A[1][0] * B[0][1] + A[1][1] * B[1][1]) % n),
    )


class CoxGroup:
    """E(n) with generators x = (0, f), y = (a, f)."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        one = 1 % n
        identity = ((one, 0), (0, one))
        F = ((-1 % n, -1 % n), (one, 0))
        F2 = _matmul(F, F, n)
        self.F = F
        self.powers = (identity, F, F2)
        self.identity = CoxElement((0, 0), 0, n)
        self.x = CoxElement((0, 0), 1, n)
        self.y = CoxElement((one, 0), 1, n)

    def __repr__(self):
        return f"CoxGroup({self.n})"

    def __eq__(self, other):
        return isinstance(other, CoxGroup) and other.n == self.n

    def __hash__(self):
        return hash(("CoxGroup", self.n))

    @property
    def order(self) -> int:
        return 3 * self.n**2

    def _check(self, *gs):
        for g in gs:
            if g.n != self.n:
                raise GroupMismatch(f"element of E({g.n}) used in E({self.n})")

    def act(self, k: int, w: tuple[int, int]) -> tuple[int, int]:
        M = self.powers[k % 3]
        n = self.n
        return ((M[0][0] * w[0] + M[0][1] * w[1]) % n, (M[1][0] * w[0] + M[1][1] * w[1]) % n)

    def mul(self, g: CoxElement, h: CoxElement) -> CoxElement:
        self._check(g, h)
        w = self.act(g.k, h.v)
        return CoxElement(((g.v[0] + w[0]) % self.n, (g.v[1] + w[1]) % self.n), (g.k + h.k) % 3, self.n)

    def inv(self, g: CoxElement) -> CoxElement:
        self._check(g)
        k = -g.k % 3
        w = self.act(k, g.v)
        return CoxElement((-w[0] % self.n, -w[1] % self.n), k, self.n)

    def power(self, g: CoxElement, e: int) -> CoxElement:
        if e < 0:
            g, e = self.inv(g), -e
        out = self.identity
        for _ in range(e):
            out = self.mul(out, g)
        return out

    def element_order(self, g: CoxElement) -> int:
        h, m = g, 1
        while h != self.identity:
            h = self.mul(h, g)
            m += 1
        return m

    def eval_word(self, w: Word | str) -> CoxElement:
        if isinstance(w, str):
            w = Word.parse(w)
        images = {"x": self.x, "X": self.inv(self.x), "y": self.y, "Y": self.inv(self.y)}
        out = self.identity
        for c in w.letters:
            out = self.mul(out, images[c])
        return out

    def enumerate(self) -> list[CoxElement]:
        n = self.n
        return [CoxElement((a, b), k, n) for a in range(n) for b in range(n) for k in range(3)]

    def index(self, g: CoxElement) -> int:
        """Position of ``g`` in :meth:`enumerate` order."""
        return (g.v[0] * self.n + g.v[1]) * 3 + g.k

    def element(self, i: int) -> CoxElement:
        ab, k = divmod(i, 3)
        a, b = divmod(ab, self.n)
        return CoxElement((a, b), k, self.n)

    def closure(self, gens) -> set[CoxElement]:
        """Subgroup generated by ``gens`` (BFS by right multiplication)."""
        gens = list(gens)
        self._check(*gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = self.mul(g, s)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return seen

    @functools.cached_property
    def table(self) -> np.ndarray:
        """Cayley table on :meth:`index` positions."""
        n = self.n
        idx = np.arange(self.order)
        a, b, k = (idx // 3) // n, (idx // 3) % n, idx % 3
        P = np.array(self.powers, dtype=np.int64)  # (3, 2, 2)
        M = P[k]  # action matrix of the left factor
        # w = F^k(left) applied to right's vector, for every pair
        wa = (M[:, None, 0, 0] * a[None, :] + M[:, None, 0, 1] * b[None, :]) % n
        wb = (M[:, None, 1, 0] * a[None, :] + M[:, None, 1, 1] * b[None, :]) % n
        ra = (a[:, None] + wa) % n
        rb = (b[:, None] + wb) % n
        rk = (k[:, None] + k[None, :]) % 3
        return np.ascontiguousarray((ra * n + rb) * 3 + rk, dtype=np.int32)

    def close_indices(self, gen_indices) -> np.ndarray:
        """Boolean membership mask of the subgroup generated by the indices."""
        gens = np.ascontiguousarray(np.asarray(list(gen_indices), dtype=np.int64))
        return kernels.group_closure(self.table, gens, self.index(self.identity))


def cox_mul(g: CoxElement, h: CoxElement) -> CoxElement:
    return CoxGroup(g.n).mul(g, h)


def cox_inv(g: CoxElement) -> CoxElement:
    return CoxGroup(g.n).inv(g)


def eval_word(G: CoxGroup, w: Word | str) -> CoxElement:
    return G.eval_word(w)


def enumerate_group(G: CoxGroup) -> list[CoxElement]:
    return G.enumerate()


RELATIONS = ("x^3", "y^3", "(xy)^3", "(x^-1y)^n")


@dataclass(frozen=True)
class PresentationReport:
    n: int
    relations: dict
    generated: int
    order: int
    census: dict
    abelian: bool
    exponent: int
    h_order: int
    h_normal: bool
    h_abelian: bool

    @property
    def cyclic(self) -> bool:
        return self.census.get(self.order, 0) > 0

    @property
    def a4_profile(self) -> bool:
        return self.order == 12 and self.census == {1: 1, 2: 3, 3: 8}

    @property
    def passed(self) -> bool:
        n = self.n
        return (
            all(self.relations.values())
            and self.generated == self.order == 3 * n * n
            and self.abelian == (n == 1)
            and self.h_order == n * n
            and self.h_normal
            and self.h_abelian
        )


def verify_presentation(G: CoxGroup) -> PresentationReport:
    n = G.n
    e = G.identity
    rel_words = {
        "x^3": "x^3",
        "y^3": "y^3",
        "(xy)^3": "(xy)^3",
        "(x^-1y)^n": f"(x^-1y)^{n}",
    }
    relations = {name: G.eval_word(w) == e for name, w in rel_words.items()}
    elements = G.enumerate()
    generated = len(G.closure([G.x, G.y]))
    census = dict(sorted(Counter(G.element_order(g) for g in elements).items()))
    abelian = G.mul(G.x, G.y) == G.mul(G.y, G.x)
    exponent = int(np.lcm.reduce(list(census)))

    H = G.closure([G.eval_word("x^2y"), G.eval_word("xy^2")])
    h_normal = all(G.mul(G.mul(G.inv(g), h), g) in H for g in (G.x, G.y) for h in H)
    # two commuting generators give an abelian subgroup
    u, w = G.eval_word("x^2y"), G.eval_word("xy^2")
    h_abelian = G.mul(u, w) == G.mul(w, u)
    return PresentationReport(n, relations, generated, len(elements), census, abelian,
                              exponent, len(H), h_normal, h_abelian)
