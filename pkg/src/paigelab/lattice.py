"""Subgroup lattice of (3,3|3,p) for primes p > 3.

Two independent routes:

* the named family -- the Sylow p-subgroup H, its p + 1 lines H(i), the p^2
  Sylow 3-subgroups G(k, l), and, when i^2 + i + 1 = 0 has solutions mod p,
  the 2p maximal subgroups K(i, l) = H(i) v G(0, l) -- with joins given by
  closed-form rules on the indices;
* a brute-force oracle that closes every subset of at most two elements
  of E(p) and matches closures back to named subgroups.

Subgroups are element sets of the concrete model E(p), stored as Python
int bitmasks over :meth:`CoxGroup.index` positions.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_LATTICE_BUDGET
from .coxmodel import CoxElement, CoxGroup, Word
from .errors import BudgetExceeded, GroupMismatch, NotPrime, UnmatchedSubgroup, UnsupportedP
from .gf import is_prime


class Infinity(enum.Enum):
    INF = "inf"

    def __str__(self):
        return "inf"


INF = Infinity.INF


class Kind(enum.IntEnum):
    # value order = lattice height, used as a tie-break when sorting
    TRIVIAL = 0
    GPOINT = 1
    HLINE = 2
    KMAX = 3
    HGROUP = 4
    FULL = 5


@dataclass(frozen=True)
class SubgroupTag:
    kind: Kind
    params: tuple = ()

    def __str__(self):
        if self.kind is Kind.TRIVIAL:
            return "1"
        if self.kind is Kind.FULL:
            return "G"
        if self.kind is Kind.HGROUP:
            return "H"
        name = {Kind.HLINE: "H", Kind.GPOINT: "G", Kind.KMAX: "K"}[self.kind]
        return f"{name}({','.join(str(x) for x in self.params)})"

    def sort_key(self):
        return (int(self.kind), tuple(float("inf") if x is INF else x for x in self.params))


TRIVIAL = SubgroupTag(Kind.TRIVIAL)
FULL = SubgroupTag(Kind.FULL)
HGROUP = SubgroupTag(Kind.HGROUP)


def hline(i) -> SubgroupTag:
    return SubgroupTag(Kind.HLINE, (i,))


def gpoint(k: int, l: int) -> SubgroupTag:
    return SubgroupTag(Kind.GPOINT, (k, l))


def kmax(i: int, l: int) -> SubgroupTag:
    return SubgroupTag(Kind.KMAX, (i, l))


# generator words
A_WORD = Word.parse("x^2y")
B_WORD = Word.parse("xy^2")


def h_word(i) -> Word:
    """h(i) = x^2y (xy^2)^i, and h(inf) = xy^2."""
    if i is INF:
        return B_WORD
    return A_WORD * B_WORD**i


def g_word(k: int, l: int) -> Word:
    """g(k,l) = (x^2y)^-k (xy^2)^-l x (x^2y)^k (xy^2)^l."""
    return A_WORD ** (-k) * B_WORD ** (-l) * Word(("x",)) * A_WORD**k * B_WORD**l


def _bool_to_mask(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def _mask_to_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: CoxGroup
    tag: SubgroupTag | None
    generator_words: tuple[Word, ...] = ()
    precomputed: int | None = None

    @functools.cached_property
    def mask(self) -> int:
        if self.precomputed is not None:
            return self.precomputed
        gens = [self.group.index(self.group.eval_word(w)) for w in self.generator_words]
        return _bool_to_mask(self.group.close_indices(gens))

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @functools.cached_property
    def elements(self) -> frozenset[CoxElement]:
        return frozenset(self.group.element(i) for i in _mask_to_indices(self.mask))

    def __le__(self, other: Subgroup) -> bool:
        return self.mask & ~other.mask == 0

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group == other.group and self.mask == other.mask

    def __hash__(self):
        return hash((self.group.n, self.mask))

    def __repr__(self):
        return f"Subgroup({self.tag}, order={self.order})"


def solve_congruence(p: int) -> set[int]:
    """All i in [0, p) with i^2 + i + 1 = 0 (mod p)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return {i for i in range(p) if (i * i + i + 1) % p == 0}


def _check_p(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p <= 3:
        raise UnsupportedP(f"p = {p} excluded: the closed-form lattice needs a prime p > 3")


class NamedLattice:
    """Named subgroups of E(p) with lookup by tag and by element set."""

    def __init__(self, p: int):
        _check_p(p)
        self.p = p
        self.group = G = CoxGroup(p)
        self.solutions = sorted(solve_congruence(p))
        subs = [
            Subgroup(G, TRIVIAL, ()),
            Subgroup(G, FULL, (Word(("x",)), Word(("y",)))),
            Subgroup(G, HGROUP, (A_WORD, B_WORD)),
        ]
        subs += [Subgroup(G, hline(i), (h_word(i),)) for i in [*range(p), INF]]
        subs += [Subgroup(G, gpoint(k, l), (g_word(k, l),)) for k in range(p) for l in range(p)]
        for i in self.solutions:
            subs += [Subgroup(G, kmax(i, l), (h_word(i), g_word(0, l))) for l in range(p)]
        self.subgroups = subs
        self.by_tag = {s.tag: s for s in subs}
        self.by_mask = {}
        for s in subs:
            self.by_mask.setdefault(s.mask, s)

    def __getitem__(self, tag: SubgroupTag) -> Subgroup:
        return self.by_tag[tag]

    def match(self, mask: int) -> Subgroup:
        try:
            return self.by_mask[mask]
        except KeyError:
            raise UnmatchedSubgroup("closure equals no named subgroup") from None


@functools.lru_cache(maxsize=None)
def named_lattice(p: int) -> NamedLattice:
    return NamedLattice(p)


def named_subgroups(p: int) -> list[Subgroup]:
    return list(named_lattice(p).subgroups)


def _same_group(A: Subgroup, B: Subgroup) -> NamedLattice:
    if A.group != B.group:
        raise GroupMismatch(f"E({A.group.n}) vs E({B.group.n})")
    return named_lattice(A.group.n)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    """Join by the closed-form rules on tags."""
    L = _same_group(A, B)
    p = L.p
    sols = L.solutions
    a, b = sorted((A.tag, B.tag), key=lambda t: int(t.kind))

    def named(tag):
        return L[tag]

    if a == b:
        return named(a)
    if a.kind is Kind.TRIVIAL:
        return named(b)
    if b.kind is Kind.FULL:
        return named(FULL)
    if b.kind is Kind.HGROUP:
        return named(HGROUP if a.kind is Kind.HLINE else FULL)

    if a.kind is Kind.HLINE and b.kind is Kind.HLINE:
        return named(HGROUP)

    if a.kind is Kind.GPOINT and b.kind is Kind.HLINE:
        (i,) = b.params
        k2, l2 = a.params
        if i in sols:
            return named(kmax(i, (l2 - i * k2) % p))
        return named(FULL)

    if a.kind is Kind.GPOINT and b.kind is Kind.GPOINT:
        (k, l), (k2, l2) = a.params, b.params
        for i in sols:
            if (l2 - l - (k2 - k) * i) % p == 0:
                return named(kmax(i, (l - i * k) % p))
        return named(FULL)

    if b.kind is Kind.KMAX:
        i, l0 = b.params
        if a.kind is Kind.HLINE:
            return named(b if a.params == (i,) else FULL)
        if a.kind is Kind.GPOINT:
            k, l = a.params
            return named(b if (l - i * k) % p == l0 else FULL)
        return named(FULL)  # two distinct K's

    raise AssertionError(f"unhandled join {a} v {b}")  # pragma: no cover


def join_oracle(A: Subgroup, B: Subgroup) -> Subgroup:
    """Join as the closure of the union of element sets, matched to a name."""
    L = _same_group(A, B)
    gens = _mask_to_indices(A.mask | B.mask)
    return L.match(_bool_to_mask(L.group.close_indices(gens)))


# -- brute force ---------------------------------------------------------

def _check_budget(n: int, budget: int) -> CoxGroup:
    G = CoxGroup(n)
    if G.order > budget:
        raise BudgetExceeded(f"|E({n})| = {G.order} exceeds enumeration budget {budget}")
    return G


def _cyclic(G: CoxGroup) -> dict[int, int]:
    """Cyclic subgroups (mask -> one generating index)."""
    out: dict[int, int] = {}
    for i in range(G.order):
        out.setdefault(_bool_to_mask(G.close_indices([i])), i)
    return out


def brute_force_masks(n: int, budget: int = DEFAULT_LATTICE_BUDGET) -> set[int]:
    """Every subgroup generated by at most two elements, plus E(n) itself.

    A pair of elements generates the same subgroup as the pair of cyclic
    subgroups they generate, so pairs are taken over cyclic subgroups.
    """
    G = _check_budget(n, budget)
    cyc = _cyclic(G)
    found = set(cyc)
    found.add(_bool_to_mask(G.close_indices(range(G.order))))
    reps = sorted(cyc.values())
    for i, j in itertools.combinations(reps, 2):
        found.add(_bool_to_mask(G.close_indices([i, j])))
    return found


def brute_force_subgroups(p: int, budget: int = DEFAULT_LATTICE_BUDGET) -> list[frozenset[CoxElement]]:
    G = CoxGroup(p)
    masks = sorted(brute_force_masks(p, budget), key=lambda m: (bin(m).count("1"), m))
    return [frozenset(G.element(i) for i in _mask_to_indices(m)) for m in masks]


def three_generator_audit(n: int, budget: int = DEFAULT_LATTICE_BUDGET) -> bool:
    """True if closing every triple of cyclic subgroups finds nothing new."""
    G = _check_budget(n, budget)
    reps = sorted(_cyclic(G).values())
    known = brute_force_masks(n, budget)
    for tri in itertools.combinations(reps, 3):
        if _bool_to_mask(G.close_indices(tri)) not in known:
            return False
    return True


# -- Hasse diagram -------------------------------------------------------

def covers_incremental(masks: list[int]) -> set[tuple[int, int]]:
    """Covering pairs (child, parent) found parent by parent: the lower
    covers of B are the maximal proper subgroups of B in the list."""
    order = sorted(range(len(masks)), key=lambda i: bin(masks[i]).count("1"))
    edges = set()
    for b in order:
        below = [a for a in order if masks[a] != masks[b] and masks[a] & ~masks[b] == 0]
        for a in below:
            if not any(c != a and masks[a] & ~masks[c] == 0 for c in below if masks[c] != masks[a]):
                edges.add((a, b))
    return edges


def covers_matrix(masks: list[int]) -> set[tuple[int, int]]:
    """Covering pairs as strict containment minus its square."""
    n = len(masks)
    R = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            if a != b and masks[a] & ~masks[b] == 0:
                R[a, b] = 1
    R2 = (R @ R) > 0
    cover = (R > 0) & ~R2
    return {(int(a), int(b)) for a, b in zip(*np.nonzero(cover))}


@dataclass(frozen=True)
class LatticeGraph:
    p: int
    nodes: tuple[Subgroup, ...]
    hasse_edges: tuple[tuple[int, int], ...]

    def lower_covers(self, i: int) -> list[int]:
        return [a for a, b in self.hasse_edges if b == i]

    def upper_covers(self, i: int) -> list[int]:
        return [b for a, b in self.hasse_edges if a == i]

    def node(self, tag: SubgroupTag) -> int:
        for i, s in enumerate(self.nodes):
            if s.tag == tag:
                return i
        raise KeyError(tag)

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for s in self.nodes:
            out[s.order] = out.get(s.order, 0) + 1
        return dict(sorted(out.items()))


def build_lattice(p: int) -> LatticeGraph:
    subs = sorted(named_subgroups(p), key=lambda s: (s.order, s.tag.sort_key()))
    edges = covers_incremental([s.mask for s in subs])
    return LatticeGraph(p, tuple(subs), tuple(sorted(edges)))


# -- identities ----------------------------------------------------------

@dataclass(frozen=True)
class ConjugationReport:
    p: int
    checked: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def conjugation_check(p: int) -> ConjugationReport:
    """h(i)^-1 g(k,l) h(i) = g(k+1, l+i) for every finite i and all k, l."""
    _check_p(p)
    G = CoxGroup(p)
    g = {(k, l): G.eval_word(g_word(k, l)) for k in range(p) for l in range(p)}
    failures = []
    checked = 0
    for i in range(p):
        h = G.eval_word(h_word(i))
        hi = G.inv(h)
        for (k, l), gkl in g.items():
            checked += 1
            if G.mul(G.mul(hi, gkl), h) != g[(k + 1) % p, (l + i) % p]:
                failures.append((i, k, l))
    return ConjugationReport(p, checked, tuple(failures))


def normality_report(p: int) -> dict:
    """For each line index, whether H(i) is normal (conjugating by x and y)."""
    _check_p(p)
    L = named_lattice(p)
    G = L.group
    out = {}
    for i in [*range(p), INF]:
        H = L[hline(i)]
        h = G.eval_word(h_word(i))
        conj = [G.mul(G.mul(G.inv(t), h), t) for t in (G.x, G.y)]
        out[i] = all(c in H.elements for c in conj)
    return out
