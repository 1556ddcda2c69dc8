"""The subgroups <g3,g4>, <g3,g5>, <g4,g5> of M*(p^r) as copies of (3,3|3,p).

For a pair (x, y) the check runs the six relations, the closure size, and
an explicit isomorphism E(p) -> <x, y> through the normal form

    (v, k) = a^v1 b^v2 x^k,   a = (xy^2)^-1,  b = (x^2y)^-1,

which sends (v, k) to (xy^2)^-v1 (x^2y)^-v2 x^k evaluated in the loop.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coxmodel import CoxGroup
from .errors import CapExceeded
from .gf import FieldSpec
from .paige import SubloopClosure, check_supported, close, standard_generators
from .zorn import PaigeElement, paige_order

PAIRS = ("34", "35", "45")


@dataclass(frozen=True)
class EmbeddingReport:
    pair: str
    p: int
    q: int
    relations_ok: dict
    relation_orders: dict
    closure_size: int
    bijective: bool
    multiplicative: bool
    first_not_in_h: bool | None = None  # p = 3 only

    @property
    def iso_ok(self) -> bool:
        return self.bijective and self.multiplicative and self.closure_size == 3 * self.p**2

    @property
    def passed(self) -> bool:
        return all(self.relations_ok.values()) and self.iso_ok and self.first_not_in_h is not False

    def lines(self) -> list[str]:
        a, b = self.pair
        rel = "ok" if all(self.relations_ok.values()) else "FAILED " + ", ".join(
            f"{k} (order {self.relation_orders[k]})" for k, ok in self.relations_ok.items() if not ok)
        out = [f"M*({self.q}), pair g{a},g{b}: relations {rel}, |G1|={self.closure_size}, "
               f"iso: {'yes' if self.iso_ok else 'no'}"]
        if self.first_not_in_h is not None:
            out.append(f"g{a} not in <g{a}^2g{b}, g{a}g{b}^2>: {'yes' if self.first_not_in_h else 'no'}")
        if self.iso_ok:
            out.append(f"iso to (3,3|3,{self.p})" + (" ≅ A4" if self.p == 2 else ""))
        return out

    def __str__(self):
        return "\n".join(self.lines())


def verify_embedding(field: FieldSpec, pair="34", cap: int | None = None) -> EmbeddingReport:
    check_supported(field.q)
    pair = str(pair)
    if pair not in PAIRS:
        raise ValueError(f"pair must be one of {PAIRS}")
    p = field.p
    x, y = standard_generators(field).pair(pair)
    e = PaigeElement.identity(field)
    xinv = x.inverse()

    words = {
        "x^3": x,
        "y^3": y,
        "(xy)^3": x * y,
        "(yx)^3": y * x,
        f"(x^-1y)^{p}": xinv * y,
        f"(x^2y)^{p}": (x * x) * y,
    }
    exps = {"x^3": 3, "y^3": 3, "(xy)^3": 3, "(yx)^3": 3, f"(x^-1y)^{p}": p, f"(x^2y)^{p}": p}
    relations_ok = {}
    relation_orders = {}
    for name, base in words.items():
        relations_ok[name] = base ** exps[name] == e
        relation_orders[name] = base.order() if not relations_ok[name] else exps[name]

    G1 = close([x, y], cap=cap)
    first_not_in_h = None
    if p == 3:
        H1 = close([(x * x) * y, x * (y * y)], cap=cap)
        first_not_in_h = x not in H1

    phi = _normal_form_images(field, x, y)
    bijective, multiplicative = _check_isomorphism(CoxGroup(p), G1, phi)
    return EmbeddingReport(pair, p, field.q, relations_ok, relation_orders, len(G1),
                           bijective, multiplicative, first_not_in_h)


def _normal_form_images(field, x, y) -> list[PaigeElement]:
    """Images of E(p) elements, in :meth:`CoxGroup.enumerate` order."""
    p = field.p
    a_inv = x * (y * y)  # xy^2
    b_inv = (x * x) * y  # x^2y
    a_pows = [a_inv ** (-i) for i in range(p)]
    b_pows = [b_inv ** (-i) for i in range(p)]
    x_pows = [x**k for k in range(3)]
    return [(a_pows[i] * b_pows[j]) * x_pows[k] for i in range(p) for j in range(p) for k in range(3)]


def _check_isomorphism(E: CoxGroup, G1: SubloopClosure, phi: list[PaigeElement]) -> tuple[bool, bool]:
    keys = np.array([g.key for g in phi], dtype=np.int64)
    if len(set(keys.tolist())) != len(keys) or len(keys) != len(G1):
        return False, False
    try:
        pos = G1.index(keys)
    except ValueError:
        return False, False
    bijective = len(set(pos.tolist())) == len(G1)
    T = G1.table
    multiplicative = bool(np.array_equal(T[pos[:, None], pos[None, :]], pos[E.table]))
    return bijective, multiplicative


@dataclass(frozen=True)
class IntersectionReport:
    q: int
    sizes: dict
    intersections: dict  # pair of pair names -> element keys
    union_size: int | None
    loop_order: int

    def __str__(self):
        parts = [f"|<g{k[0]},g{k[1]}>| = {v}" for k, v in self.sizes.items()]
        parts += [f"|<g{a[0]},g{a[1]}> ∩ <g{b[0]},g{b[1]}>| = {len(s)}" for (a, b), s in self.intersections.items()]
        if self.union_size is not None:
            parts.append(f"closure of union: {self.union_size} (|M*({self.q})| = {self.loop_order})")
        return "\n".join(parts)


def pairwise_intersections(field: FieldSpec, max_union_q: int = 5) -> IntersectionReport:
    check_supported(field.q)
    if field.q > max_union_q:
        raise CapExceeded(f"union closure limited to q <= {max_union_q}")
    gens = standard_generators(field)
    closures = {pr: close(gens.pair(pr)) for pr in PAIRS}
    sets = {pr: set(c.keys.tolist()) for pr, c in closures.items()}
    inter = {(a, b): frozenset(sets[a] & sets[b]) for a, b in [("34", "35"), ("34", "45"), ("35", "45")]}
    union = close([gens.g3, gens.g4, gens.g5])
    return IntersectionReport(field.q, {k: len(v) for k, v in closures.items()}, inter,
                              len(union), paige_order(field.q))
