"""The Paige loop M*(q): standard generators, subloop closure, and checks
of the Moufang identity and of three-generation by elements of order 3."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernels
from .config import DEFAULT_SEED, MAX_TABLE, closure_cap
from .errors import CapExceeded, FieldMismatch, UnsupportedQ
from .gf import FieldSpec, tables
from .zorn import PaigeElement, VectorMatrix, paige_order, project


@dataclass(frozen=True)
class PaigeGenerators:
    g1: PaigeElement
    g2: PaigeElement
    g3: PaigeElement
    g4: PaigeElement
    g5: PaigeElement
    u: object

    def pair(self, name) -> tuple[PaigeElement, PaigeElement]:
        """Generator pair by its two-digit name: 34, 35 or 45."""
        a, b = str(name)
        return getattr(self, f"g{a}"), getattr(self, f"g{b}")


def check_supported(q: int) -> None:
    if q == 9:
        raise UnsupportedQ("q = 9 excluded: the generator hypothesis requires q != 9")
    if q % 2 == 0 and q != 2:
        raise UnsupportedQ(f"q = {q} excluded: the generator hypothesis requires q odd or q = 2")


def standard_generators(field: FieldSpec) -> PaigeGenerators:
    check_supported(field.q)
    F = field
    z, one, u = F.zero, F.one, F.gen
    g1 = project(VectorMatrix(one, (one, z, z), (z, z, z), one))
    g2 = project(VectorMatrix(one, (z, one, z), (z, z, z), one))
    g3 = project(VectorMatrix(z, (z, z, u), (z, z, -u.inverse()), one))
    return PaigeGenerators(g1, g2, g3, g3 * g1, g3 * g2, u)


def mul_keys(field: FieldSpec, xs, ys) -> np.ndarray:
    """Vectorised canonical products on element keys."""
    t = tables(field)
    xs = np.ascontiguousarray(xs, dtype=np.int64)
    ys = np.ascontiguousarray(ys, dtype=np.int64)
    return kernels.zorn_mul_keys(xs, ys, field.q, t.add, t.mul, t.neg)


@dataclass(frozen=True, eq=False)
class SubloopClosure:
    """Subloop generated by ``generators``; ``keys`` lists it in BFS order."""

    field: FieldSpec
    keys: np.ndarray
    generators: tuple[PaigeElement, ...] = dc_field(default=())

    def __len__(self):
        return int(self.keys.shape[0])

    @functools.cached_property
    def _sorted(self) -> np.ndarray:
        return np.sort(self.keys)

    def __contains__(self, x: PaigeElement) -> bool:
        i = np.searchsorted(self._sorted, x.key)
        return bool(i < len(self) and self._sorted[i] == x.key)

    def __eq__(self, other):
        if not isinstance(other, SubloopClosure):
            return NotImplemented
        return self.field == other.field and np.array_equal(self._sorted, other._sorted)

    __hash__ = None

    @functools.cached_property
    def elements(self) -> frozenset[PaigeElement]:
        return frozenset(self)

    def __iter__(self):
        for k in self.keys.tolist():
            yield PaigeElement.from_key(self.field, k)

    def index(self, keys) -> np.ndarray:
        """Positions (in ``keys`` order) of the given element keys."""
        order = np.argsort(self.keys)
        pos = np.searchsorted(self.keys, keys, sorter=order)
        pos = np.minimum(pos, len(self) - 1)
        idx = order[pos]
        if not np.array_equal(self.keys[idx], np.asarray(keys)):
            raise ValueError("key outside the closure")
        return idx

    @functools.cached_property
    def table(self) -> np.ndarray:
        """Cayley table on positions; row x, column y holds x*y."""
        n = len(self)
        if n > MAX_TABLE:
            raise CapExceeded(f"Cayley table limited to {MAX_TABLE} elements", n)
        xs = np.repeat(self.keys, n)
        ys = np.tile(self.keys, n)
        prod = mul_keys(self.field, xs, ys)
        return np.ascontiguousarray(self.index(prod).reshape(n, n), dtype=np.int32)


def close(gens, cap: int | None = None, field: FieldSpec | None = None) -> SubloopClosure:
    gens = list(gens)
    if field is None:
        if not gens:
            raise ValueError("need a field or at least one generator")
        field = gens[0].field
    for g in gens:
        if g.field != field:
            raise FieldMismatch(f"{g.field!r} vs {field!r}")
    cap = closure_cap() if cap is None else cap
    t = tables(field)
    seeds = np.array([PaigeElement.identity(field).key] + [g.key for g in gens], dtype=np.int64)
    keys, complete = kernels.loop_closure(seeds, field.q, t.add, t.mul, t.neg, cap)
    if not complete:
        raise CapExceeded(f"closure passed cap {cap} (reached {len(keys)})", len(keys))
    return SubloopClosure(field, keys, tuple(gens))


@dataclass(frozen=True)
class MoufangReport:
    passed: bool
    checked: int
    violations: int
    witness: tuple | None = None

    def __str__(self):
        s = f"{self.checked} triples, {self.violations} violations"
        if self.witness is not None:
            s += f"; first witness {self.witness}"
        return s


def moufang_table_check(table) -> MoufangReport:
    """Exhaustive check of (xy)(zx) = (x(yz))x on a Cayley table."""
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = table.shape[0]
    count, witness = kernels.moufang_table(table)
    return MoufangReport(count == 0, n**3, int(count), witness)


def verify_moufang(closure: SubloopClosure, mode="exhaustive", seed: int = DEFAULT_SEED,
                   batch: int = 200_000) -> MoufangReport:
    """Moufang identity on every triple (``mode="exhaustive"``) or on
    ``mode`` seeded random triples (an int)."""
    if mode == "exhaustive":
        report = moufang_table_check(closure.table)
        if report.witness is not None:
            els = closure.keys
            w = tuple(PaigeElement.from_key(closure.field, int(els[i])) for i in report.witness)
            report = MoufangReport(False, report.checked, report.violations, w)
        return report

    n_samples = int(mode)
    rng = np.random.default_rng(seed)
    F = closure.field
    keys = closure.keys
    violations = 0
    witness = None
    done = 0
    while done < n_samples:
        m = min(batch, n_samples - done)
        x, y, z = (keys[rng.integers(0, len(keys), m)] for _ in range(3))
        left = mul_keys(F, mul_keys(F, x, y), mul_keys(F, z, x))
        right = mul_keys(F, mul_keys(F, x, mul_keys(F, y, z)), x)
        bad = np.nonzero(left != right)[0]
        if bad.size and witness is None:
            i = bad[0]
            witness = tuple(PaigeElement.from_key(F, int(v[i])) for v in (x, y, z))
        violations += int(bad.size)
        done += m
    return MoufangReport(violations == 0, n_samples, violations, witness)


@dataclass(frozen=True)
class GenerationReport:
    q: int
    size: int
    expected: int
    orders: tuple[int, int, int]

    @property
    def passed(self) -> bool:
        return self.size == self.expected and self.orders == (3, 3, 3)

    def __str__(self):
        o = ",".join(map(str, self.orders))
        return f"closure {self.size}, generator orders {o} (expected order {self.expected})"


def verify_generation(field: FieldSpec, cap: int | None = None) -> GenerationReport:
    gens = standard_generators(field)
    orders = (gens.g3.order(), gens.g4.order(), gens.g5.order())
    closure = close([gens.g3, gens.g4, gens.g5], cap=cap)
    return GenerationReport(field.q, len(closure), paige_order(field.q), orders)

