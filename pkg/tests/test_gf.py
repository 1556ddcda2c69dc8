import itertools

import pytest
from hypothesis import given, strategies as st

from paigelab import gf
from paigelab.errors import DegreeTooLarge, DivisionByZero, FieldMismatch, NotPrime, ZeroElement
from paigelab.gf import make_field, mult_order


def brute_order(x):
    y, n = x, 1
    while y != x.field.one:
        y, n = y * x, n + 1
    return n


def test_gf2_primitive_is_one():
    F = make_field(2, 1)
    assert F.gen == F.one


def test_gf7_primitive_by_enumeration():
    F = make_field(7, 1)
    # first candidate in canonical order whose powers hit all 6 units
    first = next(a for a in range(1, 7) if len({pow(a, k, 7) for k in range(1, 7)}) == 6)
    assert first == 3
    assert F.gen == F(3)


def test_gf4_modulus_and_primitive():
    # a monic quadratic over GF(2) is irreducible iff it has no root
    irreducible = [c for c in itertools.product(range(2), repeat=2)
                   if all((c[0] + c[1] * t + t * t) % 2 for t in range(2))]
    assert irreducible == [(1, 1)]
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)
    t = F([0, 1])
    assert F.gen == t
    assert brute_order(t) == 3


def test_gf25_modulus_is_lexicographically_smallest():
    F = make_field(5, 2)
    # t^2 + c1 t + c0 irreducible over GF(5) iff no root
    cands = [c for c in itertools.product(range(5), repeat=2)
             if all((c[0] + c[1] * t + t * t) % 5 for t in range(5))]
    assert F.modulus == (*cands[0], 1)


def test_basic_arithmetic():
    F = make_field(7)
    assert F(3) * F(5) == F(1)
    assert F(3).inverse() == F(5)
    G = make_field(2, 2)
    t = G([0, 1])
    assert t * t == t + G.one


def test_mult_order_examples():
    F = make_field(7)
    assert mult_order(F(1)) == 1
    assert mult_order(F(3)) == 6
    assert mult_order(make_field(5)(4)) == 2


def test_errors():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(DegreeTooLarge):
        make_field(2, 21)
    with pytest.raises(DivisionByZero):
        make_field(5).zero.inverse()
    with pytest.raises(ZeroElement):
        mult_order(make_field(5).zero)
    with pytest.raises(FieldMismatch):
        make_field(5).one + make_field(7).one


def test_deterministic():
    make_field.cache_clear()
    a = make_field(3, 3)
    make_field.cache_clear()
    b = make_field(3, 3)
    assert a == b


@pytest.mark.parametrize("p,r", [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4)])
def test_fermat_exhaustive(p, r):
    F = make_field(p, r)
    assert gf.is_irreducible(F.modulus, p)
    for x in F.elements():
        if x:
            assert x ** (F.q - 1) == F.one
            assert x * x.inverse() == F.one
    assert brute_order(F.gen) == F.q - 1


def test_index_roundtrip_and_order():
    F = make_field(3, 2)
    els = list(F.elements())
    assert [x.index for x in els] == list(range(9))
    assert all(F.element(x.index) == x for x in els)
    assert els == sorted(els)


FIELDS = [make_field(2, 3), make_field(5, 2), make_field(7, 1), make_field(3, 3)]


@given(st.sampled_from(FIELDS), st.data())
def test_ring_axioms(F, data):
    x, y, z = (F.element(data.draw(st.integers(0, F.q - 1))) for _ in range(3))
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - y + y == x


@given(st.sampled_from(FIELDS), st.data())
def test_tables_match_elements(F, data):
    t = gf.tables(F)
    i, j = data.draw(st.integers(0, F.q - 1)), data.draw(st.integers(0, F.q - 1))
    x, y = F.element(i), F.element(j)
    assert t.add[i, j] == (x + y).index
    assert t.mul[i, j] == (x * y).index
    assert t.neg[i] == (-x).index
    if x:
        assert t.inv[i] == x.inverse().index
