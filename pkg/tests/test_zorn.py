import itertools

import pytest
from hypothesis import given, settings, strategies as st

from paigelab.errors import NotUnimodular, OrderBoundExceeded
from paigelab.gf import make_field
from paigelab.paige import standard_generators
from paigelab.zorn import (PaigeElement, VectorMatrix, adjugate, cross, det, dot,
                           element_order, paige_order, project, zorn_mul)


def vm(F, *coords):
    a, a1, a2, a3, b1, b2, b3, b = coords
    return VectorMatrix.build(F, a, (a1, a2, a3), (b1, b2, b3), b)


def test_cross_is_right_handed():
    F = make_field(5)
    e1, e2, e3 = ((F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1)))
    assert cross(e1, e2) == e3
    assert cross(e2, e3) == e1
    assert dot(e1, e1) == F.one


def test_generator_products_q5():
    F = make_field(5)
    g = standard_generators(F)
    u = F.gen
    assert u == F(2)
    # g3 * g1 and g3 * g2 computed by hand from the product rule
    M4 = zorn_mul(g.g3.rep, g.g1.rep)
    # (0, (0,0,u), (0,u,-1/u), 1) with u = 2
    assert M4 == vm(F, 0, 0, 0, 2, 0, 2, 2, 1)
    assert project(M4) == g.g4
    M5 = zorn_mul(g.g3.rep, g.g2.rep)
    assert project(M5) == g.g5


def test_inverse_of_g1():
    F = make_field(7)
    g1 = standard_generators(F).g1
    inv = g1.inverse()
    assert project(vm(F, 1, -1, 0, 0, 0, 0, 0, 1)) == inv
    assert g1 * inv == PaigeElement.identity(F)
    assert g1.order() == 7


@pytest.mark.parametrize("q", [2, 3])
def test_unimodular_count_and_projection(q):
    F = make_field(q)
    classes = set()
    count = 0
    for coords in itertools.product(range(q), repeat=8):
        M = vm(F, *coords)
        if det(M) == F.one:
            count += 1
            classes.add(project(M).key)
    assert count == q**3 * (q**4 - 1)
    assert len(classes) == paige_order(q) == count // (2 if q % 2 else 1)


def test_project_rejects_non_unimodular():
    F = make_field(3)
    with pytest.raises(NotUnimodular):
        project(vm(F, 2, 0, 0, 0, 0, 0, 0, 1))


def test_order_bound():
    F = make_field(2)
    g = standard_generators(F).g3
    assert element_order(g) == 3


def test_non_associative_witness():
    F = make_field(2)
    g = standard_generators(F)
    found = any(
        (x * y) * z != x * (y * z)
        for x, y, z in itertools.product([g.g1, g.g2, g.g3, g.g4, g.g5], repeat=3)
    )
    assert found


FIELDS = [make_field(3), make_field(5), make_field(7), make_field(2, 2), make_field(5, 2)]


def matrices(F):
    idx = st.integers(0, F.q - 1)
    return st.tuples(*[idx] * 8).map(lambda c: vm(F, *[F.element(i) for i in c]))


@settings(max_examples=200)
@given(st.sampled_from(FIELDS).flatmap(lambda F: st.tuples(matrices(F), matrices(F))))
def test_det_multiplicative(pair):
    M, N = pair
    assert det(zorn_mul(M, N)) == det(M) * det(N)


@given(st.sampled_from(FIELDS).flatmap(matrices))
def test_adjugate_is_inverse_up_to_det(M):
    F = M.field
    P = zorn_mul(M, adjugate(M))
    d = det(M)
    z = F.zero
    assert P == VectorMatrix(d, (z, z, z), (z, z, z), d)


@given(st.sampled_from(FIELDS).flatmap(matrices))
def test_key_roundtrip_and_canonical(M):
    assert VectorMatrix.from_key(M.field, M.key) == M
    if det(M) == M.field.one:
        x = project(M)
        assert project(-M) == x
        assert x.key <= (-x.rep).key
