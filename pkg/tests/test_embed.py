import pytest

from paigelab.embed import PAIRS, pairwise_intersections, verify_embedding
from paigelab.errors import CapExceeded, UnsupportedQ
from paigelab.gf import field_of_order, make_field
from paigelab.paige import close, standard_generators


@pytest.mark.parametrize("q", [2, 3, 5, 7, 25, 11, 13])
@pytest.mark.parametrize("pair", PAIRS)
def test_embedding(q, pair):
    F = field_of_order(q)
    r = verify_embedding(F, pair)
    assert r.passed, str(r)
    assert r.closure_size == 3 * F.p**2
    assert all(r.relations_ok.values()) and len(r.relations_ok) == 6


def test_report_text_q2():
    r = verify_embedding(make_field(2), "34")
    assert str(r).splitlines() == [
        "M*(2), pair g3,g4: relations ok, |G1|=12, iso: yes",
        "iso to (3,3|3,2) ≅ A4",
    ]


def test_p3_generator_outside_h():
    r = verify_embedding(make_field(3), "35")
    assert r.first_not_in_h is True
    g = standard_generators(make_field(3))
    x, y = g.g3, g.g5
    H1 = close([(x * x) * y, x * (y * y)])
    assert len(H1) == 9 and x not in H1


def test_subgroup_size_q5():
    g = standard_generators(make_field(5))
    assert len(close([g.g3, g.g4])) == 75


def test_refusals():
    with pytest.raises(UnsupportedQ):
        verify_embedding(field_of_order(9), "34")
    with pytest.raises(ValueError):
        verify_embedding(make_field(5), "12")


@pytest.mark.parametrize("q", [2, 3])
def test_intersections(q):
    r = pairwise_intersections(field_of_order(q))
    g = standard_generators(field_of_order(q))
    assert g.g3.key in r.intersections[("34", "35")]
    assert all(len(s) >= 3 for s in r.intersections.values())
    assert r.union_size == r.loop_order


def test_intersections_cap():
    with pytest.raises(CapExceeded):
        pairwise_intersections(make_field(7))
