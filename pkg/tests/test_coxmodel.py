import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from paigelab.coxmodel import CoxElement, CoxGroup, Word, verify_presentation
from paigelab.errors import GroupMismatch


def test_worked_products():
    G = CoxGroup(7)
    assert G.eval_word("x^2y") == CoxElement((0, 6), 0, 7)
    assert G.eval_word("xy^2") == CoxElement((6, 0), 0, 7)
    a, b, e = (1, 0), (0, 1), (0, 0)
    assert G.mul(G.y, G.y) == CoxElement(b, 2, 7)
    assert G.mul(CoxElement(b, 2, 7), CoxElement(e, 1, 7)) == CoxElement(b, 0, 7)
    assert G.mul(CoxElement(e, 1, 7), CoxElement(b, 2, 7)) == CoxElement((6, 0), 0, 7)
    assert G.inv(CoxElement(a, 1, 7)) == CoxElement(b, 2, 7)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 12, 30])
def test_presentation(n):
    r = verify_presentation(CoxGroup(n))
    assert r.passed
    assert r.order == r.generated == 3 * n * n


def test_special_cases():
    r1 = verify_presentation(CoxGroup(1))
    assert r1.cyclic and r1.order == 3
    r2 = verify_presentation(CoxGroup(2))
    assert r2.a4_profile and not r2.abelian
    r3 = verify_presentation(CoxGroup(3))
    assert r3.order == 27 and r3.exponent == 3 and not r3.abelian


def test_a4_census_matches_permutation_model():
    # even permutations of 4 points
    def parity(p):
        return sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4)) % 2

    def order(p):
        q, m = p, 1
        while q != (0, 1, 2, 3):
            q = tuple(p[i] for i in q)
            m += 1
        return m

    A4 = [p for p in itertools.permutations(range(4)) if parity(p) == 0]
    want = dict(sorted(Counter(map(order, A4)).items()))
    assert verify_presentation(CoxGroup(2)).census == want == {1: 1, 2: 3, 3: 8}


@pytest.mark.parametrize("n", [2, 5, 6])
def test_inverse_and_associativity_exhaustive(n):
    G = CoxGroup(n)
    els = G.enumerate()
    for g in els:
        assert G.mul(g, G.inv(g)) == G.identity == G.mul(G.inv(g), g)
    if n <= 5:
        for a, b, c in itertools.product(els, repeat=3):
            assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_table_matches_mul(n):
    G = CoxGroup(n)
    T = G.table
    for i, j in itertools.product(range(G.order), repeat=2):
        assert G.element(T[i, j]) == G.mul(G.element(i), G.element(j))


@pytest.mark.parametrize("n", range(1, 14))
def test_h_is_translations(n):
    G = CoxGroup(n)
    H = G.closure([G.eval_word("x^2y"), G.eval_word("xy^2")])
    assert H == {g for g in G.enumerate() if g.k == 0}


def test_group_mismatch():
    with pytest.raises(GroupMismatch):
        CoxGroup(5).mul(CoxGroup(5).x, CoxGroup(7).x)


def test_word_parse_and_print():
    w = Word.parse("x^2y(xy^2)^-3")
    assert w == Word(tuple("xxy" + "YYX" * 3))
    assert str(w) == "x^2y^-1x^-1y^-2x^-1y^-2x^-1"
    assert Word.parse("xX") == Word()
    assert str(Word.parse("(xy)^2")) == "xyxy"
    assert str(Word.parse("x^-2")) == "x^-2"
    with pytest.raises(ValueError):
        Word.parse("(xy")
    with pytest.raises(ValueError):
        Word.parse("xz")


letters = st.lists(st.sampled_from("xXyY"), max_size=12).map(lambda c: Word(tuple(c)))


@given(letters, letters, st.sampled_from([2, 5, 7]))
def test_eval_is_homomorphism(u, v, n):
    G = CoxGroup(n)
    assert G.eval_word(u * v) == G.mul(G.eval_word(u), G.eval_word(v))
    assert G.eval_word(u.inverse()) == G.inv(G.eval_word(u))


@given(letters)
def test_str_roundtrip(w):
    assert Word.parse(str(w)) == w
