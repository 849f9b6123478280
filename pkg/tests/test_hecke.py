from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckehom.coxeter import all_perms, compose, length, s_ba
from heckehom.hecke import (
    HeckeElement, T_ba, character, generator, mult, t_basis, unit, verify_tmoves,
)
from heckehom.scalars import GenericQ, PrimeField, RationalQ

G = GenericQ()


def elem(n, F, data):
    return HeckeElement(n, F, {w: F.from_int(c) for w, c in data})


def elements(n, F):
    return st.lists(st.tuples(st.sampled_from(all_perms(n)), st.integers(-3, 3)),
                    max_size=4).map(lambda d: elem(n, F, d))


@pytest.mark.parametrize("n", [2, 3, 4])
@given(data=st.data())
def test_associativity_generic(n, data):
    a, b, c = (data.draw(elements(n, G)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(data=st.data())
def test_associativity_gf5(data):
    F = PrimeField(5, 2)
    a, b, c = (data.draw(elements(4, F)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_multiplication_rule_examples():
    T1 = generator(2, G, 1)
    q = G.element(G.q)
    assert T1 * T1 == T1.scale(q - 1) + unit(2, G).scale(q)
    s1, s2 = generator(3, G, 1), generator(3, G, 2)
    assert s1 * s2 * s1 == s2 * s1 * s2 == t_basis(3, G, (3, 2, 1))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_braid_and_commutation(n):
    T = [None] + [generator(n, G, i) for i in range(1, n)]
    for i in range(1, n - 1):
        assert T[i] * T[i + 1] * T[i] == T[i + 1] * T[i] * T[i + 1]
    for i in range(1, n):
        for j in range(i + 2, n):
            assert T[i] * T[j] == T[j] * T[i]


def test_length_additive_products():
    for u in all_perms(4):
        for v in all_perms(4):
            if length(compose(u, v)) == length(u) + length(v):
                assert t_basis(4, G, u) * t_basis(4, G, v) == t_basis(4, G, compose(u, v))


def test_group_algebra_at_q1():
    F = RationalQ(Fraction(1))
    for u in all_perms(3):
        for v in all_perms(3):
            assert mult(t_basis(3, F, u), t_basis(3, F, v)) == t_basis(3, F, compose(u, v))


def test_T_ba():
    assert T_ba(4, G, 4, 1) == t_basis(4, G, s_ba(4, 4, 1))
    assert T_ba(4, G, 2, 2) == unit(4, G)
    with pytest.raises(ValueError):
        T_ba(4, G, 1, 2)
    with pytest.raises(ValueError):
        T_ba(4, G, 5, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_tmoves_generic(n):
    rep = verify_tmoves(n, G)
    assert rep.ok, rep.failures()


def test_tmoves_other_fields(field):
    assert verify_tmoves(4, field).ok


def test_characters():
    q = G.element(G.q)
    for w in all_perms(4):
        assert character("trivial", t_basis(4, G, w)) == q ** length(w)
        assert character("sign", t_basis(4, G, w)) == G.element(G.from_int((-1) ** length(w)))
    T1 = generator(3, G, 1)
    assert character("trivial", (T1 - unit(3, G).scale(q)) * T1) == G.element(G.zero)
    with pytest.raises(ValueError):
        character("bogus", T1)


def test_embedding_is_multiplicative():
    a = t_basis(3, G, (2, 3, 1)) + generator(3, G, 1)
    b = t_basis(3, G, (3, 1, 2))
    assert (a * b).embed(5) == a.embed(5) * b.embed(5)


def test_string_form():
    assert str(generator(2, G, 1) * generator(2, G, 1)) == "(q)*T[1, 2] + (q - 1)*T[2, 1]"
