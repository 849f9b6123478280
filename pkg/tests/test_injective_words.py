from fractions import Fraction

import pytest

from heckehom.dcomplex import build_D
from heckehom.injective_words import (
    InjWord, build_C, build_Cprime, farmer_check, injective_words, theta, theta_check,
)
from heckehom.complexes import verify_chain_map, is_iso
from heckehom.scalars import GenericQ, PrimeField, RationalQ

Q1 = RationalQ(Fraction(1))


def test_words():
    assert injective_words(3, 2)[:3] == ((1, 2), (1, 3), (2, 1))
    w = InjWord(4, (3, 1, 4))
    assert w.delete(1).letters == (3, 4)
    assert w.act((2, 3, 4, 1)).letters == (4, 2, 1)
    with pytest.raises(ValueError):
        InjWord(3, (1, 1))
    with pytest.raises(ValueError):
        InjWord(3, (4,))


@pytest.mark.parametrize("F", [Q1, PrimeField(2, 1), PrimeField(3, 1)], ids=str)
@pytest.mark.parametrize("n", range(0, 6))
def test_farmer_and_theta(n, F):
    assert farmer_check(n, F).ok
    assert theta_check(n, F, samples=20).ok


@pytest.mark.parametrize("n", range(0, 6))
def test_cprime_equals_d_at_q1(n):
    Cp, D = build_Cprime(n, Q1), build_D(n, Q1).complex
    assert all(Cp.boundary(r) == D.boundary(r) for r in range(0, n))


def test_needs_q_one():
    with pytest.raises(ValueError):
        build_C(3, GenericQ())
    with pytest.raises(ValueError):
        build_Cprime(3, RationalQ(Fraction(2)))


def test_scaled_theta_still_iso():
    f = theta(3, Q1)
    assert verify_chain_map(f).ok and is_iso(f)
    # scaling every block by q over Q(q) keeps a chain iso
    G = GenericQ()
    D = build_D(3, G).complex
    from heckehom.complexes import ChainMap
    from heckehom.linalg import Mat
    g = ChainMap(D, D, {r: Mat.identity(G, D.dim(r)).scale(G.q) for r in D.degrees()})
    assert verify_chain_map(g).ok and is_iso(g)
