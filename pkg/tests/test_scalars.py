from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckehom.scalars import (
    CyclotomicRoot, FieldDescriptorError, FieldMismatch, GenericQ, PrimeField, RationalQ,
    parse_field,
)
from conftest import FIELDS

ints = st.integers(-6, 6)


def _elem(F, a, b, k):
    # a + b q^k, a generic-looking element of any field
    return F.element(F.add(F.from_int(a), F.mul(F.from_int(b), F.q_power(k))))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.descriptor)
@given(a=ints, b=ints, c=ints, d=ints, k=st.integers(-3, 3), m=st.integers(-3, 3))
def test_field_axioms(F, a, b, c, d, k, m):
    x, y, z = _elem(F, a, b, k), _elem(F, c, d, m), _elem(F, b, c, k + m)
    assert x + y == y + x and x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == F.element(F.zero)
    if not x.is_zero():
        assert x * (1 / x) == F.element(F.one)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.descriptor)
def test_q_is_invertible(F):
    q = F.element(F.q)
    assert q * F.element(F.q_inv) == F.element(F.one)
    assert F.element(F.q_power(-3)) * q ** 3 == F.element(F.one)


@given(a=ints, b=ints, c=ints, d=st.integers(1, 6), k=st.integers(-3, 3),
       t=st.fractions(min_value=-5, max_value=5, max_denominator=5))
def test_generic_specializes_like_rational(a, b, c, d, k, t):
    if t == 0 or t == -d:
        return
    G, R = GenericQ(), RationalQ(t)
    num = lambda F: F.add(F.from_int(a), F.mul(F.from_int(b), F.q_power(k)))
    den = lambda F: F.add(F.from_int(d), F.q)
    g = G.div(G.mul(num(G), G.from_int(c)), den(G))
    r = R.div(R.mul(num(R), R.from_int(c)), den(R))
    assert G.specialize(g, t) == r


@pytest.mark.parametrize("l", [2, 3, 4, 6])
def test_cyclotomic_root_order(l):
    F = CyclotomicRoot(l)
    q = F.element(F.q)
    assert q ** l == F.element(F.one)
    for k in range(1, l):
        assert q ** k != F.element(F.one)


def test_prime_field_arithmetic():
    F = PrimeField(7, 3)
    assert F.element(F.q_inv) == F.element(5)
    assert F.from_int(-1) == 6


@pytest.mark.parametrize("desc,expect", [
    ("rational:q=3/2", "rational:q=3/2"), ("rational:q=-1", "rational:q=-1"),
    ("gf:p=2,q=1", "gf:p=2,q=1"), ("cyclotomic:l=3", "cyclotomic:l=3"), ("generic", "generic"),
])
def test_parse_roundtrip(desc, expect):
    assert parse_field(desc).descriptor == expect


@pytest.mark.parametrize("desc", [
    "", "rational", "rational:q=0", "rational:q=1/0", "gf:p=4,q=1", "gf:p=5,q=0",
    "gf:p=5,q=5", "cyclotomic:l=1", "cyclotomic:l=0", "Generic", "rational: q=1", "gf:q=1,p=2",
])
def test_parse_rejects(desc):
    with pytest.raises(FieldDescriptorError):
        parse_field(desc)


def test_mixing_fields_is_an_error():
    a = RationalQ(Fraction(2)).element(Fraction(1))
    b = PrimeField(3, 1).element(1)
    with pytest.raises(FieldMismatch):
        a + b
