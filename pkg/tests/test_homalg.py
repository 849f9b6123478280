from fractions import Fraction

import pytest

from heckehom.homalg import (
    GuardExceeded, build_resolution, ext, resolution_audit, stability_check,
    stabilization_map, tor,
)
from heckehom.hecke import generator, unit
from heckehom.scalars import CyclotomicRoot, PrimeField, RationalQ

GF2 = PrimeField(2, 1)


def test_rank_one_algebra():
    F = RationalQ(Fraction(3))
    R = build_resolution(1, F, 3)
    assert R.ranks[:4] == [1, 0, 0, 0]
    assert tor(1, F, 3).dims == [1, 0, 0, 0]


def test_n2_gf2_resolution_is_periodic():
    R = build_resolution(2, GF2, 5)
    assert R.ranks[:6] == [1] * 6
    # every differential is multiplication by 1 + T_1 (= T_1 - q)
    target = generator(2, GF2, 1) + unit(2, GF2)
    for d in range(1, 6):
        assert R.component(d, 0, 0) == target
    assert tor(2, GF2, 5).dims == [1] * 6
    assert ext(2, GF2, 5).dims == [1] * 6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [Fraction(2), Fraction(3), Fraction(1, 2)])
def test_semisimple_vanishing(n, q):
    F = RationalQ(q)
    assert tor(n, F, 3).dims == [1, 0, 0, 0]
    assert ext(n, F, 3).dims == [1, 0, 0, 0]


def test_q_minus_one_nontrivial():
    for F in (CyclotomicRoot(2), RationalQ(Fraction(-1))):
        assert ext(2, F, 3).dims == [1, 1, 1, 1]


@pytest.mark.parametrize("F,n,dims", [
    (GF2, 3, [1, 1, 1, 1]), (GF2, 4, [1, 1, 2, 3]), (PrimeField(3, 1), 3, [1, 0, 0, 1]),
    (CyclotomicRoot(2), 4, [1, 1, 1, 2]),
])
def test_observed_tables(F, n, dims):
    assert tor(n, F, 3).dims == dims == ext(n, F, 3).dims


@pytest.mark.parametrize("F", [GF2, CyclotomicRoot(2), CyclotomicRoot(3), RationalQ(Fraction(2))],
                         ids=str)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_resolution_choice_is_irrelevant(F, n):
    a = tor(n, F, 3, order="support").dims
    b = tor(n, F, 3, order="reverse").dims
    assert a == b
    assert ext(n, F, 3, order="reverse").dims == ext(n, F, 3).dims


@pytest.mark.parametrize("n", [2, 3, 4])
def test_resolution_audit(n):
    assert resolution_audit(build_resolution(n, GF2, 3)).ok


def test_guards():
    with pytest.raises(GuardExceeded):
        tor(5, GF2, 2)
    with pytest.raises(GuardExceeded):
        tor(2, GF2, 7)
    assert tor(2, GF2, 7, guard_override=True).dims == [1] * 8


@pytest.mark.parametrize("F", [GF2, CyclotomicRoot(2)], ids=str)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stability_range(F, n):
    assert stability_check(n, F, 3).ok


def test_sharpness_witness():
    S = stabilization_map(4, GF2, 3)
    assert (S.tor_small[2], S.tor_big[2], S.tor_image[2]) == (1, 2, 1)
    assert not S.tor_surjective(2)


def test_stability_needs_positive_n():
    with pytest.raises(ValueError):
        stabilization_map(0, GF2, 2)
