from math import factorial

import pytest
from hypothesis import given, strategies as st

from heckehom.coxeter import (
    CoxWord, OrbitTooLarge, all_perms, compose, coset_reps, coset_reps_in,
    double_coset_reps, evaluate, identity, inverse, length, longest, mackey_check,
    matsumoto_orbit, parabolic, parabolic_factorize, reduced_word, s_ba, simple,
    tits_reduce, word_problem,
)

words = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, max(n - 1, 1)), max_size=14)
                        if n > 1 else st.just([])))


@given(words)
def test_word_problem_normal_form(nw):
    n, letters = nw
    w = CoxWord(n, tuple(letters))
    reduced, nf = word_problem(w)
    assert evaluate(nf) == evaluate(w)
    assert len(nf) == length(evaluate(w))
    assert reduced == (len(letters) == len(nf))


@given(st.integers(2, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1), max_size=7))))
def test_m_move_search_agrees(nw):
    n, letters = nw
    lit = tits_reduce(CoxWord(n, tuple(letters)))
    assert evaluate(lit) == evaluate(CoxWord(n, tuple(letters)))
    assert len(lit) == length(evaluate(lit))


@pytest.mark.parametrize("n", range(0, 6))
def test_reduced_word_is_lex_least(n):
    for w in all_perms(n):
        word = reduced_word(w)
        assert evaluate(CoxWord(n, word)) == w and len(word) == length(w)
        if 0 < length(w) <= 5:
            assert word == min(x.letters for x in matsumoto_orbit(w))


def test_length_examples():
    assert length(identity(4)) == 0
    assert length(longest(4)) == 6
    assert length(s_ba(5, 5, 2)) == 3
    assert s_ba(4, 3, 3) == identity(4)
    assert compose(simple(3, 1), simple(3, 2)) == (2, 3, 1)


def test_matsumoto_orbit_guard():
    assert len(matsumoto_orbit(longest(4))) == 16
    with pytest.raises(OrbitTooLarge):
        matsumoto_orbit(longest(6), limit=1000)


@pytest.mark.parametrize("n", range(0, 6))
def test_coset_counts(n):
    for k in range(0, n + 1):
        for side in ("right", "left"):
            reps = coset_reps(n, k, side)
            assert len(reps) == factorial(n) // factorial(max(k, 1))
            assert len(set(reps)) == len(reps)


def test_left_reps_are_inverses_of_right_reps():
    assert sorted(coset_reps(4, 2, "left")) == sorted(inverse(w) for w in coset_reps(4, 2, "right"))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.integers(1, max(n - 1, 1))), st.sampled_from(all_perms(n)))))
def test_parabolic_factorization(arg):
    n, J, w = arg
    J = frozenset(j for j in J if j < n)
    for side in ("right", "left"):
        v, x = parabolic_factorize(n, J, w, side)
        assert x in coset_reps_in(n, J, side)
        assert (compose(v, x) if side == "right" else compose(x, v)) == w
        assert length(w) == length(v) + length(x)


@pytest.mark.parametrize("n", range(1, 7))
def test_codimension_one_reps(n):
    assert set(coset_reps(n, n - 1)) == {s_ba(n, n, j) for j in range(1, n + 1)}
    for r in range(0, n):
        got = set(double_coset_reps(n, parabolic(n - 1), parabolic(max(n - r - 1, 0))))
        lo = n - r - 1 if r <= n - 2 else 1
        assert got == {s_ba(n, n, j) for j in range(lo, n + 1)}


@pytest.mark.parametrize("n", range(1, 5))
def test_mackey_all_pairs_small(n):
    gens = range(1, n)
    subsets = [frozenset(j for j in gens if mask >> (j - 1) & 1) for mask in range(2 ** (n - 1))]
    for J in subsets:
        for K in subsets:
            assert mackey_check(n, J, K).ok
