from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckehom.complexes import (
    ChainMap, ComplexError, FreeChainComplex, cone, euler_characteristic, homology_dims,
    is_iso, suspend, verify_chain_map,
)
from heckehom.linalg import Mat, nullspace, rank, solve
from heckehom.scalars import CyclotomicRoot, GenericQ, PrimeField, RationalQ
from conftest import FIELDS


def random_matrix(F, entries, nrows, ncols):
    rows = [[F.add(F.from_int(a), F.mul(F.from_int(b), F.q_power(k)))
             for a, b, k in entries[i * ncols:(i + 1) * ncols]] for i in range(nrows)]
    return Mat.from_dense(F, rows, ncols)


matrices = st.tuples(st.integers(0, 6), st.integers(0, 6)).flatmap(
    lambda s: st.tuples(st.just(s), st.lists(
        st.tuples(st.integers(-2, 2), st.integers(-1, 1), st.integers(-2, 2)),
        min_size=s[0] * s[1], max_size=s[0] * s[1])))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.descriptor)
@given(matrices)
def test_rank_routes_agree(F, data):
    (nr, nc), entries = data
    M = random_matrix(F, entries, nr, nc)
    r = rank(M, "cols")
    assert rank(M, "rows") == r == rank(M.transpose(), "cols")
    if isinstance(F, GenericQ):
        # specializing q can only lower the rank
        S = M.map_entries(lambda x: F.specialize(x, 7), RationalQ(Fraction(7)))
        assert rank(S) <= r
    else:
        assert rank(M, "flint") == r
    assert len(nullspace(M)) == nc - r


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.descriptor)
@given(matrices)
def test_nullspace_and_solve(F, data):
    (nr, nc), entries = data
    M = random_matrix(F, entries, nr, nc)
    for v in nullspace(M):
        assert not M.apply(v)
    b = M.apply({j: F.one for j in range(nc)})
    x = solve(M, b)
    assert x is not None and M.apply(x) == b


def test_cyclotomic_rank_is_exact():
    F = CyclotomicRoot(3)
    q = F.q
    # rows (1, q) and (q, q^2) are dependent; (1, q^2) breaks that
    M = Mat.from_dense(F, [[F.one, q], [q, F.mul(q, q)]])
    assert rank(M, "cols") == rank(M, "flint") == 1
    M2 = Mat.from_dense(F, [[F.one, q], [q, F.one]])
    assert rank(M2, "cols") == rank(M2, "flint") == 2


def test_generic_rank_vs_specialization():
    G = GenericQ()
    q = G.q
    qm1 = G.sub(q, G.one)
    M = Mat.from_dense(G, [[G.one, q], [qm1, G.mul(q, qm1)]])
    assert rank(M) == 1


def _interval(F):
    # 0 -> F --id--> F -> 0 in degrees 0, 1
    return FreeChainComplex(F, {0: 1, 1: 1}, {1: Mat.identity(F, 1)})


def test_dd_rejected():
    F = RationalQ(Fraction(1))
    one = Mat.identity(F, 1)
    with pytest.raises(ComplexError):
        FreeChainComplex(F, {0: 1, 1: 1, 2: 1}, {1: one, 2: one})
    with pytest.raises(ComplexError):
        FreeChainComplex(F, {0: 1, 1: 2}, {1: one})


@pytest.mark.parametrize("F", FIELDS[:4], ids=lambda F: F.descriptor)
def test_cone_is_acyclic(F):
    X = FreeChainComplex(F, {-1: 1, 0: 2, 1: 1},
                         {0: Mat.from_dense(F, [[F.one, F.one]]),
                          1: Mat.from_dense(F, [[F.one], [F.neg(F.one)]])})
    C = cone(X)
    assert all(b == 0 for _, b in homology_dims(C))
    assert euler_characteristic(C) == 0


def test_euler_identity():
    F = PrimeField(3, 1)
    X = FreeChainComplex(F, {0: 3, 1: 2}, {1: Mat.from_dense(F, [[1, 0], [0, 0], [0, 0]])})
    betti = homology_dims(X)
    assert betti == [(0, 2), (1, 1)]
    assert sum((-1) ** r * b for r, b in betti) == euler_characteristic(X)


def test_suspension_shifts_degrees():
    F = RationalQ(Fraction(2))
    S = suspend(_interval(F), 2)
    assert S.lo == 2 and S.hi == 3
    with pytest.raises(ValueError):
        suspend(_interval(F), 0)


def test_chain_map_checks():
    F = GenericQ()
    X = _interval(F)
    f = ChainMap(X, X, {0: Mat.identity(F, 1).scale(F.q), 1: Mat.identity(F, 1).scale(F.q)})
    assert verify_chain_map(f).ok and is_iso(f)
    g = ChainMap(X, X, {0: Mat.identity(F, 1), 1: Mat.identity(F, 1).scale(F.q)})
    assert not verify_chain_map(g)["commutes"].ok
