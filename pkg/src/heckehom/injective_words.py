"""
The complex of injective words ``C(n)`` and its translation ``C'(n)`` into
induced permutation modules, both at ``q = 1``.

Everything here is pure permutation combinatorics: no Hecke multiplication is
used, so comparing ``C'(n)`` with ``D(n)`` at ``q = 1`` is an independent check.

>>> from heckehom.scalars import RationalQ
>>> from fractions import Fraction
>>> C = build_C(3, RationalQ(Fraction(1)))
>>> [C.dim(r) for r in C.degrees()]
[1, 3, 6, 6]
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .complexes import ChainMap, FreeChainComplex, homology_dims, is_iso, verify_chain_map
from .coxeter import Perm, all_perms, compose, coset_reps, s_ba
from .linalg import Mat
from .reports import Report
from .scalars import ScalarField

__all__ = [
    "InjWord", "injective_words", "build_C", "build_Cprime", "theta",
    "farmer_check", "theta_check",
]


@dataclass(frozen=True)
class InjWord:
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"repeated letter in {self.letters}")
        if any(not 1 <= a <= self.n for a in self.letters):
            raise ValueError(f"letter out of range in {self.letters}")

    def delete(self, j: int) -> InjWord:
        return InjWord(self.n, self.letters[:j] + self.letters[j + 1:])

    def act(self, sigma: Perm) -> InjWord:
        return InjWord(self.n, tuple(sigma[a - 1] for a in self.letters))


@lru_cache(maxsize=None)
def injective_words(n: int, length: int) -> tuple[tuple[int, ...], ...]:
    """Words of the given length, lexicographically ordered."""
    return tuple(permutations(range(1, n + 1), length))


def _require_q_one(field: ScalarField) -> None:
    if not field.q_is_one:
        raise ValueError(f"the injective-word complexes need q = 1, got {field.descriptor}")


def _signed(field: ScalarField, j: int):
    return field.one if j % 2 == 0 else field.neg(field.one)


def build_C(n: int, field: ScalarField) -> FreeChainComplex:
    _require_q_one(field)
    dims = {r: len(injective_words(n, r + 1)) for r in range(-1, n)}
    bds = {}
    for r in range(0, n):
        tgt = {w: k for k, w in enumerate(injective_words(n, r))}
        cols = []
        for w in injective_words(n, r + 1):
            col: dict = {}
            for j in range(r + 1):
                k = tgt[w[:j] + w[j + 1:]]
                col[k] = field.add(col.get(k, field.zero), _signed(field, j))
            cols.append({k: c for k, c in col.items() if not field.is_zero(c)})
        bds[r] = Mat(field, dims[r - 1], dims[r], cols)
    return FreeChainComplex(field, dims, bds)


def _par(n: int, m: int) -> int:
    # M(n, 0) is normalized to M(n, 1), as for the Hecke-side modules
    return min(max(m, 1), n)


def _coset_index(n: int, k: int) -> dict[Perm, int]:
    return {x: i for i, x in enumerate(coset_reps(n, k, "left"))}


def _rep(w: Perm, k: int) -> Perm:
    # the representative of w S_k: sort the first k positions
    return tuple(sorted(w[:k])) + w[k:]


def build_Cprime(n: int, field: ScalarField) -> FreeChainComplex:
    """Degree ``r``: ``M(n, n-r-1)`` at ``q = 1``; ``d_j(s (x) 1) = s s_{n-r+j,n-r} (x) 1``."""
    _require_q_one(field)
    dims = {r: len(coset_reps(n, _par(n, n - r - 1), "left")) for r in range(-1, n)}
    bds = {}
    for r in range(0, n):
        src = coset_reps(n, _par(n, n - r - 1), "left")
        k_tgt = _par(n, n - r)
        tgt = _coset_index(n, k_tgt)
        cols = []
        for sigma in src:
            col: dict = {}
            for j in range(r + 1):
                w = compose(sigma, s_ba(n, n - r + j, n - r))
                k = tgt[_rep(w, k_tgt)]
                col[k] = field.add(col.get(k, field.zero), _signed(field, j))
            cols.append({k: c for k, c in col.items() if not field.is_zero(c)})
        bds[r] = Mat(field, dims[r - 1], dims[r], cols)
    return FreeChainComplex(field, dims, bds)


def _theta_word(sigma: Perm, n: int, r: int) -> tuple[int, ...]:
    return tuple(sigma[i - 1] for i in range(n - r, n + 1))


def theta(n: int, field: ScalarField) -> ChainMap:
    """``Theta_r(s (x) 1) = (s(n-r), ..., s(n))``."""
    _require_q_one(field)
    src = build_Cprime(n, field)
    tgt = build_C(n, field)
    blocks = {}
    for r in range(-1, n):
        words = {w: k for k, w in enumerate(injective_words(n, r + 1))}
        basis = coset_reps(n, _par(n, n - r - 1), "left")
        cols = [{words[_theta_word(s, n, r)]: field.one} for s in basis]
        blocks[r] = Mat(field, tgt.dim(r), src.dim(r), cols)
    return ChainMap(src, tgt, blocks)


def _is_permutation_matrix(M: Mat, one) -> bool:
    if M.nrows != M.ncols:
        return False
    rows = set()
    for c in M.cols:
        if len(c) != 1:
            return False
        (i, x), = c.items()
        if x != one or i in rows:
            return False
        rows.add(i)
    return True


def farmer_check(n: int, field: ScalarField, method: str = "auto") -> Report:
    rep = Report(f"farmer(n={n})")
    C = build_C(n, field)
    betti = homology_dims(C, method)
    low = [(d, b) for d, b in betti if d <= n - 2 and b]
    rep.add("betti-vanish", "Theorem 3.3", not low, betti=[b for _, b in betti],
            dims=[C.dim(r) for r in C.degrees()])
    return rep


def theta_check(n: int, field: ScalarField, samples: int = 50, seed: int = 0) -> Report:
    from .dcomplex import build_D

    rep = Report(f"theta(n={n})")
    f = theta(n, field)
    rep.extend(verify_chain_map(f, prefix="chain-map-", anchor="Proposition 4.6"))
    perm_blocks = [r for r, B in f.blocks.items() if not _is_permutation_matrix(B, field.one)]
    rep.add("permutation-blocks", "Proposition 4.6", not perm_blocks, failures=perm_blocks)
    rep.add("iso", "Proposition 4.6", is_iso(f))

    # S_n-equivariance on random basis tensors
    rng = random.Random(seed)
    perms = all_perms(n)
    bad = []
    for _ in range(samples):
        r = rng.randrange(-1, n)
        k = _par(n, n - r - 1)
        basis = coset_reps(n, k, "left")
        s = rng.choice(basis)
        tau = rng.choice(perms)
        moved = _rep(compose(tau, s), k)
        lhs = _theta_word(moved, n, r)
        rhs = InjWord(n, _theta_word(s, n, r)).act(tau).letters
        if lhs != rhs:
            bad.append({"r": r, "sigma": list(s), "tau": list(tau)})
    rep.add("equivariant", "Proposition 4.6", not bad, samples=samples, failures=bad[:3])

    D = build_D(n, field).complex
    Cp = f.source
    diff = [r for r in range(0, n) if Cp.boundary(r) != D.boundary(r)]
    rep.add("cprime-equals-d-at-q1", "Definition 4.4", not diff, failures=diff)
    return rep
