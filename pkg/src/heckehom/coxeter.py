"""
Type-A Coxeter combinatorics on ``S_n``.

Permutations are tuples in one-line notation ``(w(1), ..., w(n))`` with values
in ``1..n``. Products are composition of functions, ``(u*v)(i) = u(v(i))``, so
left multiplication by ``s_i`` swaps the *values* ``i, i+1`` and right
multiplication swaps the *positions* ``i, i+1``.

Parabolic subgroups are given by sets of generator indices; ``S_k`` (the
subgroup generated by ``s_1, ..., s_{k-1}``) is ``parabolic(k)``, and both
``k = 0`` and ``k = 1`` give the trivial subgroup.

>>> s_ba(3, 3, 1)
(3, 1, 2)
>>> reduced_word(longest(3))
(1, 2, 1)
>>> [x for x in coset_reps(3, 2)]
[(1, 2, 3), (1, 3, 2), (3, 1, 2)]
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal

__all__ = [
    "Perm", "CoxWord", "ParabolicRank", "OrbitTooLarge",
    "perm", "identity", "simple", "s_ba", "longest", "compose", "inverse",
    "length", "embed", "all_perms", "lmul_s", "rmul_s",
    "has_left_descent", "has_right_descent", "left_descents", "right_descents",
    "reduced_word", "evaluate", "word_problem", "tits_reduce",
    "matsumoto_orbit", "parabolic", "coset_reps", "coset_reps_in",
    "parabolic_factorize", "double_coset_reps", "mackey_check",
]

Perm = tuple[int, ...]
Side = Literal["left", "right"]


class OrbitTooLarge(RuntimeError):
    pass


def perm(images: Iterable[int]) -> Perm:
    w = tuple(images)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def simple(n: int, i: int) -> Perm:
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def s_ba(n: int, b: int, a: int) -> Perm:
    """The cycle ``s_{b-1} s_{b-2} ... s_a``: sends ``a`` to ``b``, lowers ``a+1..b``."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"need 1 <= a <= b <= n, got a={a}, b={b}, n={n}")
    w = list(range(1, n + 1))
    w[a - 1] = b
    for i in range(a + 1, b + 1):
        w[i - 1] = i - 1
    return tuple(w)


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def compose(u: Perm, v: Perm) -> Perm:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[i - 1] for i in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for pos, val in enumerate(w, 1):
        out[val - 1] = pos
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def embed(w: Perm, n: int) -> Perm:
    """Image of ``w`` under the standard inclusion ``S_m -> S_n``."""
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """``S_n`` in canonical order: by length, then lexicographically."""
    return tuple(sorted(itertools.permutations(range(1, n + 1)),
                        key=lambda w: (length(w), w)))


def lmul_s(i: int, w: Perm) -> Perm:
    """``s_i * w``: swap the values ``i`` and ``i+1``."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def rmul_s(w: Perm, i: int) -> Perm:
    """``w * s_i``: swap the entries in positions ``i`` and ``i+1``."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def has_left_descent(w: Perm, i: int) -> bool:
    """True iff ``l(s_i w) < l(w)``, i.e. ``i+1`` occurs before ``i`` in ``w``."""
    return w.index(i + 1) < w.index(i)


def has_right_descent(w: Perm, i: int) -> bool:
    """True iff ``l(w s_i) < l(w)``."""
    return w[i - 1] > w[i]


def left_descents(w: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if has_left_descent(w, i))


def right_descents(w: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if has_right_descent(w, i))


# -- words ----------------------------------------------------------------

@dataclass(frozen=True)
class CoxWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i in self.letters:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"letter {i} out of range for S_{self.n}")

    def __len__(self):
        return len(self.letters)


def evaluate(word: CoxWord) -> Perm:
    w = identity(word.n)
    for i in word.letters:
        w = rmul_s(w, i)
    return w


def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for ``w``."""
    letters = []
    n = len(w)
    while True:
        for i in range(1, n):
            if has_left_descent(w, i):
                letters.append(i)
                w = lmul_s(i, w)
                break
        else:
            return tuple(letters)


def word_problem(word: CoxWord) -> tuple[bool, CoxWord]:
    """
    Shorten a word until it is reduced.

    Letters are read left to right against a reduced prefix. When appending
    ``s`` would lower the length, the exchange condition locates the letter of
    the prefix that cancels against ``s``; deleting both is exactly the net
    effect of the braid/commutation moves followed by an ``ss`` deletion.

    >>> word_problem(CoxWord(3, (1, 1)))
    (False, CoxWord(n=3, letters=()))
    """
    n = word.n
    prefix: list[int] = []
    w = identity(n)
    shortened = False
    for s in word.letters:
        if not has_right_descent(w, s):
            prefix.append(s)
            w = rmul_s(w, s)
            continue
        shortened = True
        target = rmul_s(w, s)
        # find m with s_{i1}..^s_{im}..s_{ik} == w s
        u = identity(n)
        for m, letter in enumerate(prefix):
            cand = u
            for rest in prefix[m + 1:]:
                cand = rmul_s(cand, rest)
            if cand == target:
                del prefix[m]
                break
            u = rmul_s(u, letter)
        else:  # pragma: no cover - exchange condition guarantees a hit
            raise AssertionError("exchange condition failed")
        w = target
    return (not shortened, CoxWord(n, tuple(prefix)))


def _moves(letters: tuple[int, ...]):
    """All words reachable by one braid or commutation move."""
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if abs(a - b) > 1:
            yield letters[:p] + (b, a) + letters[p + 2:]
        elif (abs(a - b) == 1 and p + 2 < len(letters)
              and letters[p + 2] == a):
            yield letters[:p] + (b, a, b) + letters[p + 3:]


def tits_reduce(word: CoxWord, limit: int = 20000) -> CoxWord:
    """
    Literal M-move search: explore the braid/commutation class of the word,
    delete an ``ss`` whenever one appears, repeat. Exponential; for checking
    :func:`word_problem` on short words.
    """
    letters = word.letters
    while True:
        seen = {letters}
        queue = deque([letters])
        hit = None
        while queue and hit is None:
            cur = queue.popleft()
            for p in range(len(cur) - 1):
                if cur[p] == cur[p + 1]:
                    hit = cur[:p] + cur[p + 2:]
                    break
            else:
                for nxt in _moves(cur):
                    if nxt not in seen:
                        seen.add(nxt)
                        if len(seen) > limit:
                            raise OrbitTooLarge(f"more than {limit} words")
                        queue.append(nxt)
        if hit is None:
            return CoxWord(word.n, letters)
        letters = hit


def matsumoto_orbit(w: Perm, limit: int = 300_000) -> set[CoxWord]:
    """All reduced words of ``w``, by closing one under braid/commutation moves."""
    n = len(w)
    start = reduced_word(w)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise OrbitTooLarge(f"orbit of {w} exceeds {limit} words")
                queue.append(nxt)
    return {CoxWord(n, x) for x in seen}


# -- parabolic subgroups and cosets ---------------------------------------

@dataclass(frozen=True)
class ParabolicRank:
    """``S_k`` inside ``S_n``, generated by ``s_1..s_{k-1}``."""
    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def gens(self) -> frozenset[int]:
        return parabolic(self.k)

    @property
    def order(self) -> int:
        out = 1
        for i in range(2, self.k + 1):
            out *= i
        return out


def parabolic(k: int) -> frozenset[int]:
    return frozenset(range(1, k))


def _gens(J) -> frozenset[int]:
    if isinstance(J, ParabolicRank):
        return J.gens
    if isinstance(J, int):
        return parabolic(J)
    return frozenset(J)


def _sort(ws: Iterable[Perm]) -> list[Perm]:
    return sorted(ws, key=lambda w: (length(w), w))


def coset_reps_in(n: int, J, side: Side = "right",
                  ambient: Iterable[Perm] | None = None) -> list[Perm]:
    """
    Distinguished coset representatives of the parabolic ``W_J`` inside the
    elements ``ambient`` (default all of ``S_n``). ``side="right"`` gives
    ``X_J`` (no reduced word starts in ``J``), ``side="left"`` gives
    ``X_J^{-1}`` (no reduced word ends in ``J``).
    """
    gens = _gens(J)
    pool = all_perms(n) if ambient is None else ambient
    if side == "right":
        out = [w for w in pool if not any(has_left_descent(w, i) for i in gens)]
    else:
        out = [w for w in pool if not any(has_right_descent(w, i) for i in gens)]
    return _sort(out)


@lru_cache(maxsize=None)
def _coset_reps_cached(n: int, k: int, side: str) -> tuple[Perm, ...]:
    return tuple(coset_reps_in(n, parabolic(k), side))


def coset_reps(n: int, k: int, side: Side = "right") -> list[Perm]:
    """``X_{S_k}`` (``side="right"``) or ``X_{S_k}^{-1}`` inside ``S_n``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}")
    return list(_coset_reps_cached(n, k, side))


def parabolic_factorize(n: int, J, w: Perm, side: Side = "right") -> tuple[Perm, Perm]:
    """
    ``side="right"``: ``w = v*x`` with ``v`` in ``W_J``, ``x`` in ``X_J``.
    ``side="left"``: ``w = x*v`` with ``x`` in ``X_J^{-1}``.
    Returns ``(v, x)``; lengths add.
    """
    gens = sorted(_gens(J))
    v = identity(n)
    x = w
    if side == "right":
        while True:
            for i in gens:
                if has_left_descent(x, i):
                    x = lmul_s(i, x)
                    v = rmul_s(v, i)
                    break
            else:
                return v, x
    while True:
        for i in gens:
            if has_right_descent(x, i):
                x = rmul_s(x, i)
                v = lmul_s(i, v)
                break
        else:
            return v, x


def double_coset_reps(n: int, J, K) -> list[Perm]:
    """``X_{JK}``: no reduced word starts in ``J`` or ends in ``K``."""
    gj, gk = _gens(J), _gens(K)
    return _sort(w for w in all_perms(n)
                 if not any(has_left_descent(w, i) for i in gj)
                 and not any(has_right_descent(w, i) for i in gk))


def _conj_meet(d: Perm, J: frozenset[int], K: frozenset[int], right: bool) -> frozenset[int]:
    """``J^d ∩ K`` (``right``) or ``K ∩ ^dJ``, as generator indices."""
    n = len(d)
    dinv = inverse(d)
    simple_of = {simple(n, i): i for i in range(1, n)}
    out = set()
    for j in J:
        s = simple(n, j)
        c = compose(compose(dinv, s), d) if right else compose(compose(d, s), dinv)
        i = simple_of.get(c)
        if i is not None and i in K:
            out.add(i)
    return frozenset(out)


@dataclass
class MackeyReport:
    n: int
    J: frozenset[int]
    K: frozenset[int]
    blocks: list[tuple[Perm, int]] = field(default_factory=list)
    inverted_blocks: list[tuple[Perm, int]] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def mackey_check(n: int, J, K) -> MackeyReport:
    """
    Verify ``X_J = ⊔_{d in X_JK} d * X^K_{J^d ∩ K}`` and the inverted form
    ``X_J^{-1} = ⊔_{d in X_KJ} (X^K_{K ∩ ^dJ})^{-1} * d``, with lengths adding.
    """
    gj, gk = _gens(J), _gens(K)
    rep = MackeyReport(n, gj, gk)
    WK = [w for w in all_perms(n) if set(reduced_word(w)) <= gk]

    seen: set[Perm] = set()
    for d in double_coset_reps(n, gj, gk):
        L = _conj_meet(d, gj, gk, right=True)
        ys = coset_reps_in(n, L, "right", ambient=WK)
        rep.blocks.append((d, len(ys)))
        for y in ys:
            w = compose(d, y)
            if length(w) != length(d) + length(y):
                rep.failures.append(f"lengths do not add: d={d}, y={y}")
            if w in seen:
                rep.failures.append(f"blocks overlap at {w}")
            seen.add(w)
    target = set(coset_reps_in(n, gj, "right"))
    if seen != target:
        rep.failures.append(f"union differs from X_J: {sorted(seen ^ target)[:3]}")

    seen = set()
    for d in double_coset_reps(n, gk, gj):
        L = _conj_meet(d, gj, gk, right=False)
        ys = coset_reps_in(n, L, "right", ambient=WK)
        rep.inverted_blocks.append((d, len(ys)))
        for y in ys:
            w = compose(inverse(y), d)
            if length(w) != length(d) + length(y):
                rep.failures.append(f"lengths do not add: y^-1={inverse(y)}, d={d}")
            if w in seen:
                rep.failures.append(f"inverted blocks overlap at {w}")
            seen.add(w)
    target = set(coset_reps_in(n, gj, "left"))
    if seen != target:
        rep.failures.append("inverted union differs from X_J^{-1}")
    return rep
