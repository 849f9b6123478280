"""
The Iwahori-Hecke algebra ``H_n`` of type ``A_{n-1}`` in its standard basis.

An element is a finitely supported map ``w -> coefficient`` from permutations
(one-line tuples) to raw field values. Products are built from the generator
rules

    T_s T_w = T_{sw}                      if l(sw) > l(w)
    T_s T_w = (q-1) T_w + q T_{sw}        otherwise

and their mirror images for right multiplication.

>>> from heckehom.scalars import GenericQ
>>> F = GenericQ()
>>> T1 = generator(2, F, 1)
>>> print(T1 * T1)
(q)*T[1, 2] + (q - 1)*T[2, 1]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .coxeter import (
    Perm, all_perms, embed, has_left_descent, has_right_descent, identity,
    length, lmul_s, reduced_word, rmul_s,
)
from .reports import Report
from .scalars import Scalar, ScalarField

__all__ = [
    "HeckeElement", "Character", "tables", "t_basis", "unit", "generator",
    "T_ba", "mult", "character", "verify_tmoves",
]


@dataclass(frozen=True)
class _Tables:
    n: int
    perms: tuple[Perm, ...]
    index: dict[Perm, int]
    lengths: dict[Perm, int]
    words: dict[Perm, tuple[int, ...]]
    # lmul[i][w] = (s_i w, length goes up); rmul likewise for w s_i
    lmul: dict[int, dict[Perm, tuple[Perm, bool]]]
    rmul: dict[int, dict[Perm, tuple[Perm, bool]]]


@lru_cache(maxsize=None)
def tables(n: int) -> _Tables:
    perms = all_perms(n)
    lmul = {i: {w: (lmul_s(i, w), not has_left_descent(w, i)) for w in perms}
            for i in range(1, n)}
    rmul = {i: {w: (rmul_s(w, i), not has_right_descent(w, i)) for w in perms}
            for i in range(1, n)}
    return _Tables(
        n=n,
        perms=perms,
        index={w: k for k, w in enumerate(perms)},
        lengths={w: length(w) for w in perms},
        words={w: reduced_word(w) for w in perms},
        lmul=lmul,
        rmul=rmul,
    )


class HeckeElement:
    """Element of ``H_n`` over ``field``; coordinates hold raw field values."""

    __slots__ = ("n", "field", "coords")

    def __init__(self, n: int, field: ScalarField, coords: dict[Perm, object] | None = None):
        self.n = n
        self.field = field
        if coords:
            isz = field.is_zero
            coords = {w: c for w, c in coords.items() if not isz(c)}
        self.coords = coords or {}

    # -- basic structure -----------------------------------------------
    def _check(self, other: HeckeElement) -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: H_{self.n} vs H_{other.n}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def coeff(self, w: Perm) -> Scalar:
        return Scalar(self.field, self.coords.get(tuple(w), self.field.zero))

    def support(self) -> list[Perm]:
        idx = tables(self.n).index
        return sorted(self.coords, key=idx.__getitem__)

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n or self.field != other.field:
            return False
        if self.coords.keys() != other.coords.keys():
            return False
        eq = self.field.eq
        return all(eq(c, other.coords[w]) for w, c in self.coords.items())

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        add = self.field.add
        out = dict(self.coords)
        for w, c in other.coords.items():
            out[w] = add(out[w], c) if w in out else c
        return HeckeElement(self.n, self.field, out)

    def __neg__(self) -> HeckeElement:
        neg = self.field.neg
        return HeckeElement(self.n, self.field, {w: neg(c) for w, c in self.coords.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c) -> HeckeElement:
        """Multiply by a raw value or a :class:`Scalar`."""
        if isinstance(c, Scalar):
            c = c.value
        mul = self.field.mul
        return HeckeElement(self.n, self.field, {w: mul(c, x) for w, x in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mult(self, other)
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.__mul__(other)
        return NotImplemented

    # -- generator actions ---------------------------------------------
    def _gen(self, table: dict[Perm, tuple[Perm, bool]]) -> HeckeElement:
        F = self.field
        add, mul = F.add, F.mul
        q = F.q
        qm1 = F.sub(q, F.one)
        out: dict[Perm, object] = {}
        for w, c in self.coords.items():
            sw, up = table[w]
            if up:
                out[sw] = add(out[sw], c) if sw in out else c
            else:
                a = mul(qm1, c)
                out[w] = add(out[w], a) if w in out else a
                b = mul(q, c)
                out[sw] = add(out[sw], b) if sw in out else b
        return HeckeElement(self.n, F, out)

    def lmul_gen(self, i: int) -> HeckeElement:
        """``T_i * self``."""
        return self._gen(tables(self.n).lmul[i])

    def rmul_gen(self, i: int) -> HeckeElement:
        """``self * T_i``."""
        return self._gen(tables(self.n).rmul[i])

    def embed(self, n: int) -> HeckeElement:
        """Image under ``H_m -> H_n``, ``T_w -> T_w``."""
        return HeckeElement(n, self.field, {embed(w, n): c for w, c in self.coords.items()})

    def __str__(self):
        if not self.coords:
            return "0"
        F = self.field
        return " + ".join(f"({F.to_str(self.coords[w])})*T{list(w)}" for w in self.support())

    def __repr__(self):
        return f"HeckeElement(n={self.n}, {self})"


def t_basis(n: int, field: ScalarField, w: Perm) -> HeckeElement:
    w = tuple(w)
    if len(w) != n:
        raise ValueError(f"{w} is not in S_{n}")
    return HeckeElement(n, field, {w: field.one})


def unit(n: int, field: ScalarField) -> HeckeElement:
    return t_basis(n, field, identity(n))


def generator(n: int, field: ScalarField, i: int) -> HeckeElement:
    return unit(n, field).lmul_gen(i)


def T_ba(n: int, field: ScalarField, b: int, a: int) -> HeckeElement:
    """``T_{b-1} T_{b-2} ... T_a``; the unit when ``a == b``."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"need 1 <= a <= b <= n, got a={a}, b={b}, n={n}")
    h = unit(n, field)
    for i in range(b - 1, a - 1, -1):
        h = h.rmul_gen(i)
    return h


def mult(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """
    Product in ``H_n``. The smaller factor is expanded in the basis and each of
    its ``T_w`` is applied to the other factor one generator at a time, along
    the canonical reduced word of ``w``.
    """
    a._check(b)
    F = a.field
    words = tables(a.n).words
    acc: dict[Perm, object] = {}
    add, mul = F.add, F.mul

    def accumulate(h: HeckeElement, c):
        for w, x in h.coords.items():
            y = mul(c, x)
            acc[w] = add(acc[w], y) if w in acc else y

    if len(b.coords) <= len(a.coords):
        for w, c in b.coords.items():
            h = a
            for i in words[w]:
                h = h.rmul_gen(i)
            accumulate(h, c)
    else:
        for w, c in a.coords.items():
            h = b
            for i in reversed(words[w]):
                h = h.lmul_gen(i)
            accumulate(h, c)
    return HeckeElement(a.n, F, acc)


Character = Literal["trivial", "sign"]


def character(ch: Character, h: HeckeElement):
    """``T_w -> q^l(w)`` (trivial) or ``(-1)^l(w)`` (sign), extended linearly."""
    F = h.field
    lengths = tables(h.n).lengths
    out = F.zero
    for w, c in h.coords.items():
        ell = lengths[w]
        if ch == "trivial":
            out = F.add(out, F.mul(F.q_power(ell), c))
        elif ch == "sign":
            out = F.add(out, c if ell % 2 == 0 else F.neg(c))
        else:
            raise ValueError(f"unknown character {ch!r}")
    return Scalar(F, out)


def verify_tmoves(n: int, field: ScalarField) -> Report:
    """Check the commuting, concatenation, shifting and clash rules for the ``T_ba``."""
    rep = Report(f"tmoves(n={n})")
    T = {(b, a): T_ba(n, field, b, a) for b in range(1, n + 1) for a in range(1, b + 1)}
    q = Scalar(field, field.q)
    qm1 = q - 1
    idx = [(b, a) for (b, a) in T]

    fails: list = []
    count = 0
    for (b, a) in idx:
        for (d, c) in idx:
            if b < c or d < a:
                count += 1
                if T[d, c] * T[b, a] != T[b, a] * T[d, c]:
                    fails.append((a, b, c, d))
    rep.add("commute", "Proposition 6.2(1)", not fails, tuples=count, failures=fails[:5])

    fails, count = [], 0
    for a in range(1, n + 1):
        for c in range(a, n + 1):
            for b in range(a, c + 1):
                count += 1
                if T[c, a] != T[c, b] * T[b, a]:
                    fails.append((a, b, c))
    rep.add("concatenate", "Proposition 6.2(2)", not fails, tuples=count, failures=fails[:5])

    fails, count = [], 0
    for (b, a) in idx:
        for (d, c) in idx:
            if c - 1 >= a and d <= b:
                count += 1
                if T[b, a] * T[d, c] != T[d - 1, c - 1] * T[b, a]:
                    fails.append((a, b, c, d))
    rep.add("shift", "Proposition 6.2(3)", not fails, tuples=count, failures=fails[:5])

    fails, count = [], 0
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            for c in range(b + 1, n + 1):
                for d in range(c, n + 1):
                    count += 1
                    lhs = T[d, b] * T[c, a]
                    rhs = (T[c - 1, b] * T[d, a]).scale(qm1) + (T[c - 1, a] * T[d, b + 1]).scale(q)
                    if lhs != rhs:
                        fails.append((a, b, c, d))
    rep.add("clash", "Proposition 6.2(4)", not fails, tuples=count, failures=fails[:5])
    return rep
