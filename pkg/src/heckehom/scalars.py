"""
Exact coefficient fields carrying a distinguished unit ``q``.

Each field works on *raw* values (``Fraction``, ``int``, ``fmpq_poly``, ...)
through plain methods, which is what the linear algebra and the Hecke algebra
use in their inner loops. :class:`Scalar` wraps a raw value together with its
field for the user-facing API.

>>> F = parse_field("gf:p=5,q=2")
>>> F.element(F.q) ** 4
Scalar(gf:p=5,q=2, 1)
>>> G = parse_field("generic")
>>> x = G.element(G.q)
>>> (x - 1) / (x * x - 1)
Scalar(generic, (1)/(q + 1))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from flint import fmpq, fmpq_poly, fmpz_poly

__all__ = [
    "ScalarField", "RationalQ", "PrimeField", "CyclotomicRoot", "GenericQ",
    "Scalar", "FieldMismatch", "FieldDescriptorError",
    "parse_field", "arith", "q_power",
]


class FieldMismatch(ValueError):
    pass


class FieldDescriptorError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _poly_str(p: fmpq_poly, var: str = "q") -> str:
    """Canonical string of a rational polynomial, highest degree first."""
    coeffs = p.coeffs()
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(int(coeffs[k].p), int(coeffs[k].q))
        if c == 0:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class ScalarField:
    """Base class. Subclasses are frozen dataclasses, compared by value."""

    zero: Any
    one: Any
    q: Any
    q_inv: Any

    # -- raw arithmetic -------------------------------------------------
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def from_int(self, k: int):
        raise NotImplementedError

    def q_power(self, k: int):
        base = self.q if k >= 0 else self.q_inv
        out = self.one
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out

    def to_str(self, a) -> str:
        return str(a)

    def size(self, a) -> int:
        """Representation size, used to rank pivot candidates."""
        return 0

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    @property
    def q_is_one(self) -> bool:
        return self.eq(self.q, self.one)

    def element(self, raw) -> Scalar:
        return Scalar(self, raw)

    def __str__(self):
        return self.descriptor


@dataclass(frozen=True)
class RationalQ(ScalarField):
    """The rationals with ``q`` a fixed nonzero rational."""
    qval: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "qval", Fraction(self.qval))
        if self.qval == 0:
            raise ValueError("q must be a unit")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def q(self):
        return self.qval

    @property
    def q_inv(self):
        return 1 / self.qval

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def from_int(self, k):
        return Fraction(k)

    def q_power(self, k):
        return self.qval ** k

    def size(self, a):
        return a.numerator.bit_length() + a.denominator.bit_length()

    @property
    def descriptor(self):
        return f"rational:q={self.qval}"


@dataclass(frozen=True)
class PrimeField(ScalarField):
    """``GF(p)`` with values stored as least residues."""
    p: int = 2
    qval: int = 1

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "qval", self.qval % self.p)
        if self.qval == 0:
            raise ValueError("q must be a unit mod p")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.p

    @property
    def q(self):
        return self.qval

    @property
    def q_inv(self):
        return pow(self.qval, -1, self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("division by zero")
        return pow(a, -1, self.p)

    def from_int(self, k):
        return k % self.p

    def q_power(self, k):
        return pow(self.qval, k, self.p)

    @property
    def descriptor(self):
        return f"gf:p={self.p},q={self.qval}"


@dataclass(frozen=True)
class CyclotomicRoot(ScalarField):
    """
    ``Q(zeta)`` with ``q = zeta`` a primitive ``l``-th root of unity; values
    are rational polynomials reduced modulo the ``l``-th cyclotomic polynomial.
    """
    l: int = 2  # noqa: E741

    def __post_init__(self):
        if self.l < 2:
            raise ValueError("l must be at least 2")
        object.__setattr__(self, "_phi", fmpq_poly(fmpz_poly.cyclotomic(self.l)))

    @property
    def minpoly(self) -> fmpq_poly:
        return self._phi

    @property
    def degree(self) -> int:
        return self._phi.degree()

    def _red(self, a):
        return a % self._phi

    @property
    def zero(self):
        return fmpq_poly([0])

    @property
    def one(self):
        return fmpq_poly([1])

    @property
    def q(self):
        return self._red(fmpq_poly([0, 1]))

    @property
    def q_inv(self):
        # zeta^(l-1)
        return self._red(fmpq_poly([0] * (self.l - 1) + [1]))

    def mul(self, a, b):
        return (a * b) % self._phi

    def inv(self, a):
        if a.is_zero():
            raise ZeroDivisionError("division by zero")
        g, s, _ = a.xgcd(self._phi)
        # g is a nonzero constant since phi is irreducible
        return self._red(s / g[0])

    def is_zero(self, a):
        return a.is_zero()

    def from_int(self, k):
        return fmpq_poly([k])

    def q_power(self, k):
        k %= self.l
        return self._red(fmpq_poly([0] * k + [1]))

    def to_str(self, a):
        return _poly_str(a)

    def size(self, a):
        return a.degree()

    def coordinates(self, a) -> tuple[Fraction, ...]:
        cs = a.coeffs()
        cs = cs + [fmpq(0)] * (self.degree - len(cs))
        return tuple(Fraction(int(c.p), int(c.q)) for c in cs)

    @property
    def descriptor(self):
        return f"cyclotomic:l={self.l}"


_ONE = fmpq_poly([1])


@dataclass(frozen=True)
class GenericQ(ScalarField):
    """
    The rational function field ``Q(q)``. A value is a pair ``(num, den)`` of
    rational polynomials with ``den`` monic and ``gcd(num, den) = 1``; zero is
    ``(0, 1)``.
    """

    @staticmethod
    def _norm(num, den):
        if num.is_zero():
            return (num, _ONE)
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lead = den[den.degree()]
        if lead != 1:
            num = num / lead
            den = den / lead
        return (num, den)

    @property
    def zero(self):
        return (fmpq_poly([0]), _ONE)

    @property
    def one(self):
        return (fmpq_poly([1]), _ONE)

    @property
    def q(self):
        return (fmpq_poly([0, 1]), _ONE)

    @property
    def q_inv(self):
        return (fmpq_poly([1]), fmpq_poly([0, 1]))

    def add(self, a, b):
        an, ad = a
        bn, bd = b
        if ad == bd:
            if ad.degree() == 0:
                return (an + bn, ad)
            return self._norm(an + bn, ad)
        return self._norm(an * bd + bn * ad, ad * bd)

    def sub(self, a, b):
        return self.add(a, (-b[0], b[1]))

    def neg(self, a):
        return (-a[0], a[1])

    def mul(self, a, b):
        an, ad = a
        bn, bd = b
        if ad.degree() == 0 and bd.degree() == 0:
            return (an * bn, ad)
        return self._norm(an * bn, ad * bd)

    def inv(self, a):
        if a[0].is_zero():
            raise ZeroDivisionError("division by zero")
        return self._norm(a[1], a[0])

    def is_zero(self, a):
        return a[0].is_zero()

    def eq(self, a, b):
        return a[0] == b[0] and a[1] == b[1]

    def from_int(self, k):
        return (fmpq_poly([k]), _ONE)

    def q_power(self, k):
        if k >= 0:
            return (fmpq_poly([0] * k + [1]), _ONE)
        return (fmpq_poly([1]), fmpq_poly([0] * (-k) + [1]))

    def to_str(self, a):
        num, den = a
        if den.degree() == 0:
            return _poly_str(num)
        return f"({_poly_str(num)})/({_poly_str(den)})"

    def size(self, a):
        return a[0].degree() + a[1].degree() + len(a[0].coeffs())

    def specialize(self, a, c) -> Fraction:
        """Evaluate at ``q = c``; raises if the denominator vanishes there."""
        c = fmpq(Fraction(c).numerator, Fraction(c).denominator)
        d = a[1](c)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this q")
        v = a[0](c) / d
        return Fraction(int(v.p), int(v.q))

    @property
    def descriptor(self):
        return "generic"


@dataclass(frozen=True, eq=False)
class Scalar:
    """A field element. Arithmetic across different fields is rejected."""
    field: ScalarField
    value: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else Scalar(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        F = self.field
        base = self.value if k >= 0 else F.inv(self.value)
        out = F.one
        for _ in range(abs(k)):
            out = F.mul(out, base)
        return Scalar(F, out)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.field.eq(self.value, self.field.from_int(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.field.eq(self.value, other.value)

    def __hash__(self):
        return hash((self.field, self.field.to_str(self.value)))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self):
        return self.field.to_str(self.value)

    def __repr__(self):
        return f"Scalar({self.field.descriptor}, {self.field.to_str(self.value)})"


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def q_power(field: ScalarField, k: int) -> Scalar:
    return Scalar(field, field.q_power(k))


_RATIONAL = re.compile(r"rational:q=(-?\d+(?:/\d+)?)")
_GF = re.compile(r"gf:p=(\d+),q=(-?\d+)")
_CYCLO = re.compile(r"cyclotomic:l=(\d+)")


def parse_field(desc: str) -> ScalarField:
    """
    Parse a field descriptor: ``rational:q=3/2``, ``gf:p=2,q=1``,
    ``cyclotomic:l=3`` or ``generic``.
    """
    try:
        if desc == "generic":
            return GenericQ()
        if m := _RATIONAL.fullmatch(desc):
            return RationalQ(Fraction(m.group(1)))
        if m := _GF.fullmatch(desc):
            return PrimeField(int(m.group(1)), int(m.group(2)))
        if m := _CYCLO.fullmatch(desc):
            return CyclotomicRoot(int(m.group(1)))
    except (ValueError, ZeroDivisionError) as exc:
        raise FieldDescriptorError(f"bad field descriptor {desc!r}: {exc}") from None
    raise FieldDescriptorError(f"bad field descriptor {desc!r}")
