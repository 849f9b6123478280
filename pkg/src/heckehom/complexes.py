"""
Finite chain complexes of finite-dimensional vector spaces.

``boundary(r)`` maps degree ``r`` to degree ``r - 1``. Degrees may start at -1.

>>> from heckehom.scalars import RationalQ
>>> from fractions import Fraction
>>> F = RationalQ(Fraction(1))
>>> C = FreeChainComplex(F, {0: 1, 1: 1}, {1: Mat.identity(F, 1)})
>>> homology_dims(C)
[(0, 0), (1, 0)]
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .linalg import Mat, block, rank
from .reports import Report
from .scalars import ScalarField

__all__ = [
    "FreeChainComplex", "ChainMap", "homology_dims", "euler_characteristic",
    "cone", "suspend", "verify_chain_map", "is_iso",
]


class ComplexError(ValueError):
    pass


@dataclass
class FreeChainComplex:
    field: ScalarField
    dims: dict[int, int]
    boundaries: dict[int, Mat] = dc_field(default_factory=dict)
    check_dd: bool = True

    def __post_init__(self):
        self.dims = {r: d for r, d in sorted(self.dims.items())}
        for r, M in self.boundaries.items():
            if M.shape != (self.dim(r - 1), self.dim(r)):
                raise ComplexError(f"boundary {r} has shape {M.shape}, "
                                   f"expected {(self.dim(r - 1), self.dim(r))}")
        if self.check_dd:
            bad = self.dd_failures()
            if bad:
                raise ComplexError(f"boundary squares to nonzero in degrees {bad}")

    @property
    def lo(self) -> int:
        return min(self.dims) if self.dims else 0

    @property
    def hi(self) -> int:
        return max(self.dims) if self.dims else -1

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def dim(self, r: int) -> int:
        return self.dims.get(r, 0)

    def boundary(self, r: int) -> Mat:
        M = self.boundaries.get(r)
        if M is None:
            return Mat.zeros(self.field, self.dim(r - 1), self.dim(r))
        return M

    def dd_failures(self) -> list[int]:
        return [r for r in self.degrees()
                if r - 1 in self.boundaries and r in self.boundaries
                and not (self.boundary(r - 1) @ self.boundary(r)).is_zero()]


def homology_dims(C: FreeChainComplex, method: str = "auto") -> list[tuple[int, int]]:
    ranks = {r: rank(C.boundary(r), method) for r in range(C.lo, C.hi + 2)}
    return [(r, C.dim(r) - ranks[r] - ranks[r + 1]) for r in C.degrees()]


def euler_characteristic(C: FreeChainComplex) -> int:
    return sum((-1) ** (r % 2) * d for r, d in C.dims.items())


def cone(C: FreeChainComplex) -> FreeChainComplex:
    """``(CX)_r = X_r + X_{r-1}`` with ``d(x, y) = (dx + (-1)^r y, dy)``."""
    F = C.field
    if not C.dims:
        return FreeChainComplex(F, {})
    degs = range(C.lo, C.hi + 2)
    dims = {r: C.dim(r) + C.dim(r - 1) for r in degs}
    bds = {}
    for r in degs:
        if r - 1 < C.lo:
            continue
        sign = F.one if r % 2 == 0 else F.neg(F.one)
        blocks = {(0, 0): C.boundary(r),
                  (0, 1): Mat.identity(F, C.dim(r - 1)).scale(sign),
                  (1, 1): C.boundary(r - 1)}
        bds[r] = block(F, [C.dim(r - 1), C.dim(r - 2)], [C.dim(r), C.dim(r - 1)], blocks)
    return FreeChainComplex(F, dims, bds)


def suspend(C: FreeChainComplex, k: int) -> FreeChainComplex:
    if k < 1:
        raise ValueError("suspension degree must be at least 1")
    return FreeChainComplex(C.field, {r + k: d for r, d in C.dims.items()},
                            {r + k: M for r, M in C.boundaries.items()}, check_dd=False)


@dataclass
class ChainMap:
    source: FreeChainComplex
    target: FreeChainComplex
    blocks: dict[int, Mat]

    def block(self, r: int) -> Mat:
        M = self.blocks.get(r)
        if M is None:
            return Mat.zeros(self.source.field, self.target.dim(r), self.source.dim(r))
        return M


def _degrees(f: ChainMap) -> range:
    lo = min(f.source.lo, f.target.lo)
    hi = max(f.source.hi, f.target.hi)
    return range(lo, hi + 1)


def verify_chain_map(f: ChainMap, prefix: str = "", anchor: str = "") -> Report:
    rep = Report("chain-map")
    bad, shapes = [], []
    for r in _degrees(f):
        B = f.block(r)
        if B.shape != (f.target.dim(r), f.source.dim(r)):
            shapes.append(r)
            continue
        lhs = f.target.boundary(r) @ B
        rhs = f.block(r - 1) @ f.source.boundary(r)
        if lhs != rhs:
            bad.append(r)
    rep.add(prefix + "shapes", anchor, not shapes, bad_degrees=shapes)
    rep.add(prefix + "commutes", anchor, not bad, bad_degrees=bad)
    return rep


def is_iso(f: ChainMap, method: str = "auto") -> bool:
    for r in _degrees(f):
        B = f.block(r)
        if B.nrows != B.ncols or B.shape != (f.target.dim(r), f.source.dim(r)):
            return False
        if rank(B, method) != B.nrows:
            return False
    return True
