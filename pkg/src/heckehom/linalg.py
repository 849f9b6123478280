"""
Exact sparse linear algebra over a :class:`ScalarField`.

Matrices are column-major: ``cols[j]`` maps row index to a nonzero raw value.
Rank, kernels and solving go through :class:`Echelon`, an incremental
row-echelon basis with optional tracking of how each basis vector was formed.
For the concrete fields a flint-backed rank is available as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat, nmod_mat

from .scalars import CyclotomicRoot, GenericQ, PrimeField, RationalQ, ScalarField

Vec = dict  # index -> raw value, no stored zeros


@dataclass
class Mat:
    field: ScalarField
    nrows: int
    ncols: int
    cols: list[Vec] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.cols:
            self.cols = [{} for _ in range(self.ncols)]
        if len(self.cols) != self.ncols:
            raise ValueError("column count mismatch")

    @classmethod
    def zeros(cls, field, nrows, ncols) -> Mat:
        return cls(field, nrows, ncols, [{} for _ in range(ncols)])

    @classmethod
    def identity(cls, field, n) -> Mat:
        return cls(field, n, n, [{j: field.one} for j in range(n)])

    @classmethod
    def from_dense(cls, field, rows: Sequence[Sequence], ncols: int | None = None) -> Mat:
        nr = len(rows)
        nc = ncols if ncols is not None else (len(rows[0]) if nr else 0)
        cols = [{} for _ in range(nc)]
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if not field.is_zero(x):
                    cols[j][i] = x
        return cls(field, nr, nc, cols)

    def to_dense(self) -> list[list]:
        z = self.field.zero
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                out[i][j] = x
        return out

    def entry(self, i, j):
        return self.cols[j].get(i, self.field.zero)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def transpose(self) -> Mat:
        cols = [{} for _ in range(self.nrows)]
        for j, c in enumerate(self.cols):
            for i, x in c.items():
                cols[i][j] = x
        return Mat(self.field, self.ncols, self.nrows, cols)

    def rows(self) -> list[Vec]:
        return self.transpose().cols

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) or self.field != other.field:
            return False
        eq = self.field.eq
        for a, b in zip(self.cols, other.cols):
            if a.keys() != b.keys() or not all(eq(x, b[i]) for i, x in a.items()):
                return False
        return True

    def __add__(self, other: Mat) -> Mat:
        _same_shape(self, other)
        return Mat(self.field, self.nrows, self.ncols,
                   [vec_add(self.field, a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: Mat) -> Mat:
        return self + other.scale(self.field.from_int(-1))

    def scale(self, c) -> Mat:
        return Mat(self.field, self.nrows, self.ncols,
                   [vec_scale(self.field, c, v) for v in self.cols])

    def __matmul__(self, other: Mat) -> Mat:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Mat(self.field, self.nrows, other.ncols,
                   [self.apply(v) for v in other.cols])

    def apply(self, v: Vec) -> Vec:
        """``self @ v`` for a sparse vector ``v``."""
        F = self.field
        add, mul = F.add, F.mul
        out: Vec = {}
        for j, x in v.items():
            for i, y in self.cols[j].items():
                z = mul(x, y)
                out[i] = add(out[i], z) if i in out else z
        isz = F.is_zero
        return {i: z for i, z in out.items() if not isz(z)}

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def submatrix(self, rows: Sequence[int] | None, cols: Sequence[int] | None) -> Mat:
        cols = range(self.ncols) if cols is None else cols
        if rows is None:
            return Mat(self.field, self.nrows, len(cols), [dict(self.cols[j]) for j in cols])
        pos = {r: k for k, r in enumerate(rows)}
        return Mat(self.field, len(rows), len(cols),
                   [{pos[i]: x for i, x in self.cols[j].items() if i in pos} for j in cols])

    def map_entries(self, f, field: ScalarField | None = None) -> Mat:
        F = field or self.field
        isz = F.is_zero
        cols = []
        for c in self.cols:
            d = {}
            for i, x in c.items():
                y = f(x)
                if not isz(y):
                    d[i] = y
            cols.append(d)
        return Mat(F, self.nrows, self.ncols, cols)


def _same_shape(a: Mat, b: Mat):
    if a.shape != b.shape or a.field != b.field:
        raise ValueError("shape or field mismatch")


def hstack(field, nrows, blocks: Iterable[Mat]) -> Mat:
    cols = []
    for b in blocks:
        if b.nrows != nrows:
            raise ValueError("row mismatch")
        cols.extend(dict(c) for c in b.cols)
    return Mat(field, nrows, len(cols), cols)


def block(field, rows: Sequence[int], cols: Sequence[int], blocks: dict) -> Mat:
    """Assemble ``blocks[(bi, bj)]`` into a matrix with block sizes ``rows`` x ``cols``."""
    roff = [sum(rows[:k]) for k in range(len(rows))]
    coff = [sum(cols[:k]) for k in range(len(cols))]
    out = Mat.zeros(field, sum(rows), sum(cols))
    for (bi, bj), M in blocks.items():
        if M.shape != (rows[bi], cols[bj]):
            raise ValueError(f"block {(bi, bj)} has shape {M.shape}")
        for j, c in enumerate(M.cols):
            tgt = out.cols[coff[bj] + j]
            for i, x in c.items():
                tgt[roff[bi] + i] = x
    return out


def vec_add(F: ScalarField, a: Vec, b: Vec) -> Vec:
    out = dict(a)
    add, isz = F.add, F.is_zero
    for i, x in b.items():
        if i in out:
            y = add(out[i], x)
            if isz(y):
                del out[i]
            else:
                out[i] = y
        else:
            out[i] = x
    return out


def vec_scale(F: ScalarField, c, v: Vec) -> Vec:
    if F.is_zero(c):
        return {}
    mul = F.mul
    return {i: mul(c, x) for i, x in v.items()}


def _axpy(F: ScalarField, v: Vec, c, w: Vec) -> None:
    """In place ``v += c*w``."""
    add, mul, isz = F.add, F.mul, F.is_zero
    for i, x in w.items():
        y = mul(c, x)
        if i in v:
            y = add(v[i], y)
            if isz(y):
                del v[i]
            else:
                v[i] = y
        else:
            v[i] = y


class Echelon:
    """
    Incremental echelon basis. Each stored vector has a pivot entry equal to 1
    and vanishes at the pivots of all earlier vectors. With ``track=True`` each
    stored vector remembers its expression in the inserted vectors, which gives
    kernels and particular solutions.
    """

    def __init__(self, field: ScalarField, track: bool = False):
        self.field = field
        self.track = track
        self.vecs: list[Vec] = []
        self.pivots: list[int] = []
        self.combos: list[Vec] = []
        self.inserted = 0
        self.relations: list[Vec] = []  # combinations of inserted vectors equal to zero
        self._by_size = isinstance(field, GenericQ)

    def __len__(self):
        return len(self.vecs)

    @property
    def rank(self) -> int:
        return len(self.vecs)

    def reduce(self, v: Vec, combo: Vec | None = None) -> Vec:
        """Reduce ``v`` against the basis in place; ``combo`` records subtractions."""
        F = self.field
        neg = F.neg
        for k, p in enumerate(self.pivots):
            c = v.get(p)
            if c is None:
                continue
            c = neg(c)
            _axpy(F, v, c, self.vecs[k])
            if combo is not None:
                _axpy(F, combo, c, self.combos[k])
        return v

    def contains(self, v: Vec) -> bool:
        return not self.reduce(dict(v))

    def _choose_pivot(self, v: Vec) -> int:
        if self._by_size:
            size = self.field.size
            return min(v, key=lambda i: (size(v[i]), i))
        return min(v)

    def add(self, v: Vec) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        F = self.field
        idx = self.inserted
        self.inserted += 1
        combo = {idx: F.one} if self.track else None
        w = self.reduce(dict(v), combo)
        if not w:
            if self.track:
                self.relations.append(combo)
            return False
        p = self._choose_pivot(w)
        inv = F.inv(w[p])
        w = vec_scale(F, inv, w)
        self.vecs.append(w)
        self.pivots.append(p)
        if self.track:
            self.combos.append(vec_scale(F, inv, combo))
        return True

    def express(self, v: Vec) -> Vec | None:
        """Coefficients on inserted vectors summing to ``v``, or None if ``v`` is outside the span."""
        if not self.track:
            raise ValueError("express needs track=True")
        F = self.field
        combo: Vec = {}
        w = dict(v)
        for k, p in enumerate(self.pivots):
            c = w.get(p)
            if c is None:
                continue
            _axpy(F, w, F.neg(c), self.vecs[k])
            _axpy(F, combo, c, self.combos[k])
        return None if w else combo


# -- rank ------------------------------------------------------------------

def rank_echelon(M: Mat, by: str = "cols") -> int:
    """Rank by inserting columns (``by="cols"``) or rows (``by="rows"``)."""
    vecs = M.cols if by == "cols" else M.rows()
    E = Echelon(M.field)
    for v in vecs:
        if v:
            E.add(v)
    return E.rank


def _cyclotomic_block(F: CyclotomicRoot, a) -> list[list[Fraction]]:
    d = F.degree
    cols = []
    z = F.one
    for _ in range(d):
        cols.append(F.coordinates(F.mul(a, z)))
        z = F.mul(z, F.q)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _to_flint(M: Mat):
    F = M.field
    if isinstance(F, PrimeField):
        ent = [0] * (M.nrows * M.ncols)
        for j, c in enumerate(M.cols):
            for i, x in c.items():
                ent[i * M.ncols + j] = x
        return nmod_mat(M.nrows, M.ncols, ent, F.p), 1
    if isinstance(F, RationalQ):
        ent = [fmpq(0)] * (M.nrows * M.ncols)
        for j, c in enumerate(M.cols):
            for i, x in c.items():
                ent[i * M.ncols + j] = fmpq(x.numerator, x.denominator)
        return fmpq_mat(M.nrows, M.ncols, ent), 1
    if isinstance(F, CyclotomicRoot):
        # regular representation: Q(zeta)-rank r becomes Q-rank r*deg
        d = F.degree
        R, C = M.nrows * d, M.ncols * d
        ent = [fmpq(0)] * (R * C)
        cache: dict = {}
        for j, c in enumerate(M.cols):
            for i, x in c.items():
                key = str(x)
                blk = cache.get(key)
                if blk is None:
                    blk = cache[key] = _cyclotomic_block(F, x)
                for a in range(d):
                    row = (i * d + a) * C + j * d
                    for b in range(d):
                        y = blk[a][b]
                        if y:
                            ent[row + b] = fmpq(y.numerator, y.denominator)
        return fmpq_mat(R, C, ent), d
    return None, 0


def rank_flint(M: Mat) -> int | None:
    """Rank through flint, or None for fields without a flint backend."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    A, d = _to_flint(M)
    if A is None:
        return None
    r = A.rank()
    if r % d:
        raise ArithmeticError("regular representation rank not divisible by degree")
    return r // d


def rank(M: Mat, method: str = "auto") -> int:
    """
    Exact rank. ``"cols"``/``"rows"`` run the pure elimination in that order
    (``"auto"`` is ``"cols"``); ``"flint"`` goes through flint matrices and is
    kept as an independent cross-check for the concrete fields.
    """
    if M.nrows == 0 or M.ncols == 0 or M.is_zero():
        return 0
    if method == "auto":
        method = "cols"
    if method in ("cols", "rows"):
        return rank_echelon(M, method)
    if method == "flint":
        r = rank_flint(M)
        if r is None:
            raise ValueError(f"no flint backend for {M.field}")
        return r
    raise ValueError(f"unknown rank method {method!r}")


def nullspace(M: Mat) -> list[Vec]:
    """A basis of ``{v : M v = 0}`` as sparse vectors over the column indices."""
    E = Echelon(M.field, track=True)
    for v in M.cols:
        E.add(v)
    return E.relations


def solve(M: Mat, b: Vec) -> Vec | None:
    """Some ``x`` with ``M x = b``, or None."""
    E = Echelon(M.field, track=True)
    for v in M.cols:
        E.add(v)
    return E.express(b)

