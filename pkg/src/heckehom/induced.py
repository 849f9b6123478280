"""
Induced modules ``M(n, m) = H_n (x)_{H_m} t`` with basis ``T_x (x) 1`` for
``x`` in ``X_{S_m}^{-1}`` (no right descents among ``s_1..s_{m-1}``).

A permutation ``w`` splits as ``w = x*v`` with ``v`` in ``S_m`` sorting the
first ``m`` positions of ``w``; then ``T_w (x) 1 = q^l(v) T_x (x) 1``.

>>> from heckehom.scalars import GenericQ
>>> M = InducedModule(3, 2, GenericQ())
>>> M.basis
((1, 2, 3), (1, 3, 2), (2, 3, 1))
>>> M.reduce_tensor((2, 1, 3))
(0, Scalar(generic, q))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coxeter import Perm, coset_reps
from .hecke import HeckeElement, mult, t_basis, tables
from .linalg import Mat, Vec, vec_add, vec_scale
from .scalars import Scalar, ScalarField

__all__ = ["InducedModule", "ModuleVector", "reduce_tensor", "act", "action_matrix"]


def _split(w: Perm, m: int) -> tuple[Perm, int]:
    """``w = x*v``: returns ``x`` and ``l(v)``."""
    head = w[:m]
    inv = sum(1 for a in range(m) for b in range(a + 1, m) if head[a] > head[b])
    return tuple(sorted(head)) + w[m:], inv


@lru_cache(maxsize=None)
def _module_tables(n: int, m: int):
    basis = tuple(coset_reps(n, m, "left"))
    index = {x: k for k, x in enumerate(basis)}
    split = {}
    for w in tables(n).perms:
        x, ell = _split(w, m)
        split[w] = (index[x], ell)
    return basis, index, split


@dataclass(frozen=True)
class InducedModule:
    n: int
    m: int
    field: ScalarField

    def __post_init__(self):
        if not 0 <= self.m <= self.n:
            raise ValueError(f"need 0 <= m <= n, got m={self.m}, n={self.n}")
        # M(n, 0) and M(n, 1) are both the regular module
        object.__setattr__(self, "m", max(self.m, 1) if self.n else 0)

    @property
    def basis(self) -> tuple[Perm, ...]:
        return _module_tables(self.n, self.m)[0]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, x: Perm) -> int:
        return _module_tables(self.n, self.m)[1][tuple(x)]

    def reduce_tensor(self, w: Perm) -> tuple[int, Scalar]:
        k, ell = _module_tables(self.n, self.m)[2][tuple(w)]
        return k, Scalar(self.field, self.field.q_power(ell))

    def reduce_element(self, h: HeckeElement) -> Vec:
        """Coordinates of ``h (x) 1`` in the basis."""
        F = self.field
        split = _module_tables(self.n, self.m)[2]
        add, mul, isz = F.add, F.mul, F.is_zero
        out: Vec = {}
        for w, c in h.coords.items():
            k, ell = split[w]
            y = mul(c, F.q_power(ell)) if ell else c
            out[k] = add(out[k], y) if k in out else y
        return {k: y for k, y in out.items() if not isz(y)}

    def vector(self, coords: Vec | None = None) -> ModuleVector:
        return ModuleVector(self, dict(coords or {}))

    def basis_vector(self, k: int) -> ModuleVector:
        return ModuleVector(self, {k: self.field.one})

    def action_matrix(self, i: int) -> Mat:
        if not 1 <= i < self.n:
            raise ValueError(f"generator index {i} out of range for n={self.n}")
        one_i = HeckeElement(self.n, self.field, {self.basis[0]: self.field.one}).lmul_gen(i)
        return Mat(self.field, self.dim, self.dim,
                   [act(one_i, self.basis_vector(k)).coords for k in range(self.dim)])


@dataclass
class ModuleVector:
    module: InducedModule
    coords: Vec  # basis index -> raw value

    def dense(self) -> list[Scalar]:
        F = self.module.field
        return [Scalar(F, self.coords.get(k, F.zero)) for k in range(self.module.dim)]

    def __eq__(self, other):
        if not isinstance(other, ModuleVector) or other.module != self.module:
            return NotImplemented
        eq = self.module.field.eq
        return self.coords.keys() == other.coords.keys() and all(
            eq(c, other.coords[k]) for k, c in self.coords.items())

    def __add__(self, other: ModuleVector) -> ModuleVector:
        if other.module != self.module:
            raise ValueError("module mismatch")
        return ModuleVector(self.module, vec_add(self.module.field, self.coords, other.coords))

    def scale(self, c) -> ModuleVector:
        if isinstance(c, Scalar):
            c = c.value
        return ModuleVector(self.module, vec_scale(self.module.field, c, self.coords))


def reduce_tensor(M: InducedModule, w: Perm) -> tuple[int, Scalar]:
    return M.reduce_tensor(w)


def act(h: HeckeElement, v: ModuleVector) -> ModuleVector:
    """``h . v``: multiply in ``H_n`` then reduce each term."""
    M = v.module
    if h.n != M.n or h.field != M.field:
        raise ValueError("rank or field mismatch")
    F = M.field
    total: Vec = {}
    for k, c in v.coords.items():
        prod = mult(h, t_basis(M.n, F, M.basis[k]))
        total = vec_add(F, total, vec_scale(F, c, M.reduce_element(prod)))
    return ModuleVector(M, total)


def action_matrix(M: InducedModule, i: int) -> Mat:
    return M.action_matrix(i)
