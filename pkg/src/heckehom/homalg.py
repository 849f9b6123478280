"""
Free resolutions of the trivial module ``t`` over ``H_n`` and the resulting
Tor and Ext groups, plus the maps induced by ``H_{n-1} -> H_n``.

Everything is reduced to linear algebra over the coefficient field. A free
module ``H_n^b`` is the vector space of dimension ``b * n!`` with coordinate
``i * n! + k`` for the ``k``-th permutation in the ``i``-th summand. A module
map ``H_n^a -> H_n^b`` is stored as the images ``g_1..g_a`` of the free
generators; its underlying linear map has column ``(i, w)`` equal to
``T_w g_i``.

>>> from heckehom.scalars import PrimeField
>>> tor(2, PrimeField(2, 1), 3).dims
[1, 1, 1, 1]
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import factorial

from .hecke import HeckeElement, tables
from .linalg import Echelon, Mat, Vec, rank, vec_add, vec_scale
from .reports import Report
from .scalars import ScalarField

__all__ = [
    "GuardExceeded", "FreeResolution", "TorTable", "ExtTable", "build_resolution",
    "tor", "ext", "stabilization_map", "StabilizationMap", "stability_check",
    "resolution_audit", "MAX_N",
]

MAX_N = 4
MAX_DMAX = 6


class GuardExceeded(RuntimeError):
    pass


def guard(n: int, d_max: int, override: bool = False) -> None:
    if override:
        return
    if n > MAX_N:
        raise GuardExceeded(f"n={n} exceeds the homological guard n <= {MAX_N}")
    if d_max > MAX_DMAX:
        raise GuardExceeded(f"d_max={d_max} exceeds the guard d_max <= {MAX_DMAX}")


# -- flat free modules ---------------------------------------------------------

@lru_cache(maxsize=None)
def _left_table(n: int) -> dict[int, list[tuple[int, bool]]]:
    T = tables(n)
    idx = T.index
    return {i: [(idx[T.lmul[i][w][0]], T.lmul[i][w][1]) for w in T.perms] for i in range(1, n)}


def lmul_flat(F: ScalarField, n: int, i: int, v: Vec) -> Vec:
    """``T_i * v`` for ``v`` in a free module ``H_n^b`` (flat coordinates)."""
    N = factorial(n)
    tab = _left_table(n)[i]
    q = F.q
    qm1 = F.sub(q, F.one)
    add, mul, isz = F.add, F.mul, F.is_zero
    out: Vec = {}
    for key, c in v.items():
        blk, k = divmod(key, N)
        k2, up = tab[k]
        k2 += blk * N
        if up:
            out[k2] = add(out[k2], c) if k2 in out else c
        else:
            a = mul(qm1, c)
            out[key] = add(out[key], a) if key in out else a
            b = mul(q, c)
            out[k2] = add(out[k2], b) if k2 in out else b
    return {k: c for k, c in out.items() if not isz(c)}


def _orbit_columns(F: ScalarField, n: int, g: Vec) -> list[Vec]:
    """``[T_w g for w in canonical order]``, each from a shorter one by one generator."""
    T = tables(n)
    idx = T.index
    out: list[Vec | None] = [None] * len(T.perms)
    out[0] = g
    for k, w in enumerate(T.perms):
        if k == 0:
            continue
        s = T.words[w][0]
        rest = T.lmul[s][w][0]  # s*w is shorter
        out[k] = lmul_flat(F, n, s, out[idx[rest]])
    return out


def module_map_matrix(F: ScalarField, n: int, images: list[Vec], target_rank: int) -> Mat:
    N = factorial(n)
    cols: list[Vec] = []
    for g in images:
        cols.extend(_orbit_columns(F, n, g))
    return Mat(F, target_rank * N, len(images) * N, cols)


def element_to_flat(h: HeckeElement, block: int = 0) -> Vec:
    N = factorial(h.n)
    idx = tables(h.n).index
    return {block * N + idx[w]: c for w, c in h.coords.items()}


def flat_component(F: ScalarField, n: int, v: Vec, block: int) -> HeckeElement:
    N = factorial(n)
    perms = tables(n).perms
    return HeckeElement(n, F, {perms[k - block * N]: c for k, c in v.items()
                               if block * N <= k < (block + 1) * N})


def trivial_on_flat(F: ScalarField, n: int, v: Vec, nblocks: int) -> list:
    """Apply ``T_w -> q^l(w)`` to each summand."""
    N = factorial(n)
    T = tables(n)
    lens = [T.lengths[w] for w in T.perms]
    out = [F.zero] * nblocks
    for key, c in v.items():
        b, k = divmod(key, N)
        out[b] = F.add(out[b], F.mul(c, F.q_power(lens[k])))
    return out


# -- resolutions ---------------------------------------------------------------

@dataclass
class FreeResolution:
    n: int
    field: ScalarField
    d_max: int
    ranks: list[int]
    images: list[list[Vec]]          # images[d] for d >= 1: generator images of d_d
    matrices: list[Mat | None]       # underlying linear maps; entry 0 is the augmentation
    order: str = "support"
    kernel_dims: list[int] = dc_field(default_factory=list)

    def component(self, d: int, i: int, j: int) -> HeckeElement:
        """``h_ij``: the ``j``-th coordinate of the image of generator ``i`` in degree ``d``."""
        return flat_component(self.field, self.n, self.images[d][i], j)

    def collapsed(self, d: int) -> Mat:
        """``t (x)`` of the degree-``d`` map: a ``ranks[d-1] x ranks[d]`` scalar matrix."""
        F = self.field
        cols = []
        for g in self.images[d]:
            vals = trivial_on_flat(F, self.n, g, self.ranks[d - 1])
            cols.append({j: x for j, x in enumerate(vals) if not F.is_zero(x)})
        return Mat(F, self.ranks[d - 1], self.ranks[d], cols)


def _augmentation(F: ScalarField, n: int) -> Mat:
    T = tables(n)
    return Mat(F, 1, len(T.perms), [{0: F.q_power(T.lengths[w])} for w in T.perms])


def _select_generators(F: ScalarField, n: int, kernel: list[Vec], order: str) -> list[Vec]:
    if order == "support":
        cands = sorted(kernel, key=lambda v: (len(v), sorted(v)))
    elif order == "reverse":
        cands = sorted(kernel, key=lambda v: (-max(v), sorted(v, reverse=True)))
    else:
        raise ValueError(f"unknown generator order {order!r}")
    target = len(kernel)
    S = Echelon(F)
    gens: list[Vec] = []
    for c in cands:
        if S.rank == target:
            break
        if S.contains(c):
            continue
        gens.append(c)
        queue = [c]
        S.add(c)
        while queue:
            v = queue.pop()
            for i in range(1, n):
                w = lmul_flat(F, n, i, v)
                if w and S.add(w):
                    queue.append(w)
    return gens


def build_resolution(n: int, field: ScalarField, d_max: int = 3, order: str = "support",
                     guard_override: bool = False) -> FreeResolution:
    """Free resolution through degree ``d_max + 1``, so Tor is exact through ``d_max``."""
    guard(n, d_max, guard_override)
    return _build_resolution(n, field, d_max, order)


@lru_cache(maxsize=32)
def _build_resolution(n: int, F: ScalarField, d_max: int, order: str) -> FreeResolution:
    from .linalg import nullspace

    ranks = [1]
    images: list[list[Vec]] = [[]]
    mats: list[Mat | None] = [_augmentation(F, n)]
    kdims = []
    for d in range(1, d_max + 2):
        prev = mats[d - 1]
        kernel = nullspace(prev) if prev.ncols else []
        kdims.append(len(kernel))
        gens = _select_generators(F, n, kernel, order)
        ranks.append(len(gens))
        images.append(gens)
        mats.append(module_map_matrix(F, n, gens, ranks[d - 1]))
    return FreeResolution(n, F, d_max, ranks, images, mats, order, kdims)


def resolution_audit(R: FreeResolution) -> Report:
    rep = Report(f"resolution(n={R.n})")
    F = R.field
    N = factorial(R.n)
    aug_rank = rank(R.matrices[0])
    rep.add("augmentation-kernel", "Section 9 resolution", R.kernel_dims[0] == N - 1,
            kernel_dim=R.kernel_dims[0], expected=N - 1, augmentation_rank=aug_rank)
    bad_zero, bad_exact = [], []
    for d in range(1, len(R.ranks)):
        M, P = R.matrices[d], R.matrices[d - 1]
        if not (P @ M).is_zero():
            bad_zero.append(d)
        if rank(M) != R.kernel_dims[d - 1]:
            bad_exact.append(d)
    rep.add("composite-zero", "Section 9 resolution", not bad_zero, failures=bad_zero)
    rep.add("exact", "Section 9 resolution", not bad_exact, failures=bad_exact,
            ranks=R.ranks, kernel_dims=R.kernel_dims)
    # collapse is multiplicative across each segment
    bad_f = []
    for d in range(2, len(R.ranks)):
        A = R.collapsed(d - 1)
        B = R.collapsed(d)
        comp = _compose_images(F, R.n, R.images[d - 1], R.images[d], R.ranks[d - 2])
        C = Mat(F, R.ranks[d - 2], R.ranks[d],
                [{j: x for j, x in enumerate(trivial_on_flat(F, R.n, g, R.ranks[d - 2]))
                  if not F.is_zero(x)} for g in comp])
        if C != A @ B:
            bad_f.append(d)
    rep.add("collapse-functorial", "Section 9 resolution", not bad_f, failures=bad_f)
    return rep


def _act_element(F: ScalarField, n: int, h: HeckeElement, v: Vec) -> Vec:
    """``h * v`` for ``v`` in a flat free module."""
    T = tables(n)
    out: Vec = {}
    for w, c in h.coords.items():
        u = v
        for i in reversed(T.words[w]):
            u = lmul_flat(F, n, i, u)
        out = vec_add(F, out, vec_scale(F, c, u))
    return out


def _compose_images(F, n, outer: list[Vec], inner: list[Vec], outer_rank: int) -> list[Vec]:
    """Images of the composite ``outer o inner`` on generators."""
    res = []
    for g in inner:
        y: Vec = {}
        for j in range(len(outer)):
            h = flat_component(F, n, g, j)
            if h.coords:
                y = vec_add(F, y, _act_element(F, n, h, outer[j]))
        res.append(y)
    return res


# -- Tor and Ext ---------------------------------------------------------------

@dataclass
class TorTable:
    n: int
    field: str
    dims: list[int]


@dataclass
class ExtTable:
    n: int
    field: str
    dims: list[int]


def tor(n: int, field: ScalarField, d_max: int = 3, order: str = "support",
        guard_override: bool = False) -> TorTable:
    R = build_resolution(n, field, d_max, order, guard_override)
    mats = [None] + [R.collapsed(d) for d in range(1, d_max + 2)]
    rk = [0] + [rank(M) for M in mats[1:]]
    dims = [R.ranks[d] - rk[d] - rk[d + 1] for d in range(d_max + 1)]
    return TorTable(n, field.descriptor, dims)


def ext(n: int, field: ScalarField, d_max: int = 3, order: str = "support",
        guard_override: bool = False) -> ExtTable:
    R = build_resolution(n, field, d_max, order, guard_override)
    co = [None] + [R.collapsed(d).transpose() for d in range(1, d_max + 2)]
    # co[d]: degree d-1 -> degree d
    rk = [0] + [rank(M) for M in co[1:]]
    dims = [R.ranks[d] - rk[d + 1] - rk[d] for d in range(d_max + 1)]
    return ExtTable(n, field.descriptor, dims)


# -- stabilization -------------------------------------------------------------

@dataclass
class StabilizationMap:
    n: int
    field: ScalarField
    d_max: int
    collapsed: list[Mat]            # per degree d: ranks_P[d] x ranks_Q[d]
    tor_small: list[int]
    tor_big: list[int]
    ext_small: list[int]
    ext_big: list[int]
    tor_image: list[int]            # rank of the induced map on Tor_d
    ext_image: list[int]            # rank of the induced map Ext^d(H_n) -> Ext^d(H_{n-1})
    lifts_agree: list[bool] = dc_field(default_factory=list)

    def tor_iso(self, d: int) -> bool:
        return self.tor_small[d] == self.tor_big[d] == self.tor_image[d]

    def ext_iso(self, d: int) -> bool:
        return self.ext_small[d] == self.ext_big[d] == self.ext_image[d]

    def tor_surjective(self, d: int) -> bool:
        return self.tor_image[d] == self.tor_big[d]


def _lift(P: FreeResolution, Q: FreeResolution, reverse: bool) -> list[list[Vec]]:
    """Generator images ``f_d(e'_i)`` of a chain map ``Q -> P`` over the identity of ``t``."""
    F = P.field
    n = P.n
    lifts: list[list[Vec]] = [[{0: F.one}]]  # f_0(1) = 1
    for d in range(1, Q.d_max + 2):
        E = Echelon(F, track=True)
        cols = P.matrices[d].cols
        order = range(len(cols) - 1, -1, -1) if reverse else range(len(cols))
        for k in order:
            E.add(cols[k])
        pos = list(order)
        out = []
        for gq in Q.images[d]:
            # f_{d-1}(g') = sum_j iota(h'_j) * f_{d-1}(e'_j)
            target: Vec = {}
            for j in range(Q.ranks[d - 1]):
                h = flat_component(F, Q.n, gq, j)
                if h.coords:
                    target = vec_add(F, target, _act_element(F, n, h.embed(n), lifts[d - 1][j]))
            combo = E.express(target)
            if combo is None:
                raise ArithmeticError(f"lift infeasible in degree {d}")
            # column (i, w) of the matrix is d(T_w e_i), so the combination is
            # already the flat coordinate vector of the preimage
            elt = {pos[k]: c for k, c in combo.items()}
            out.append(elt)
        lifts.append(out)
    return lifts


def _collapse_lift(F, n, lift: list[Vec], rank_p: int, rank_q: int) -> Mat:
    cols = []
    for y in lift:
        vals = trivial_on_flat(F, n, y, rank_p)
        cols.append({j: x for j, x in enumerate(vals) if not F.is_zero(x)})
    return Mat(F, rank_p, rank_q, cols)


def _cycles(M: Mat) -> list[Vec]:
    from .linalg import nullspace
    return nullspace(M) if M.ncols else []


def _image_in_homology(F, Fd: Mat, Z: list[Vec], B: Mat) -> int:
    rb = rank(B)
    cols = list(B.cols) + [Fd.apply(z) for z in Z]
    return rank(Mat(F, B.nrows, len(cols), cols)) - rb


def stabilization_map(n: int, field: ScalarField, d_max: int = 3,
                      guard_override: bool = False) -> StabilizationMap:
    guard(n, d_max, guard_override)
    if n < 1:
        raise ValueError("stabilization needs n >= 1")
    F = field
    P = build_resolution(n, F, d_max, guard_override=guard_override)
    Q = build_resolution(n - 1, F, d_max, guard_override=guard_override)
    lifts = [_lift(P, Q, False), _lift(P, Q, True)]
    Fmats = [[_collapse_lift(F, n, L[d], P.ranks[d], Q.ranks[d]) for d in range(d_max + 2)]
             for L in lifts]
    cP = [None] + [P.collapsed(d) for d in range(1, d_max + 2)]
    cQ = [None] + [Q.collapsed(d) for d in range(1, d_max + 2)]

    def zero(rows, cols):
        return Mat.zeros(F, rows, cols)

    tor_small = _tor_dims(Q, cQ, d_max)
    tor_big = _tor_dims(P, cP, d_max)
    ext_small = _ext_dims(Q, cQ, d_max)
    ext_big = _ext_dims(P, cP, d_max)
    tor_img, ext_img, agree = [], [], []
    for d in range(d_max + 1):
        Zq = _cycles(cQ[d]) if d >= 1 else [{i: F.one} for i in range(Q.ranks[0])]
        Bp = cP[d + 1]
        img = [_image_in_homology(F, Fm[d], Zq, Bp) for Fm in Fmats]
        tor_img.append(img[0])
        diff = Fmats[0][d] - Fmats[1][d]
        agree.append(_image_in_homology(F, diff, Zq, Bp) == 0 and img[0] == img[1])
        # cohomology: F^T from Ext(P) to Ext(Q); cocycles of P, coboundaries of Q
        coP = cP[d + 1].transpose() if d + 1 < len(cP) else zero(0, P.ranks[d])
        Zp = _cycles(coP)
        Bq = cQ[d].transpose() if d >= 1 else zero(Q.ranks[0], 0)
        ext_img.append(_image_in_homology(F, Fmats[0][d].transpose(), Zp, Bq))
    return StabilizationMap(n, F, d_max, Fmats[0], tor_small, tor_big, ext_small, ext_big,
                            tor_img, ext_img, agree)


def _tor_dims(R: FreeResolution, c: list, d_max: int) -> list[int]:
    rk = [0] + [rank(M) for M in c[1:]]
    return [R.ranks[d] - rk[d] - rk[d + 1] for d in range(d_max + 1)]


def _ext_dims(R: FreeResolution, c: list, d_max: int) -> list[int]:
    return _tor_dims(R, c, d_max)  # transposes have the same ranks


def stability_check(n: int, field: ScalarField, d_max: int = 3,
                    guard_override: bool = False) -> Report:
    S = stabilization_map(n, field, d_max, guard_override)
    rep = Report(f"stability(n={n})")
    in_range = [d for d in range(d_max + 1) if 2 * d <= n - 1]
    outside = [d for d in range(d_max + 1) if 2 * d > n - 1]
    payload = {"tor_small": S.tor_small, "tor_big": S.tor_big, "tor_image": S.tor_image,
               "ext_big": S.ext_big, "ext_small": S.ext_small, "ext_image": S.ext_image}
    rep.add("tor-iso-in-range", "Theorem 1.1", all(S.tor_iso(d) for d in in_range),
            degrees=in_range, **payload)
    rep.add("ext-iso-in-range", "Theorem 1.1", all(S.ext_iso(d) for d in in_range),
            degrees=in_range)
    rep.add("lifts-agree", "Theorem 1.1", all(S.lifts_agree), per_degree=S.lifts_agree)
    rep.add("degree-zero-identity", "Theorem 1.1",
            S.tor_small[0] == S.tor_big[0] == S.tor_image[0] == 1)
    # reported, not asserted
    rep.add("outside-range", "Theorem 1.1", True,
            tor_iso=[S.tor_iso(d) for d in outside],
            tor_surjective=[S.tor_surjective(d) for d in outside], degrees=outside,
            observed_iso_through=_observed(S))
    return rep


def _observed(S: StabilizationMap) -> int:
    d = -1
    while d + 1 <= S.d_max and S.tor_iso(d + 1):
        d += 1
    return d
