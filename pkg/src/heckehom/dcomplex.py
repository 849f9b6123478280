"""
The complex ``D(n)``: degree ``r`` holds ``M(n, n-r-1)`` for ``-1 <= r <= n-1``
and the boundary is ``sum_j (-1)^j q^(-j) d_j`` with face maps

    d_j(T_x (x) 1) = T_x T_{n-r+j, n-r} (x) 1.

``build_induced_D(N, m)`` is the same recipe with ``M(N, m-r-1)`` in degree
``r`` (``-1 <= r <= m-1``); it models ``H_N`` induced up from ``D(m)`` and is the
source of the quotient maps below. ``build_D(n) = build_induced_D(n, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .complexes import ChainMap, FreeChainComplex, cone, homology_dims, suspend, verify_chain_map, euler_characteristic
from .coxeter import Perm, coset_reps, embed
from .hecke import HeckeElement, T_ba, mult, t_basis
from .induced import InducedModule
from .linalg import Echelon, Mat, Vec, rank, vec_add, vec_scale
from .reports import Report
from flint import fmpq_poly

from .scalars import GenericQ, ScalarField

_Q = fmpq_poly([0, 1])

__all__ = [
    "DComplex", "FiltrationLayer", "build_D", "build_induced_D", "face_matrix",
    "semisimplicial_check", "four_cases_check", "filtration", "filtration_check",
    "phi_check", "psi_check", "f0_betti_check", "acyclicity_check", "is_signed_monomial",
    "boundary_monomial_failures", "boundary_entries_check",
]


@dataclass
class DComplex:
    N: int
    m: int
    field: ScalarField
    complex: FreeChainComplex

    @property
    def n(self) -> int:
        return self.N

    def module(self, r: int) -> InducedModule:
        return InducedModule(self.N, self.m - r - 1, self.field)


def _times_Tba(x: Perm, b: int, a: int, F: ScalarField) -> HeckeElement:
    h = t_basis(len(x), F, x)
    for i in range(b - 1, a - 1, -1):
        h = h.rmul_gen(i)
    return h


@lru_cache(maxsize=None)
def face_matrix(N: int, m: int, field: ScalarField, r: int, j: int) -> Mat:
    """Matrix of ``d_j`` from degree ``r`` to degree ``r-1`` of the induced complex."""
    if not 0 <= j <= r <= m - 1:
        raise ValueError(f"need 0 <= j <= r <= m-1, got j={j}, r={r}, m={m}")
    src = InducedModule(N, m - r - 1, field)
    tgt = InducedModule(N, m - r, field)
    b, a = m - r + j, m - r
    cols = [tgt.reduce_element(_times_Tba(x, b, a, field)) for x in src.basis]
    return Mat(field, tgt.dim, src.dim, cols)


@lru_cache(maxsize=None)
def _boundary(N: int, m: int, field: ScalarField, r: int) -> Mat:
    F = field
    total = None
    for j in range(r + 1):
        c = F.q_power(-j)
        if j % 2:
            c = F.neg(c)
        term = face_matrix(N, m, F, r, j).scale(c)
        total = term if total is None else total + term
    return total


def build_induced_D(N: int, m: int, field: ScalarField) -> DComplex:
    if not 0 <= m <= N:
        raise ValueError(f"need 0 <= m <= N, got m={m}, N={N}")
    dims = {r: InducedModule(N, m - r - 1, field).dim for r in range(-1, m)}
    bds = {r: _boundary(N, m, field, r) for r in range(0, m)}
    return DComplex(N, m, field, FreeChainComplex(field, dims, bds))


def build_D(n: int, field: ScalarField) -> DComplex:
    return build_induced_D(n, n, field)


def is_signed_monomial(F: ScalarField, x) -> bool:
    """True for ``+-q^k``; only decidable over the rational function field."""
    if not isinstance(F, GenericQ):
        raise ValueError("monomial test needs GenericQ")
    num, den = x
    nc = [c for c in num.coeffs() if c != 0]
    dc = [c for c in den.coeffs() if c != 0]
    return len(nc) == 1 and abs(nc[0]) == 1 and len(dc) == 1


def boundary_monomial_failures(D: DComplex) -> list[tuple[int, int, int]]:
    out = []
    for r, M in D.complex.boundaries.items():
        for j, c in enumerate(M.cols):
            for i, x in c.items():
                if not is_signed_monomial(D.field, x):
                    out.append((r, i, j))
    return out


def boundary_entries_check(n: int, field: ScalarField | None = None) -> Report:
    """
    Over ``Q(q)`` every boundary entry is a Laurent polynomial in ``q``. Whether
    every entry is a single signed power of ``q`` is checked separately.
    """
    F = field or GenericQ()
    D = build_D(n, F)
    rep = Report(f"boundary-entries(n={n})")
    laurent, mono = [], []
    total = 0
    for r, M in D.complex.boundaries.items():
        for j, c in enumerate(M.cols):
            for i, x in sorted(c.items()):
                total += 1
                num, den = x
                if den != den.coeffs()[-1] * _Q ** den.degree():
                    laurent.append((r, i, j))
                if not is_signed_monomial(F, x):
                    mono.append({"degree": r, "row": i, "col": j, "entry": F.to_str(x)})
    rep.add("laurent-entries", "Section 6 boundary", not laurent, entries=total,
            failures=laurent[:5])
    rep.add("signed-monomial-entries", "Section 6 boundary", not mono, entries=total,
            non_monomial=len(mono), counterexample=mono[:1])
    return rep


# -- face-map identities ------------------------------------------------------

def semisimplicial_check(n: int, field: ScalarField) -> Report:
    rep = Report(f"semisimplicial(n={n})")
    F = field
    q = F.q
    bad, bad_rescaled, count = [], [], 0
    for r in range(1, n):
        for j in range(1, r + 1):
            for i in range(j):
                count += 1
                lhs = face_matrix(n, n, F, r - 1, i) @ face_matrix(n, n, F, r, j)
                rhs = face_matrix(n, n, F, r - 1, j - 1) @ face_matrix(n, n, F, r, i)
                if lhs != rhs.scale(q):
                    bad.append((i, j, r))
                # strict identity for the rescaled faces q^(-j) d_j
                lhs2 = lhs.scale(F.q_power(-i - j))
                rhs2 = rhs.scale(F.q_power(-(j - 1) - i))
                if lhs2 != rhs2:
                    bad_rescaled.append((i, j, r))
    rep.add("faces", "Lemma 6.3", not bad, triples=count, failures=bad[:5])
    rep.add("rescaled-faces", "Lemma 6.3", not bad_rescaled, triples=count,
            failures=bad_rescaled[:5])
    return rep


def _tensor(M: InducedModule, *factors: tuple[int, int]) -> Vec:
    """Coordinates of ``T_{b1 a1} T_{b2 a2} ... (x) 1`` in ``M``."""
    h = None
    for b, a in factors:
        t = T_ba(M.n, M.field, b, a)
        h = t if h is None else mult(h, t)
    return M.reduce_element(h)


def four_cases_check(n: int, field: ScalarField | None = None) -> Report:
    """Closed forms for ``d_j(T_{n,n-t} (x) 1)`` in every degree."""
    F = field or GenericQ()
    rep = Report(f"four-cases(n={n})")
    q = F.q
    qm1 = F.sub(q, F.one)
    tallies = {"A": 0, "A-refined": 0, "B": 0, "C": 0, "D": 0}
    fails: dict[str, list] = {k: [] for k in tallies}
    for r in range(0, n):
        tgt = InducedModule(n, n - r, F)
        for j in range(r + 1):
            # T_{n,n-t} needs n-t >= 1, so t = r+1 drops out in the top degree
            for t in range(min(r + 1, n - 1) + 1):
                # left side by direct Hecke arithmetic
                h = mult(T_ba(n, F, n, n - t), T_ba(n, F, n - r + j, n - r))
                lhs = tgt.reduce_element(h)
                if j <= r - t - 1:
                    case = "A"
                    rhs = _tensor(tgt, (n - r + j, n - r), (n, n - t))
                    if t >= 1:
                        tallies["A-refined"] += 1
                        ref = vec_scale(F, q, _tensor(tgt, (n - r + j, n - r), (n, n - t + 1)))
                        if not _veq(F, lhs, ref):
                            fails["A-refined"].append((r, j, t))
                elif j == r - t:
                    case = "B"
                    rhs = _tensor(tgt, (n, n - r))
                elif t == r + 1:
                    case = "D"
                    rhs = vec_scale(F, q, _tensor(tgt, (n - r + j - 1, n - r - 1), (n, n - r)))
                else:
                    case = "C"
                    rhs = vec_add(
                        F,
                        vec_scale(F, qm1, _tensor(tgt, (n - r + j - 1, n - t), (n, n - r))),
                        vec_scale(F, q, _tensor(tgt, (n - r + j - 1, n - r), (n, n - t + 1))),
                    )
                tallies[case] += 1
                if not _veq(F, lhs, rhs):
                    fails[case].append((r, j, t))
    labels = {"A": "j <= r-t-1", "A-refined": "j <= r-t-1, t >= 1", "B": "j = r-t",
              "C": "j >= r-t+1, r >= t", "D": "t = r+1"}
    for k in tallies:
        rep.add(f"case-{k}", "Lemma 6.4", not fails[k], condition=labels[k],
                instances=tallies[k], failures=fails[k][:5])
    return rep


def _veq(F, a: Vec, b: Vec) -> bool:
    return a.keys() == b.keys() and all(F.eq(x, b[k]) for k, x in a.items())


# -- filtration ---------------------------------------------------------------

def _sub_reps(n: int, k: int) -> list[Perm]:
    """``(X^{S_{n-1}}_{S_k})^{-1}`` embedded in ``S_n``."""
    return [embed(x, n) for x in coset_reps(n - 1, max(k, 0), "left")]


@dataclass
class FiltrationLayer:
    """
    Degreewise basis of ``F_p``. Labels are ``(x, t)``: the vector
    ``T_x T_{n,n-t} (x) 1``. The ``t = r+1`` vectors come first, then ``t``
    ascending, so ``F_{p-1}`` is a prefix of ``F_p`` in every degree.
    """
    n: int
    p: int
    field: ScalarField
    labels: dict[int, list[tuple[Perm, int]]] = dc_field(default_factory=dict)
    vectors: dict[int, list[Vec]] = dc_field(default_factory=dict)

    def size(self, r: int) -> int:
        return len(self.labels.get(r, []))


@lru_cache(maxsize=None)
def _filtration_labels(n: int, p: int, r: int) -> tuple[tuple[Perm, int], ...]:
    out: list[tuple[Perm, int]] = []
    if r <= n - 2:
        out += [(x, r + 1) for x in _sub_reps(n, n - r - 2)]
    for t in range(0, min(r, p) + 1):
        out += [(x, t) for x in _sub_reps(n, n - r - 1)]
    return tuple(out)


def _label_vector(n: int, F: ScalarField, r: int, x: Perm, t: int) -> Vec:
    M = InducedModule(n, n - r - 1, F)
    return M.reduce_element(_times_Tba(x, n, n - t, F))


def filtration(n: int, field: ScalarField) -> list[FiltrationLayer]:
    if n < 1:
        raise ValueError("filtration needs n >= 1")
    layers = []
    for p in range(n):
        L = FiltrationLayer(n, p, field)
        for r in range(-1, n):
            labs = list(_filtration_labels(n, p, r))
            L.labels[r] = labs
            L.vectors[r] = [_label_vector(n, field, r, x, t) for x, t in labs]
        layers.append(L)
    return layers


def _generated_submodule(n: int, F: ScalarField, r: int, p: int) -> Echelon:
    """``H_{n-1}``-span of the defining generators of ``F_p`` in degree ``r``."""
    M = InducedModule(n, n - r - 1, F)
    gens = []
    if r <= n - 2:
        gens.append(_tensor(M, (n, n - r - 1)))
    if r >= 0:
        gens += [_tensor(M, (n, n - t)) for t in range(0, min(r, p) + 1)]
    acts = [M.action_matrix(i) for i in range(1, n - 1)]
    E = Echelon(F)
    queue = []
    for g in gens:
        if E.add(g):
            queue.append(g)
    while queue:
        v = queue.pop()
        for A in acts:
            w = A.apply(v)
            if w and E.add(w):
                queue.append(w)
    return E


def filtration_check(n: int, field: ScalarField, layers: list[FiltrationLayer] | None = None) -> Report:
    F = field
    rep = Report(f"filtration(n={n})")
    layers = layers or filtration(n, F)
    D = build_D(n, F)
    C = D.complex
    indep, span, nest, closed = [], [], [], []
    sizes = {}
    for L in layers:
        p = L.p
        for r in range(-1, n):
            vecs = L.vectors[r]
            E = Echelon(F)
            for v in vecs:
                E.add(v)
            if E.rank != len(vecs):
                indep.append((p, r))
            G = _generated_submodule(n, F, r, p)
            if G.rank != E.rank or not all(E.contains(v) for v in G.vecs):
                span.append((p, r))
            if p > 0:
                prev = layers[p - 1]
                if L.labels[r][:prev.size(r)] != prev.labels[r]:
                    nest.append((p, r))
            sizes[f"p={p},r={r}"] = len(vecs)
            # boundary closure: d(F_p)_r lands in (F_p)_{r-1}
            if r >= 0:
                Elow = Echelon(F)
                for v in L.vectors[r - 1]:
                    Elow.add(v)
                B = C.boundary(r)
                for v in vecs:
                    if not Elow.contains(B.apply(v)):
                        closed.append((p, r))
                        break
    top = layers[-1]
    exhaust = [r for r in range(-1, n)
               if top.size(r) != C.dim(r) or (n - 1, r) in indep]
    rep.add("independent", "Lemma 8.6", not indep, failures=indep)
    rep.add("spans-generated-module", "Definition 7.1", not span, failures=span)
    rep.add("nested", "Definition 7.1", not nest, failures=nest)
    rep.add("exhaustive", "Lemma 7.2", not exhaust, failures=exhaust,
            dims=[C.dim(r) for r in range(-1, n)])
    rep.add("subcomplex", "Section 7 subcomplex property", not closed, failures=closed)
    rep.checks[0].payload["sizes"] = sizes
    return rep


def _layer_coordinates(layer: FiltrationLayer, r: int) -> Echelon:
    E = Echelon(layer.field, track=True)
    for v in layer.vectors[r]:
        E.add(v)
    return E


def _restricted_complex(layer: FiltrationLayer, C: FreeChainComplex, start: dict[int, int]) -> FreeChainComplex:
    """
    Boundary of ``F_p`` in its own basis, keeping only coordinates with index
    at least ``start[r]``; with ``start`` the sizes of ``F_{p-1}`` this is the
    quotient ``F_p / F_{p-1}``.
    """
    F = layer.field
    n = layer.n
    dims = {r: layer.size(r) - start.get(r, 0) for r in range(-1, n)}
    bds = {}
    coords = {r: _layer_coordinates(layer, r) for r in range(-1, n)}
    for r in range(0, n):
        lo = start.get(r - 1, 0)
        cols = []
        for k in range(start.get(r, 0), layer.size(r)):
            img = coords[r - 1].express(C.boundary(r).apply(layer.vectors[r][k]))
            if img is None:
                raise ArithmeticError(f"boundary leaves the layer in degree {r}")
            cols.append({i - lo: c for i, c in img.items() if i >= lo})
        bds[r] = Mat(F, dims[r - 1], dims[r], cols)
    return FreeChainComplex(F, dims, bds)


def phi_check(n: int, field: ScalarField, layers: list[FiltrationLayer] | None = None) -> Report:
    """``Cone(D(n-1)) -> F_0``: chain map, square blocks of full rank."""
    F = field
    rep = Report(f"phi(n={n})")
    layers = layers or filtration(n, F)
    F0 = layers[0]
    Dn = build_D(n, F).complex
    src = cone(build_D(n - 1, F).complex)
    q = F.q
    amb_blocks, blocks = {}, {}
    for r in range(-1, n):
        tgt = InducedModule(n, n - r - 1, F)
        cols = []
        if r <= n - 2:
            A = InducedModule(n - 1, n - r - 2, F)
            scale = F.q_power(-r)
            for x in A.basis:
                v = tgt.reduce_element(_times_Tba(embed(x, n), n, n - r - 1, F))
                cols.append(vec_scale(F, scale, v))
        if r >= 0:
            B = InducedModule(n - 1, n - r - 1, F)
            for y in B.basis:
                cols.append(vec_scale(F, q, tgt.reduce_element(t_basis(n, F, embed(y, n)))))
        amb_blocks[r] = Mat(F, tgt.dim, src.dim(r), cols)
        E = _layer_coordinates(F0, r)
        coords = [E.express(c) for c in cols]
        if any(c is None for c in coords):
            blocks[r] = None
        else:
            blocks[r] = Mat(F, F0.size(r), src.dim(r), coords)
    sq = [r for r in range(-1, n) if src.dim(r) != F0.size(r)]
    rep.add("square", "Theorem 5.1", not sq, failures=sq,
            source_dims=[src.dim(r) for r in range(-1, n)],
            target_dims=[F0.size(r) for r in range(-1, n)])
    into = [r for r, b in blocks.items() if b is None]
    rep.add("lands-in-F0", "Theorem 5.1", not into, failures=into)
    f = ChainMap(src, Dn, amb_blocks)
    rep.extend(verify_chain_map(f, prefix="chain-map-", anchor="Theorem 5.1"))
    full = [r for r, b in blocks.items() if b is None or b.nrows != b.ncols or rank(b) != b.nrows]
    rep.add("invertible-blocks", "Theorem 5.1", not full, failures=full)
    return rep


def psi_check(n: int, p: int, field: ScalarField, layers: list[FiltrationLayer] | None = None) -> Report:
    """``Sigma^{p+1}`` of the induced complex ``(N, m) = (n-1, n-p-1)`` onto ``F_p / F_{p-1}``."""
    if not 1 <= p <= n - 1:
        raise ValueError(f"need 1 <= p <= n-1, got p={p}")
    F = field
    rep = Report(f"psi(n={n},p={p})")
    layers = layers or filtration(n, F)
    Lp, Lq = layers[p], layers[p - 1]
    Dn = build_D(n, F).complex
    start = {r: Lq.size(r) for r in range(-1, n)}
    quot = _restricted_complex(Lp, Dn, start)
    src = suspend(build_induced_D(n - 1, n - p - 1, F).complex, p + 1)
    blocks = {}
    bij = []
    for s in range(-1, n):
        newlabs = Lp.labels[s][start[s]:]
        if src.dim(s) != len(newlabs):
            bij.append(s)
            continue
        if not newlabs:
            continue
        A = InducedModule(n - 1, n - s - 1, F)
        # generator image T_x T_{n,n-p} (x) 1 must be exactly the new label (x, p)
        expect = [(embed(x, n), p) for x in A.basis]
        if expect != newlabs:
            bij.append(s)
        E = _layer_coordinates(Lp, s)
        cols = []
        for x in A.basis:
            v = _label_vector(n, F, s, embed(x, n), p)
            c = E.express(v)
            cols.append({i - start[s]: y for i, y in c.items() if i >= start[s]})
        blocks[s] = Mat(F, quot.dim(s), src.dim(s), cols)
    rep.add("basis-bijection", "Lemma 8.6", not bij, failures=bij,
            quotient_dims=[quot.dim(s) for s in range(-1, n)])
    low = [s for s in range(-1, p) if quot.dim(s)]
    rep.add("vanishes-below-p", "Lemma 8.6", not low, failures=low)
    f = ChainMap(src, quot, blocks)
    rep.extend(verify_chain_map(f, prefix="chain-map-", anchor="Theorem 5.1"))
    full = [s for s in range(-1, n) if quot.dim(s) and (
        s not in blocks or rank(blocks[s]) != quot.dim(s))]
    rep.add("invertible-blocks", "Theorem 5.1", not full, failures=full)
    betti = homology_dims(quot)
    below = [(d, b) for d, b in betti if d < n - 2 and b]
    rep.add("quotient-betti", "Theorem 5.2", not below, betti=[b for _, b in betti])
    return rep


def f0_betti_check(n: int, field: ScalarField, layers: list[FiltrationLayer] | None = None) -> Report:
    F = field
    rep = Report(f"f0-betti(n={n})")
    layers = layers or filtration(n, F)
    sub = _restricted_complex(layers[0], build_D(n, F).complex, {})
    betti = homology_dims(sub)
    rep.add("f0-acyclic", "Theorem 5.1", all(b == 0 for _, b in betti),
            betti=[b for _, b in betti])
    return rep


def acyclicity_check(n: int, field: ScalarField, method: str = "auto") -> Report:
    rep = Report(f"acyclicity(n={n})")
    C = build_D(n, field).complex
    betti = homology_dims(C, method)
    low = [(d, b) for d, b in betti if d <= n - 2 and b]
    top = dict(betti).get(n - 1, 0)
    rep.add("betti-vanish", "Theorem 5.2", not low, betti=[b for _, b in betti],
            dims=[C.dim(r) for r in C.degrees()], failures=low)
    chi = euler_characteristic(C)
    alt = sum((-1) ** (d % 2) * b for d, b in betti)
    rep.add("euler", "Theorem 5.2", alt == chi, top_betti=top, euler=chi)
    return rep
