"""
Named verification suites. Each returns a :class:`Report` whose check records
are in a fixed order with JSON-ready payloads, so reruns are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .coxeter import (
    CoxWord, all_perms, compose, coset_reps, double_coset_reps, embed, evaluate,
    length, longest, mackey_check, matsumoto_orbit, parabolic, reduced_word, s_ba,
    tits_reduce, word_problem, parabolic_factorize,
)
from .hecke import HeckeElement, T_ba, character, generator, t_basis, unit, verify_tmoves
from .induced import InducedModule
from .linalg import Mat
from .reports import Report
from .scalars import GenericQ, RationalQ, ScalarField

__all__ = ["SuiteConfig", "coxeter_suite", "hecke_suite", "dcomplex_suite",
           "injective_words_suite", "tor_suite", "ext_suite", "stability_suite", "SUITES"]


@dataclass(frozen=True)
class SuiteConfig:
    n: int
    field: ScalarField
    d_max: int = 3
    seed: int = 0
    samples: int = 1000
    guard_override: bool = False


def _plist(w) -> list[int]:
    return list(w)


# -- Coxeter -------------------------------------------------------------------

def _noisy_word(w, rng: random.Random) -> tuple[int, ...]:
    """A non-reduced word for ``w``: the canonical word with a cancelling pair inserted."""
    word = list(reduced_word(w))
    n = len(w)
    if n < 2:
        return tuple(word)
    i = rng.randrange(1, n)
    p = rng.randrange(len(word) + 1)
    return tuple(word[:p] + [i, i] + word[p:])


def coxeter_suite(cfg: SuiteConfig) -> Report:
    n = cfg.n
    rng = random.Random(cfg.seed)
    rep = Report(f"coxeter(n={n})")

    bad = []
    for w in all_perms(n):
        word = _noisy_word(w, rng)
        ok_in, nf = word_problem(CoxWord(n, word))
        if evaluate(nf) != w or len(nf) != length(w) or len(reduced_word(w)) != length(w):
            bad.append(_plist(w))
        ok_again, nf2 = word_problem(nf)
        if not ok_again or nf2 != nf:
            bad.append(_plist(w))
    rep.add("word-problem-normal-forms", "Theorem 2.3", not bad, elements=len(all_perms(n)),
            failures=bad[:5])

    # literal M-move search on short random words
    bad, tried = [], 0
    if n >= 2:
        for _ in range(min(cfg.samples, 200)):
            k = rng.randrange(0, 8)
            word = tuple(rng.randrange(1, n) for _ in range(k))
            tried += 1
            lit = tits_reduce(CoxWord(n, word))
            _, nf = word_problem(CoxWord(n, word))
            if evaluate(lit) != evaluate(nf) or len(lit) != len(nf):
                bad.append(list(word))
    rep.add("m-move-oracle", "Theorem 2.3", not bad, words=tried, failures=bad[:5])

    if n <= 5:
        w0 = longest(n)
        orbit = matsumoto_orbit(w0)
        bad = [list(x.letters) for x in orbit if evaluate(x) != w0][:5]
        rep.add("matsumoto-longest", "Theorem 2.2", not bad, reduced_words=len(orbit))

    if n >= 1:
        expect = sorted({s_ba(n, n, j) for j in range(1, n + 1)},
                        key=lambda w: (length(w), w))
        got = coset_reps(n, n - 1, "right")
        rep.add("left-minimal-list", "Lemma 8.2", got == expect,
                got=[_plist(w) for w in got])

        bad = []
        for r in range(-1, n):
            js = range(n - r - 1, n + 1) if r <= n - 2 else range(1, n + 1)
            expect = sorted({s_ba(n, n, j) for j in js}, key=lambda w: (length(w), w))
            got = double_coset_reps(n, parabolic(n - 1), parabolic(max(n - r - 1, 0)))
            if got != expect:
                bad.append(r)
        rep.add("double-coset-lists", "Lemma 8.3", not bad, failures=bad)

        bad = []
        for r in range(-1, n):
            whole = set(coset_reps(n, max(n - r - 1, 0), "left"))
            parts: list = []
            for k in range(0, r + 1):
                d = s_ba(n, n, n - k)
                parts += [compose(embed(x, n), d) for x in coset_reps(n - 1, max(n - r - 1, 0), "left")]
            if r <= n - 2:
                d = s_ba(n, n, n - r - 1)
                parts += [compose(embed(x, n), d) for x in coset_reps(n - 1, max(n - r - 2, 0), "left")]
            if len(parts) != len(set(parts)) or set(parts) != whole:
                bad.append(r)
        rep.add("mackey-degreewise", "Lemma 8.4", not bad, failures=bad)

    gens = list(range(1, n))
    if n <= 5:
        subsets = [frozenset(c) for k in range(len(gens) + 1) for c in combinations(gens, k)]
        label = "all"
    else:
        subsets = [parabolic(k) for k in range(n + 1)]
        label = "standard S_k"
    bad, pairs = [], 0
    for J in subsets:
        for K in subsets:
            pairs += 1
            m = mackey_check(n, J, K)
            if not m.ok:
                bad.append({"J": sorted(J), "K": sorted(K), "why": m.failures[0]})
    rep.add("mackey-pairs", "Section 2.2 Mackey decomposition", not bad, pairs=pairs,
            subsets=label, failures=bad[:3])
    return rep


# -- Hecke algebra -------------------------------------------------------------

def hecke_suite(cfg: SuiteConfig) -> Report:
    n, F = cfg.n, cfg.field
    rng = random.Random(cfg.seed)
    rep = Report(f"hecke(n={n})")
    perms = all_perms(n)

    bad = []
    for _ in range(cfg.samples):
        a, b, c = (t_basis(n, F, rng.choice(perms)) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad.append([_plist(next(iter(x.coords))) for x in (a, b, c)])
    rep.add("associativity", "Theorem 2.7", not bad, triples=cfg.samples, failures=bad[:3])

    one = unit(n, F)
    bad_unit = [list(w) for w in perms if t_basis(n, F, w) * one != t_basis(n, F, w)
                or one * t_basis(n, F, w) != t_basis(n, F, w)]
    rep.add("unit", "Theorem 2.7", not bad_unit, failures=bad_unit[:3])

    q = F.element(F.q)
    bad = []
    for i in range(1, n):
        Ti = generator(n, F, i)
        if Ti * Ti != Ti.scale(q - 1) + one.scale(q):
            bad.append(i)
    rep.add("quadratic", "Section 1.2 quadratic relation", not bad, failures=bad)

    # basis element from any reduced word (Matsumoto)
    bad, checked = [], 0
    for w in perms:
        if length(w) > 6:
            continue
        for word in sorted(x.letters for x in matsumoto_orbit(w)):
            checked += 1
            h = one
            for i in word:
                h = h.rmul_gen(i)
            if h != t_basis(n, F, w):
                bad.append(list(word))
    rep.add("word-independence", "Theorem 2.2", not bad, words=checked, failures=bad[:3])

    bad = [(b, a) for b in range(1, n + 1) for a in range(1, b + 1)
           if T_ba(n, F, b, a) != t_basis(n, F, s_ba(n, b, a))]
    rep.add("T_ba-basis", "Definition 6.1", not bad, failures=bad)

    rep.extend(verify_tmoves(n, F))

    # characters
    bad = []
    for _ in range(min(cfg.samples, 200)):
        a = _random_element(n, F, rng)
        b = _random_element(n, F, rng)
        for ch in ("trivial", "sign"):
            if character(ch, a * b) != character(ch, a) * character(ch, b):
                bad.append(ch)
    rel_ok = True
    if n >= 2:
        T1 = generator(n, F, 1)
        rel = (T1 + one) * (T1 - one.scale(q))
        rel_ok = all(character(ch, rel) == F.element(F.zero) for ch in ("trivial", "sign"))
    rep.add("characters", "Section 1.3 rank-1 modules", not bad and rel_ok,
            failures=bad[:3])

    if n <= 4:
        rep.add("group-algebra-at-q1", "Section 1.2 specialization", _group_algebra_ok(n))

    # induced modules: reduction, relations
    bad_red, bad_rel = [], []
    for m in range(0, n + 1):
        M = InducedModule(n, m, F)
        for w in perms:
            k, c = M.reduce_tensor(w)
            v, x = parabolic_factorize(n, parabolic(M.m), w, "left")
            if M.basis[k] != x or c != F.element(F.q_power(length(v))):
                bad_red.append({"m": m, "w": _plist(w)})
                break
        A = [M.action_matrix(i) for i in range(1, n)]
        I = Mat.identity(F, M.dim)
        for i, Ai in enumerate(A, start=1):
            if not ((Ai + I) @ (Ai - I.scale(F.q))).is_zero():
                bad_rel.append({"m": m, "relation": f"quadratic {i}"})
        for i in range(len(A) - 1):
            if A[i] @ A[i + 1] @ A[i] != A[i + 1] @ A[i] @ A[i + 1]:
                bad_rel.append({"m": m, "relation": f"braid {i + 1}"})
        for i in range(len(A)):
            for j in range(i + 2, len(A)):
                if A[i] @ A[j] != A[j] @ A[i]:
                    bad_rel.append({"m": m, "relation": f"commute {i + 1},{j + 1}"})
    rep.add("induced-reduction", "Proposition 2.8", not bad_red, failures=bad_red[:3])
    rep.add("induced-relations", "Proposition 2.8", not bad_rel, failures=bad_rel[:3])
    return rep


def _random_element(n: int, F: ScalarField, rng: random.Random) -> HeckeElement:
    perms = all_perms(n)
    coords = {}
    for _ in range(rng.randrange(1, 4)):
        coords[rng.choice(perms)] = F.from_int(rng.randrange(-3, 4))
    return HeckeElement(n, F, coords)


def _group_algebra_ok(n: int) -> bool:
    F = RationalQ(Fraction(1))
    perms = all_perms(n)
    for u in perms:
        for v in perms:
            if t_basis(n, F, u) * t_basis(n, F, v) != t_basis(n, F, compose(u, v)):
                return False
    return True


# -- D(n) ----------------------------------------------------------------------

def dcomplex_suite(cfg: SuiteConfig) -> Report:
    from .dcomplex import (
        acyclicity_check, boundary_entries_check, build_D, f0_betti_check, filtration,
        filtration_check, four_cases_check, phi_check, psi_check, semisimplicial_check,
    )
    n, F = cfg.n, cfg.field
    rep = Report(f"d-complex(n={n})")
    C = build_D(n, F).complex  # constructor verifies dd = 0
    rep.add("boundary-squared-zero", "Lemma 6.3", not C.dd_failures(),
            dims=[C.dim(r) for r in C.degrees()])
    if isinstance(F, GenericQ):
        rep.extend(boundary_entries_check(n, F))
    rep.extend(semisimplicial_check(n, F))
    rep.extend(four_cases_check(n, F))
    if n >= 1:
        layers = filtration(n, F)
        rep.extend(filtration_check(n, F, layers), prefix="filtration-")
        rep.extend(phi_check(n, F, layers), prefix="phi-")
        rep.extend(f0_betti_check(n, F, layers))
        for p in range(1, n):
            rep.extend(psi_check(n, p, F, layers), prefix=f"psi-p{p}-")
    rep.extend(acyclicity_check(n, F))
    return rep


def injective_words_suite(cfg: SuiteConfig) -> Report:
    from .injective_words import farmer_check, theta_check
    rep = Report(f"injective-words(n={cfg.n})")
    rep.extend(farmer_check(cfg.n, cfg.field))
    rep.extend(theta_check(cfg.n, cfg.field, seed=cfg.seed), prefix="theta-")
    return rep


# -- homological algebra -------------------------------------------------------

def _homalg_common(cfg: SuiteConfig, kind: str) -> Report:
    from .homalg import build_resolution, ext, resolution_audit, tor
    n, F, dm = cfg.n, cfg.field, cfg.d_max
    rep = Report(f"{kind}(n={n})")
    R = build_resolution(n, F, dm, guard_override=cfg.guard_override)
    rep.extend(resolution_audit(R))
    T = tor(n, F, dm, guard_override=cfg.guard_override).dims
    E = ext(n, F, dm, guard_override=cfg.guard_override).dims
    main = T if kind == "tor" else E
    rep.add(f"{kind}-table", "Theorem 1.1", main[0] == 1, dims=main, ranks=R.ranks)
    rep.add("tor-equals-ext", "Theorem 1.1", T == E, tor=T, ext=E)
    if n <= 3:
        T2 = tor(n, F, dm, order="reverse", guard_override=cfg.guard_override).dims
        E2 = ext(n, F, dm, order="reverse", guard_override=cfg.guard_override).dims
        rep.add("resolution-independence", "Section 9 resolution", T2 == T and E2 == E,
                tor_reverse=T2, ext_reverse=E2)
    return rep


def tor_suite(cfg: SuiteConfig) -> Report:
    return _homalg_common(cfg, "tor")


def ext_suite(cfg: SuiteConfig) -> Report:
    return _homalg_common(cfg, "ext")


def stability_suite(cfg: SuiteConfig) -> Report:
    from .homalg import stability_check
    return stability_check(cfg.n, cfg.field, cfg.d_max, cfg.guard_override)


SUITES = {
    "coxeter": coxeter_suite,
    "hecke": hecke_suite,
    "d-complex": dcomplex_suite,
    "injective-words": injective_words_suite,
    "tor": tor_suite,
    "ext": ext_suite,
    "stability": stability_suite,
}
