"""
One test per acceptance criterion. Each records a line that the session
summary prints as ``criterion k: PASS|FAIL``; runtime targets are asserted too.
"""

import json
import os
import subprocess
import sys
import time
from fractions import Fraction


from conftest import ACCEPTANCE
from heckehom.suites import SuiteConfig, coxeter_suite, hecke_suite
from heckehom.scalars import CyclotomicRoot, GenericQ, PrimeField, RationalQ

G = GenericQ()
GF2 = PrimeField(2, 1)


def _record(k, desc, ok, seconds, limit):
    ok = bool(ok) and seconds < limit
    ACCEPTANCE[k] = (f"{desc} [{seconds:.1f}s / {limit}s]", ok)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {desc}")
    return ok


def _need(rep, ids):
    return all(rep[i].ok for i in ids)


def test_criterion_1_coxeter():
    t = time.perf_counter()
    ok = True
    for n in range(0, 7):
        rep = coxeter_suite(SuiteConfig(n, G))
        ok &= _need(rep, ["word-problem-normal-forms", "m-move-oracle"])
        if n >= 1:
            ok &= _need(rep, ["left-minimal-list", "double-coset-lists", "mackey-degreewise"])
        if n <= 5:
            ok &= rep["mackey-pairs"].ok and rep["mackey-pairs"].payload["subsets"] == "all"
    assert _record(1, "Coxeter: normal forms n<=6, coset and double-coset lists, Mackey pairs n<=5",
                   ok, time.perf_counter() - t, 30)


def test_criterion_2_hecke():
    from heckehom.hecke import verify_tmoves
    from heckehom.suites import _group_algebra_ok
    t = time.perf_counter()
    ok = True
    for n in range(1, 6):
        rep = hecke_suite(SuiteConfig(n, G, samples=10_000, seed=n))
        ok &= rep["associativity"].ok and rep["associativity"].payload["triples"] == 10_000
    for n in range(1, 7):
        ok &= verify_tmoves(n, G).ok
    for n in range(0, 5):
        ok &= _group_algebra_ok(n)
    assert _record(2, "Hecke: associativity 10^4 triples n<=5, T-moves n<=6, q=1 group algebra n<=4",
                   ok, time.perf_counter() - t, 60)


def test_criterion_3_d_complex():
    from heckehom.dcomplex import (
        acyclicity_check, build_D, four_cases_check, semisimplicial_check,
    )
    t = time.perf_counter()
    ok = True
    for n in range(0, 6):
        ok &= not build_D(n, G).complex.dd_failures()
        ok &= semisimplicial_check(n, G).ok
        ok &= _need(four_cases_check(n, G), ["case-A", "case-B", "case-C", "case-D"])
        ok &= acyclicity_check(n, G).ok
    for F in (GF2, CyclotomicRoot(3)):
        for n in range(0, 7):
            ok &= acyclicity_check(n, F).ok
    assert _record(3, "D(n): dd=0, face identity, four cases n<=5; acyclic (generic n<=5, GF(2) and l=3 n<=6)",
                   ok, time.perf_counter() - t, 300)


def test_criterion_4_filtration():
    from heckehom.dcomplex import f0_betti_check, filtration, filtration_check, phi_check, psi_check
    t = time.perf_counter()
    ok = True
    for n in range(1, 6):
        layers = filtration(n, G)
        ok &= filtration_check(n, G, layers).ok
        ok &= phi_check(n, G, layers).ok and f0_betti_check(n, G, layers).ok
        for p in range(1, n):
            ok &= psi_check(n, p, G, layers).ok
    assert _record(4, "Filtration: exhaustion, nesting, subcomplexes, Phi/Psi isos n<=5 generic",
                   ok, time.perf_counter() - t, 120)


def test_criterion_5_injective_words():
    from heckehom.injective_words import farmer_check, theta_check
    t = time.perf_counter()
    ok = True
    for F in (RationalQ(Fraction(1)), GF2):
        for n in range(0, 7):
            ok &= farmer_check(n, F).ok
            rep = theta_check(n, F)
            ok &= _need(rep, ["chain-map-commutes", "permutation-blocks", "iso", "equivariant"])
            if n <= 5:
                ok &= rep["cprime-equals-d-at-q1"].ok
    assert _record(5, "Injective words: Farmer n<=6, Theta permutation iso, C'(n) = D(n) at q=1",
                   ok, time.perf_counter() - t, 60)


def test_criterion_6_homological_algebra():
    from heckehom.homalg import ext, tor
    t = time.perf_counter()
    ok = True
    for F in (GF2, CyclotomicRoot(2), CyclotomicRoot(3), PrimeField(3, 1), RationalQ(Fraction(2))):
        for n in range(0, 5):
            ok &= tor(n, F, 3).dims[0] == 1 and ext(n, F, 3).dims[0] == 1
    for q in (Fraction(2), Fraction(3), Fraction(1, 2)):
        for n in range(1, 5):
            ok &= tor(n, RationalQ(q), 3).dims == [1, 0, 0, 0] == ext(n, RationalQ(q), 3).dims
    ok &= tor(2, GF2, 5).dims == [1] * 6 == ext(2, GF2, 5).dims
    e = ext(2, CyclotomicRoot(2), 3).dims
    ok &= all(x > 0 for x in e[1:])
    assert _record(6, "Tor/Ext: degree 0, semisimple vanishing, n=2 periodicity, q=-1 nontrivial",
                   ok, time.perf_counter() - t, 300)


def test_criterion_7_stability():
    from heckehom.homalg import stabilization_map
    t = time.perf_counter()
    ok = True
    for F in (GF2, CyclotomicRoot(2)):
        for n in range(1, 5):
            S = stabilization_map(n, F, 3)
            ok &= all(S.tor_iso(d) and S.ext_iso(d) for d in range(4) if 2 * d <= n - 1)
            ok &= all(S.lifts_agree)
    S = stabilization_map(4, GF2, 3)
    ok &= not S.tor_surjective(2)
    assert _record(7, "Stability: isos for d<=(n-1)/2 at n<=4; n=4, d=2 over GF(2) not surjective",
                   ok, time.perf_counter() - t, 600)


COMMANDS = [
    ["verify", "coxeter", "--n", "5"],
    ["verify", "hecke", "--n", "4"],
    ["verify", "d-complex", "--n", "4", "--field", "generic"],
    ["verify", "injective-words", "--n", "4"],
    ["tor", "--n", "3", "--field", "gf:p=2,q=1", "--dmax", "3"],
    ["ext", "--n", "3", "--field", "cyclotomic:l=2", "--dmax", "3"],
    ["stability", "--n", "4", "--field", "gf:p=2,q=1", "--dmax", "3"],
]


def _cli(argv, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    p = subprocess.run([sys.executable, "-m", "heckehom", *argv], capture_output=True,
                       text=True, env=env)
    doc = json.loads(p.stdout)
    doc.pop("duration_ms")
    return p.returncode, json.dumps(doc, indent=1)


def test_criterion_8_determinism():
    t = time.perf_counter()
    ok = True
    for argv in COMMANDS:
        a, b = _cli(argv, 1), _cli(argv, 2)
        ok &= a == b
    assert _record(8, "Determinism: fresh-process reruns give byte-identical JSON (minus duration)",
                   ok, time.perf_counter() - t, 300)
