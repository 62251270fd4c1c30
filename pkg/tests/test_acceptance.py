"""Exit criteria.  All arithmetic is exact; every comparison is equality.

Each test registers a one-line PASS/FAIL summary printed at session end.
"""

import time
from functools import cache
from math import gcd

import numpy as np

from rsbent.boolfn import BooleanFunction, anf_from_tt, degree, is_rotation_symmetric, tt_from_anf
from rsbent.constructions import (
    MmSpec,
    QuadraticSpec,
    Theorem2Params,
    construct_mm,
    construct_quadratic_rs,
    construct_su_tang,
    construct_theorem1,
    construct_theorem2,
    is_pi_permutation,
    pair_product_sum,
    quadratic_rs_bent_by_gcd,
    verify_lemma2_identity,
)
from rsbent.rotsym import (
    Gamma,
    compose_pair_sums,
    gamma_extract,
    make_rotation_symmetric_gamma,
    orbit_representative_masks,
    random_rs_gamma,
)
from rsbent.spectral import dual, is_bent, walsh_spectrum

from conftest import ACCEPTANCE
from oracles import naive_walsh

SEED = 20150101
PAPER_EXAMPLE2_DEGREE = 6


def report(key, ok, line):
    ACCEPTANCE[key] = (bool(ok), line)
    assert ok, line


def abs_values_equal(f, value):
    return bool(np.all(np.abs(walsh_spectrum(f).values) == value))


def odd_pairs(m_max):
    return [(m, t) for m in range(2, m_max + 1) for t in range(1, m) if (m // gcd(m, t)) % 2]


@cache
def example1():
    return construct_theorem1(6, make_rotation_symmetric_gamma(6, [0b111111]))


@cache
def example2():
    return construct_theorem2(Theorem2Params(6, 2))


@cache
def theorem1_sweep():
    rng = np.random.default_rng(SEED)
    out = []
    for m in range(2, 8):
        for _ in range(50):
            gamma = random_rs_gamma(m, rng)
            out.append((m, gamma, construct_theorem1(m, gamma)))
    return out


@cache
def theorem2_sweep():
    rng = np.random.default_rng(SEED + 1)
    out = []
    for m, t in odd_pairs(7):
        gammas = [Gamma.zero(m)]
        if m >= 3:
            gammas += [random_rs_gamma(m, rng, min_degree=3) for _ in range(10)]
        for gamma in gammas:
            out.append((m, t, gamma, construct_theorem2(Theorem2Params(m, t, gamma))))
    return out


def test_01_example1():
    start = time.perf_counter()
    f = example1()
    values = walsh_spectrum(f).values
    ok = values.size == 4096 and np.all(np.abs(values) == 64) and is_rotation_symmetric(f) and degree(f) == 6
    elapsed = time.perf_counter() - start
    report(1, ok and elapsed < 1.0, f"Example 1: 4096 values |W|=64, rotation symmetric, degree {degree(f)} ({elapsed:.3f}s < 1s)")


def test_02_example2():
    f = example2()
    ok = abs_values_equal(f, 64) and is_rotation_symmetric(f)
    d = degree(f)
    note = "matches" if d == PAPER_EXAMPLE2_DEGREE else "differs from"
    report(2, ok, f"Example 2: |W|=64 everywhere, rotation symmetric; computed degree {d} {note} stated {PAPER_EXAMPLE2_DEGREE} (not asserted)")


def test_03_lemma2_suite():
    start = time.perf_counter()
    failures = [
        (k, m, t) for m in range(2, 7) for t in range(1, m) for k in range(1, 6) if not verify_lemma2_identity(k, m, t)
    ]
    elapsed = time.perf_counter() - start
    report(3, not failures and elapsed < 30, f"identity suite k=1..5, m=2..6: {len(failures)} failures ({elapsed:.2f}s < 30s)")


def test_04_theorem1_sweep():
    start = time.perf_counter()
    bad = []
    per_m = {}
    for m, gamma, f in theorem1_sweep():
        per_m[m] = per_m.get(m, 0) + 1
        assert gamma.is_rotation_symmetric
        expected = max(2, gamma.degree)
        if not (is_bent(f) and is_rotation_symmetric(f) and degree(f) == expected):
            bad.append((m, gamma.to_text()))
    elapsed = time.perf_counter() - start
    ok = not bad and all(per_m.get(m, 0) >= 50 for m in range(2, 8)) and elapsed < 120
    report(4, ok, f"pair-sum family sweep m=2..7, {sum(per_m.values())} functions: {len(bad)} failures ({elapsed:.2f}s < 120s)")


def test_05_theorem2_sweep():
    start = time.perf_counter()
    bad = []
    cases = theorem2_sweep()
    for m, t, gamma, f in cases:
        ok = is_bent(f) and (is_rotation_symmetric(f) or not gamma.is_rotation_symmetric)
        if gamma.degree >= 3:
            ok = ok and degree(f) == gamma.degree
        if not ok:
            bad.append((m, t, gamma.to_text()))
    elapsed = time.perf_counter() - start
    pairs = len({(m, t) for m, t, _, _ in cases})
    report(5, not bad and elapsed < 120, f"cubic family sweep over {pairs} (m,t) pairs, {len(cases)} functions: {len(bad)} failures ({elapsed:.2f}s < 120s)")


def test_06_quadratic_criterion():
    start = time.perf_counter()
    cases = mismatches = 0
    for m in range(2, 7):
        for v in range(1 << m):
            spec = QuadraticSpec(m, tuple(v >> i & 1 for i in range(m)))
            cases += 1
            mismatches += quadratic_rs_bent_by_gcd(spec) != is_bent(construct_quadratic_rs(spec))
    elapsed = time.perf_counter() - start
    ok = cases == 124 and mismatches == 0 and elapsed < 10
    report(6, ok, f"gcd criterion vs spectrum: {cases} cases, {mismatches} mismatches ({elapsed:.2f}s < 10s)")


def test_07_pi_permutation():
    start = time.perf_counter()
    pairs = odd_pairs(12)
    bad = [(m, t) for m, t in pairs if not is_pi_permutation(m, t)]
    elapsed = time.perf_counter() - start
    report(7, not bad and elapsed < 5, f"pi is a permutation for {len(pairs)} (m,t) pairs, m<=12: {len(bad)} failures ({elapsed:.2f}s < 5s)")


def test_08_mm_iff():
    rng = np.random.default_rng(SEED + 8)
    mismatches = bijective = 0
    for trial in range(100):
        pi = rng.permutation(8) if trial % 2 == 0 else rng.integers(0, 8, 8)
        spec = MmSpec(3, tuple(pi.tolist()), BooleanFunction.from_bits(3, rng.integers(0, 2, 8)))
        bijective += spec.is_bijective
        mismatches += is_bent(construct_mm(spec)) != spec.is_bijective
    ok = mismatches == 0 and 0 < bijective < 100
    report(8, ok, f"MM bent iff bijective: 100 tables ({bijective} bijective), {mismatches} mismatches")


def test_09_gamma_extraction():
    rng = np.random.default_rng(SEED + 9)
    bad = 0
    for k in range(100):
        m = 1 + k % 6
        gamma = random_rs_gamma(m, rng)
        g = compose_pair_sums(gamma)
        got = gamma_extract(g)
        bad += not (compose_pair_sums(got) == g and got.is_rotation_symmetric)
    su_bad = 0
    su_cases = 0
    for m in range(2, 5):
        reps = orbit_representative_masks(m).tolist()
        for group in [[rep] for rep in reps] + [reps[1::2], reps]:
            su_cases += 1
            g = construct_su_tang(m, group) ^ pair_product_sum(m)
            got = gamma_extract(g)
            su_bad += compose_pair_sums(got) != g
    ok = bad == 0 and su_bad == 0
    report(9, ok, f"extraction recomposition: 100 gammas {bad} failures; Su-Tang {su_cases} cases {su_bad} failures")


def test_10_infrastructure():
    rng = np.random.default_rng(SEED + 10)
    fwht_bad = parseval_bad = 0
    for k in range(200):
        n = 1 + k % 10
        f = BooleanFunction.from_bits(n, rng.integers(0, 2, 1 << n))
        spec = walsh_spectrum(f)
        fwht_bad += spec.values.tolist() != naive_walsh(f)
        parseval_bad += not spec.parseval_ok()
    mobius_bad = 0
    for k in range(100):
        n = 1 + k % 14
        f = BooleanFunction.from_bits(n, rng.integers(0, 2, 1 << n))
        mobius_bad += tt_from_anf(anf_from_tt(f)) != f
    bent = [example1(), example2()]
    bent += [f for _, _, f in theorem1_sweep()]
    bent += [f for _, _, _, f in theorem2_sweep()]
    dual_bad = 0
    for f in bent:
        parseval_bad += not walsh_spectrum(f).parseval_ok()
        d = dual(f)
        parseval_bad += not walsh_spectrum(d).parseval_ok()
        dual_bad += not (dual(d) == f and is_rotation_symmetric(d))
    ok = fwht_bad == parseval_bad == mobius_bad == dual_bad == 0
    report(
        10,
        ok,
        f"FWHT vs naive {fwht_bad}/200, Moebius {mobius_bad}/100, Parseval {parseval_bad}, "
        f"dual involution/rotation symmetry {dual_bad}/{len(bent)} failures",
    )
