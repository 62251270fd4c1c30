"""Exhaustive verification sweep over the constructions.

Each check enumerates parameter tuples and records the tuples that fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .boolfn import BooleanFunction, degree, is_rotation_symmetric, tt_from_anf
from .constructions import (
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
    su_tang_split_anf,
    verify_lemma2_identity,
)
from .rotsym import (
    Gamma,
    GammaConditionError,
    compose_pair_sums,
    gamma_extract,
    make_rotation_symmetric_gamma,
    orbit_representative_masks,
    random_rs_gamma,
)
from .spectral import is_bent

__all__ = ["CheckResult", "DEFAULT_BOUNDS", "gamma_suite", "run_suite"]

DEFAULT_BOUNDS = {
    "lemma2": 6,
    "pi_permutation": 12,
    "quadratic_gcd": 6,
    "theorem1": 7,
    "theorem2": 7,
    "su_tang": 4,
    "mm_iff": 3,
}


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(case)

    def as_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": self.failures}


def gamma_suite(m: int, rng: np.random.Generator, n_random: int = 50, min_degree: int = 0) -> list[Gamma]:
    """Single-orbit gammas (for m <= 5) followed by random multi-orbit ones."""
    suite = []
    if m <= 5:
        for rep in orbit_representative_masks(m).tolist():
            if rep and rep.bit_count() >= min_degree:
                suite.append(make_rotation_symmetric_gamma(m, [rep]))
    suite.extend(random_rs_gamma(m, rng, min_degree) for _ in range(n_random))
    return suite


def _odd_pairs(m_max: int):
    for m in range(2, m_max + 1):
        for t in range(1, m):
            if (m // gcd(m, t)) % 2:
                yield m, t


def _flip(f: BooleanFunction) -> BooleanFunction:
    bits = f.bits.copy()
    bits[0] ^= 1
    return BooleanFunction.from_bits(f.n, bits)


def run_suite(max_m: int | None = None, seed: int = 0, inject_fault: bool = False) -> list[CheckResult]:
    """Run every check; ``max_m`` caps each sweep's half-dimension.

    ``inject_fault`` flips one truth-table bit of the first Theorem-1
    function, which must surface as exactly one failing tuple.
    """

    def bound(name):
        b = DEFAULT_BOUNDS[name]
        return b if max_m is None else min(b, max_m)

    rng = np.random.default_rng(seed)
    results = []

    res = CheckResult("lemma2_identities")
    for m in range(2, bound("lemma2") + 1):
        for t in range(1, m):
            for k in range(1, 6):
                res.record(verify_lemma2_identity(k, m, t), {"k": k, "m": m, "t": t})
    results.append(res)

    res = CheckResult("pi_permutation")
    for m, t in _odd_pairs(bound("pi_permutation")):
        res.record(is_pi_permutation(m, t), {"m": m, "t": t})
    results.append(res)

    res = CheckResult("quadratic_gcd_vs_spectrum")
    for m in range(2, bound("quadratic_gcd") + 1):
        for v in range(1 << m):
            spec = QuadraticSpec(m, tuple(v >> i & 1 for i in range(m)))
            ok = quadratic_rs_bent_by_gcd(spec) == is_bent(construct_quadratic_rs(spec))
            res.record(ok, {"m": m, "c": "".join(map(str, spec.c))})
    results.append(res)

    res = CheckResult("theorem1_bent_rotsym_degree")
    fault_pending = inject_fault
    for m in range(2, bound("theorem1") + 1):
        for idx, gamma in enumerate(gamma_suite(m, rng)):
            f = construct_theorem1(m, gamma)
            if fault_pending:
                f = _flip(f)
                fault_pending = False
            ok = is_bent(f) and is_rotation_symmetric(f) and degree(f) == max(2, gamma.degree)
            res.record(ok, {"m": m, "gamma": gamma.to_text(), "index": idx})
    results.append(res)

    res = CheckResult("theorem2_bent_rotsym_degree")
    for m, t in _odd_pairs(bound("theorem2")):
        gammas = [Gamma.zero(m)]
        if m >= 3:
            gammas += gamma_suite(m, rng, n_random=10, min_degree=3)
        for gamma in gammas:
            f = construct_theorem2(Theorem2Params(m, t, gamma))
            ok = is_bent(f) and is_rotation_symmetric(f)
            if gamma.degree >= 3:
                ok = ok and degree(f) == gamma.degree
            res.record(ok, {"m": m, "t": t, "gamma": gamma.to_text()})
    results.append(res)

    res = CheckResult("su_tang_extraction")
    for m in range(2, bound("su_tang") + 1):
        base = pair_product_sum(m)
        for rep in orbit_representative_masks(m).tolist():
            f = construct_su_tang(m, [rep])
            g = f ^ base
            try:
                gamma = gamma_extract(g)
                ok = compose_pair_sums(gamma) == g and gamma.is_rotation_symmetric
            except GammaConditionError:
                ok = False
            ok = ok and tt_from_anf(su_tang_split_anf(m, [rep])) == f
            res.record(ok, {"m": m, "rep": rep})
    results.append(res)

    res = CheckResult("mm_iff_bijective")
    for m in range(1, bound("mm_iff") + 1):
        size = 1 << m
        for trial in range(100):
            pi = rng.permutation(size) if trial % 2 == 0 else rng.integers(0, size, size)
            h = BooleanFunction.from_bits(m, rng.integers(0, 2, size))
            spec = MmSpec(m, tuple(pi.tolist()), h)
            res.record(is_bent(construct_mm(spec)) == spec.is_bijective, {"m": m, "trial": trial})
    results.append(res)

    return results
