"""Constructions of rotation-symmetric bent functions.

Covers the two pair-sum families (``construct_theorem1`` and
``construct_theorem2``), the Maiorana-McFarland class, the Su-Tang, Carlet
and quadratic families, and the algebraic identities behind the proofs.

All index arithmetic is cyclic: ``x_{i-t}`` means ``x_{(i-t) mod n}``, and
indices of ``a`` or ``gamma`` variables are reduced mod ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

import numpy as np

from .boolfn import Anf, BooleanFunction, tt_from_anf
from .gf2poly import Gf2Poly, poly_gcd
from .rotsym import Gamma, compose_pair_sums, make_rotation_symmetric_gamma, orbit_of

__all__ = [
    "HypothesisError",
    "MmSpec",
    "QuadraticSpec",
    "Theorem2Params",
    "construct_carlet_cubic",
    "construct_mm",
    "construct_quadratic_rs",
    "construct_su_tang",
    "construct_theorem1",
    "construct_theorem2",
    "is_pi_permutation",
    "pair_product_sum",
    "pi_map",
    "pi_table",
    "quadratic_polynomial",
    "quadratic_rs_bent_by_gcd",
    "su_tang_split_anf",
    "verify_lemma2_identity",
]


class HypothesisError(ValueError):
    """Parameters violate a hypothesis of the construction."""


def _from_terms(n: int, terms) -> BooleanFunction:
    return tt_from_anf(Anf.from_terms(n, terms))


def _mono(n: int, *indices: int) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i % n)
    return mask


def pair_product_sum(m: int) -> BooleanFunction:
    """``sum_{i<m} x_i x_{i+m}`` on ``2m`` variables."""
    n = 2 * m
    return _from_terms(n, (_mono(n, i, i + m) for i in range(m)))


def _check_gamma(m: int, gamma: Gamma | None) -> Gamma:
    if gamma is None:
        return Gamma.zero(m)
    if gamma.m != m:
        raise ValueError(f"gamma has {gamma.m} variables, expected m={m}")
    return gamma


def construct_theorem1(m: int, gamma: Gamma | None = None) -> BooleanFunction:
    """``sum_{i<m} x_i x_{i+m} + gamma(x_0+x_m, ..., x_{m-1}+x_{2m-1})``.

    Bent for every ``gamma``; rotation symmetric when ``gamma`` is, and of
    degree ``max(2, deg gamma)``.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    gamma = _check_gamma(m, gamma)
    return pair_product_sum(m) ^ compose_pair_sums(gamma)


@dataclass(frozen=True)
class Theorem2Params:
    m: int
    t: int
    gamma: Gamma = None

    def __post_init__(self):
        if self.m < 2:
            raise HypothesisError(f"m must be at least 2, got {self.m}")
        if not 1 <= self.t <= self.m - 1:
            raise HypothesisError(f"t must satisfy 1 <= t <= m-1, got t={self.t}, m={self.m}")
        if (self.m // gcd(self.m, self.t)) % 2 == 0:
            raise HypothesisError(
                f"m/gcd(m,t) must be odd; m={self.m}, t={self.t} gives {self.m // gcd(self.m, self.t)}"
            )
        object.__setattr__(self, "gamma", _check_gamma(self.m, self.gamma))


def theorem2_base(m: int, t: int) -> BooleanFunction:
    """The ``gamma = 0`` member: the cubic family with shift ``t``."""
    n = 2 * m
    terms = []
    for i in range(n):
        terms.append(_mono(n, i, i + t, i + m))
        terms.append(_mono(n, i, i + t))
    terms.extend(_mono(n, i, i + m) for i in range(m))
    return _from_terms(n, terms)


def construct_theorem2(params: Theorem2Params) -> BooleanFunction:
    """``sum_{i<n}(x_i x_{i+t} x_{i+m} + x_i x_{i+t}) + sum_{i<m} x_i x_{i+m}``
    plus ``gamma`` of the pair sums.

    Built directly from the ANF; bent whenever ``m/gcd(m,t)`` is odd.
    """
    return theorem2_base(params.m, params.t) ^ compose_pair_sums(params.gamma)


def _check_t(m: int, t: int) -> None:
    if not 1 <= t <= m - 1:
        raise ValueError(f"t must satisfy 1 <= t <= m-1, got t={t}, m={m}")


def pi_map(a: int, m: int, t: int) -> int:
    """Bit ``i`` of the result is ``a_i a_{i+t} + a_{i+t} + a_{i+m-t}`` (indices mod m)."""
    _check_t(m, t)
    out = 0
    for i in range(m):
        ai = a >> i & 1
        at = a >> ((i + t) % m) & 1
        amt = a >> ((i + m - t) % m) & 1
        out |= ((ai & at) ^ at ^ amt) << i
    return out


def pi_table(m: int, t: int) -> np.ndarray:
    """``pi_map`` evaluated on every ``a`` in ``[0, 2**m)``."""
    _check_t(m, t)
    a = np.arange(1 << m, dtype=np.int64)
    out = np.zeros_like(a)
    for i in range(m):
        ai = a >> i & 1
        at = a >> ((i + t) % m) & 1
        amt = a >> ((i + m - t) % m) & 1
        out |= ((ai & at) ^ at ^ amt) << i
    return out


def is_pi_permutation(m: int, t: int) -> bool:
    """Brute-force injectivity of ``pi_map(., m, t)``."""
    if m > 24:
        raise ValueError(f"brute force limited to m <= 24, got {m}")
    counts = np.bincount(pi_table(m, t), minlength=1 << m)
    return bool(np.all(counts == 1))


@dataclass(frozen=True)
class MmSpec:
    """``f(a, y) = <y, pi(a)> + h(a)`` with ``a = x_0..x_{m-1}``, ``y = x_m..x_{2m-1}``."""

    m: int
    pi: tuple
    h: BooleanFunction | None = None

    def __post_init__(self):
        pi = tuple(int(v) for v in self.pi)
        if len(pi) != 1 << self.m:
            raise ValueError(f"pi table must have {1 << self.m} entries, got {len(pi)}")
        if any(not 0 <= v < (1 << self.m) for v in pi):
            raise ValueError("pi values must lie in [0, 2**m)")
        object.__setattr__(self, "pi", pi)
        if self.h is not None and self.h.n != self.m:
            raise ValueError(f"h must have {self.m} variables, got {self.h.n}")

    @property
    def is_bijective(self) -> bool:
        return len(set(self.pi)) == len(self.pi)


def construct_mm(spec: MmSpec) -> BooleanFunction:
    m = spec.m
    low = (1 << m) - 1
    u = np.arange(1 << (2 * m), dtype=np.int64)
    a, y = u & low, u >> m
    pi = np.asarray(spec.pi, dtype=np.int64)
    bits = np.bitwise_count(y & pi[a]) & 1
    if spec.h is not None:
        bits ^= spec.h.bits[a]
    return BooleanFunction.from_bits(2 * m, bits)


def _canonical_reps(m: int, reps) -> list[int]:
    return sorted({orbit_of(int(r), m).representative for r in reps})


def construct_su_tang(m: int, reps) -> BooleanFunction:
    """Su-Tang function for the orbit representatives ``reps``.

    Equal to ``construct_theorem1`` with ``gamma`` the sum of the orbits;
    :func:`su_tang_split_anf` expands the defining sum literally.
    """
    gamma = make_rotation_symmetric_gamma(m, _canonical_reps(m, reps))
    return construct_theorem1(m, gamma)


def su_tang_split_anf(m: int, reps) -> Anf:
    """ANF from the defining sum over disjoint splits.

    For every orbit member ``mu`` and every ``beta'`` with
    ``beta' + beta'' = mu`` over the integers, the monomial
    ``prod x_i^{beta'_i} x_{i+m}^{beta''_i}`` is added.
    """
    n = 2 * m
    terms = [_mono(n, i, i + m) for i in range(m)]
    for rep in _canonical_reps(m, reps):
        for mu in orbit_of(rep, m).members:
            idx = [i for i in range(m) if mu >> i & 1]
            for k in range(len(idx) + 1):
                for left in combinations(idx, k):
                    lo = sum(1 << i for i in left)
                    hi = (mu ^ lo) << m
                    terms.append(lo | hi)
    return Anf.from_terms(n, terms)


def construct_carlet_cubic(r: int) -> BooleanFunction:
    """``sum_{i<n} x_i x_{i+r} x_{i+2r} + sum_{i<2r} x_i x_{i+2r} x_{i+4r}
    + sum_{i<m} x_i x_{i+m}`` with ``n = 2m = 6r``."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    n, m = 6 * r, 3 * r
    terms = [_mono(n, i, i + r, i + 2 * r) for i in range(n)]
    terms += [_mono(n, i, i + 2 * r, i + 4 * r) for i in range(2 * r)]
    terms += [_mono(n, i, i + m) for i in range(m)]
    return _from_terms(n, terms)


@dataclass(frozen=True)
class QuadraticSpec:
    """Coefficients ``c = (c_1, ..., c_m)`` of the quadratic family."""

    m: int
    c: tuple = field(default=())

    def __post_init__(self):
        c = tuple(int(v) & 1 for v in self.c)
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if len(c) != self.m:
            raise ValueError(f"need exactly m={self.m} coefficients, got {len(c)}")
        object.__setattr__(self, "c", c)

    @classmethod
    def from_bitstring(cls, m: int, text: str) -> QuadraticSpec:
        """``"01"`` means ``c_1 = 0, c_2 = 1``."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"coefficient string must be binary, got {text!r}")
        return cls(m, tuple(int(ch) for ch in text))


def quadratic_polynomial(spec: QuadraticSpec) -> Gf2Poly:
    """``sum_{i<m} c_i (X^i + X^{n-i}) + c_m X^m``."""
    m, n = spec.m, 2 * spec.m
    v = 0
    for i in range(1, m):
        if spec.c[i - 1]:
            v ^= (1 << i) ^ (1 << (n - i))
    if spec.c[m - 1]:
        v ^= 1 << m
    return Gf2Poly(v)


def quadratic_rs_bent_by_gcd(spec: QuadraticSpec) -> bool:
    n = 2 * spec.m
    g = poly_gcd(quadratic_polynomial(spec), Gf2Poly((1 << n) | 1))
    return g.value == 1


def construct_quadratic_rs(spec: QuadraticSpec) -> BooleanFunction:
    m, n = spec.m, 2 * spec.m
    terms = []
    for i in range(1, m):
        if spec.c[i - 1]:
            terms += [_mono(n, j, j + i) for j in range(n)]
    if spec.c[m - 1]:
        terms += [_mono(n, j, j + m) for j in range(m)]
    return _from_terms(n, terms)


def _lemma_sides(k: int, m: int, t: int, i: int | None):
    n = 2 * m
    one = BooleanFunction.constant(n, 1)
    zero = BooleanFunction.constant(n, 0)
    xs = [BooleanFunction.variable(n, j) for j in range(n)]

    def x(j):
        return xs[j % n]

    def total(it):
        acc = zero
        for term in it:
            acc = acc ^ term
        return acc

    tail = range(m - t, m)
    if k == 1:
        lhs = total(x(j) & x(j + t) ^ x(j + m - t) & x(j + m) for j in range(m))
        rhs = total(x(j) & x(j + t) for j in range(n)) ^ total(
            x(j) & x(j + t) ^ x(j + m) & x(j + m + t) for j in tail
        )
    elif k == 2:
        lhs = total(x(j) & x(j + m + t) ^ x(j - t) & x(j + m) for j in range(m))
        rhs = total(x(j) & x(j + m + t) ^ x(j + m) & x(j + t) for j in tail)
    elif k == 3:
        lhs = total(
            x(j) & x(j + t) ^ x(j + m - t) & x(j + m) ^ x(j) & x(j + m + t) ^ x(j - t) & x(j + m)
            for j in range(m)
        )
        rhs = (
            total(x(j) & x(j + t) for j in range(n))
            ^ total((x(j) ^ x(j + m) ^ one) & (x(j + t) ^ x(j + m + t) ^ one) for j in tail)
            ^ total(x(j) ^ x(j + t) ^ x(j + m) ^ x(j + m + t) ^ one for j in tail)
        )
    elif k == 4:
        lhs = total(x(j) & x(j + m) & (x(j + t) ^ x(j + m + t)) for j in range(m))
        rhs = total(x(j) & x(j + t) & x(j + m) for j in range(n))
    elif k == 5:
        rows = range(m) if i is None else [i]
        lhs, rhs = [], []
        for j in rows:

            def a(q):
                return x(q) ^ x(q + m) ^ one

            y = x(j + m) ^ one
            lhs.append((a(j) & a(j + t) ^ a(j + t) ^ a(j + m - t)) & y)
            rhs.append(
                x(j) & x(j + m) & (x(j + t) ^ x(j + m + t))
                ^ x(j) & x(j + m)
                ^ (x(j) & x(j + t) ^ x(j + m - t) & x(j + m))
                ^ (x(j) & x(j + m + t) ^ x(j + m) & x(j - t))
                ^ x(j)
                ^ x(j + m)
                ^ x(j + m - t)
                ^ x(j - t)
                ^ one
            )
    else:
        raise ValueError(f"identity index must be in 1..5, got {k}")
    return lhs, rhs


def verify_lemma2_identity(k: int, m: int, t: int, i: int | None = None) -> bool:
    """Check one of the five identities used for the cubic family.

    Both sides are built as truth tables on ``2m`` variables and compared
    exhaustively.  Identity 5 is checked for row ``i``, or every row when
    ``i`` is None.
    """
    if k not in range(1, 6):
        raise ValueError(f"identity index must be in 1..5, got {k}")
    _check_t(m, t)
    if 2 * m > 16:
        raise ValueError(f"exhaustive check limited to 2m <= 16, got m={m}")
    lhs, rhs = _lemma_sides(k, m, t, i)
    if k == 5:
        return all(lf == rf for lf, rf in zip(lhs, rhs))
    return lhs == rhs
