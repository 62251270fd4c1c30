"""Cyclic orbits on m-bit masks and rotation-symmetric polynomials.

Also recovers the polynomial ``gamma`` from a function of the pair sums
``x_i + x_{i+m}`` (see :func:`gamma_extract`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfn import (
    Anf,
    BooleanFunction,
    anf_from_tt,
    is_rotation_symmetric,
    mobius,
    parse_anf,
    tt_from_anf,
)

__all__ = [
    "Gamma",
    "GammaConditionError",
    "Orbit",
    "compose_pair_sums",
    "gamma_extract",
    "make_rotation_symmetric_gamma",
    "orbit_of",
    "orbit_representative_masks",
    "orbit_representatives",
    "parse_gamma",
    "random_rs_gamma",
    "rotate_mask",
]


def rotate_mask(mask: int, m: int, s: int = 1) -> int:
    """Shift every set index ``i`` of ``mask`` to ``i + s mod m``."""
    s %= m
    full = (1 << m) - 1
    return ((mask << s) | (mask >> (m - s))) & full


@dataclass(frozen=True)
class Orbit:
    m: int
    representative: int
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


def orbit_of(delta: int, m: int) -> Orbit:
    if not 0 <= delta < (1 << m):
        raise ValueError(f"mask {delta:#x} does not fit in {m} bits")
    members = {delta}
    x = delta
    for _ in range(m - 1):
        x = rotate_mask(x, m)
        members.add(x)
    return Orbit(m, min(members), frozenset(members))


def orbit_representative_masks(m: int, chunk: int = 1 << 20) -> np.ndarray:
    """Sorted array of the least member of every cyclic orbit on m-bit masks."""
    if not 1 <= m <= 28:
        raise ValueError(f"orbit length must satisfy 1 <= m <= 28, got {m}")
    full = (1 << m) - 1
    found = []
    for start in range(0, 1 << m, chunk):
        u = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        best = u.copy()
        x = u
        for _ in range(m - 1):
            x = ((x << 1) | (x >> (m - 1))) & full
            np.minimum(best, x, out=best)
        found.append(u[best == u])
    return np.concatenate(found)


def orbit_representatives(m: int) -> list[Orbit]:
    """All cyclic orbits on m-bit masks, ordered by representative."""
    return [orbit_of(int(r), m) for r in orbit_representative_masks(m)]


@dataclass(frozen=True)
class Gamma:
    """A reduced polynomial in the variables ``X_0, ..., X_{m-1}``."""

    m: int
    anf: Anf

    def __post_init__(self):
        if self.anf.n != self.m:
            raise ValueError(f"ANF has {self.anf.n} variables, expected {self.m}")

    @classmethod
    def zero(cls, m: int) -> Gamma:
        return cls(m, Anf(m, frozenset()))

    @property
    def degree(self) -> int:
        return self.anf.degree

    @property
    def is_rotation_symmetric(self) -> bool:
        monos = self.anf.monomials
        return all(rotate_mask(mono, self.m) in monos for mono in monos)

    def truth_table(self) -> BooleanFunction:
        return tt_from_anf(self.anf)

    def to_text(self) -> str:
        return self.anf.to_text(var="X")

    def __str__(self) -> str:
        return self.to_text()


def parse_gamma(text: str, m: int) -> Gamma:
    return Gamma(m, parse_anf(text, m, var="X"))


def make_rotation_symmetric_gamma(m: int, generators) -> Gamma:
    """Sum of the orbits of ``generators``, each orbit counted once."""
    monos: set[int] = set()
    for g in generators:
        monos |= orbit_of(int(g), m).members
    return Gamma(m, Anf(m, frozenset(monos)))


def random_rs_gamma(m: int, rng: np.random.Generator, min_degree: int = 0) -> Gamma:
    """Random rotation-symmetric gamma built from a random set of orbits.

    With ``min_degree`` set, at least one orbit of weight >= ``min_degree``
    is included so that the result has that degree or more.
    """
    reps = orbit_representative_masks(m)
    chosen = reps[rng.random(reps.size) < 0.5]
    if min_degree:
        heavy = reps[np.bitwise_count(reps.astype(np.uint64)) >= min_degree]
        if heavy.size == 0:
            raise ValueError(f"no orbit of weight >= {min_degree} for m={m}")
        chosen = np.append(chosen, rng.choice(heavy))
    return make_rotation_symmetric_gamma(m, chosen.tolist())


def compose_pair_sums(gamma: Gamma) -> BooleanFunction:
    """``gamma(x_0 + x_m, ..., x_{m-1} + x_{2m-1})`` on ``2m`` variables."""
    m = gamma.m
    u = np.arange(1 << (2 * m), dtype=np.int64)
    sums = (u ^ (u >> m)) & ((1 << m) - 1)
    return BooleanFunction.from_bits(2 * m, gamma.truth_table().bits[sums])


class GammaConditionError(ValueError):
    """The input violates one of the three extraction conditions.

    ``condition`` is 1 (swap invariance), 2 (no ``x_i x_{i+m}`` factor) or
    3 (rotation symmetry).
    """

    def __init__(self, condition: int, message: str):
        super().__init__(f"condition ({condition}) violated: {message}")
        self.condition = condition


def gamma_extract(g: BooleanFunction) -> Gamma:
    """Find rotation-symmetric ``gamma`` with ``g = gamma(x_0+x_m, ...)``.

    ``g`` must be invariant under each swap ``x_i <-> x_{i+m}``, contain no
    monomial divisible by ``x_i x_{i+m}``, and be rotation symmetric.
    Those conditions make ``g`` a function of the pair sums alone, so
    ``gamma`` is read off the inputs with ``x_m = ... = x_{2m-1} = 0``.
    """
    if g.n % 2:
        raise ValueError(f"need an even number of variables, got {g.n}")
    m = g.n // 2
    u = np.arange(1 << g.n, dtype=np.int64)
    bits = g.bits
    for i in range(m):
        diff = ((u >> i) ^ (u >> (i + m))) & 1
        swapped = u ^ (diff * ((1 << i) | (1 << (i + m))))
        if not np.array_equal(bits[swapped], bits):
            raise GammaConditionError(1, f"not invariant under x{i} <-> x{i + m}")
    low = (1 << m) - 1
    support = np.flatnonzero(mobius(bits, g.n))
    clash = support[(support & low) & (support >> m) != 0]
    if clash.size:
        mono = int(clash[0])
        i = ((mono & low) & (mono >> m)).bit_length() - 1
        raise GammaConditionError(2, f"a monomial contains both x{i} and x{i + m}")
    if not is_rotation_symmetric(g):
        raise GammaConditionError(3, "not rotation symmetric")
    base = BooleanFunction.from_bits(m, bits[: 1 << m])
    return Gamma(m, anf_from_tt(base))
