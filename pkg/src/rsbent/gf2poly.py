"""Dense polynomials over GF(2).

A polynomial is stored as a nonnegative integer whose bit ``i`` is the
coefficient of ``X^i``; the zero polynomial is ``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = ["Gf2Poly", "poly_add", "poly_gcd", "poly_mod", "poly_mul"]


@dataclass(frozen=True, order=False)
class Gf2Poly:
    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("coefficient bits must be a nonnegative integer")

    @classmethod
    def from_exponents(cls, exponents) -> Gf2Poly:
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def parse(cls, text: str) -> Gf2Poly:
        """Parse ``X^3+X+1`` style text; ``0`` is the zero polynomial."""
        text = "".join(text.split())
        if text == "0":
            return cls(0)
        exps = []
        for term in text.split("+"):
            if term == "1":
                exps.append(0)
            elif term == "X":
                exps.append(1)
            elif m := re.fullmatch(r"X\^(\d+)", term):
                exps.append(int(m.group(1)))
            else:
                raise ValueError(f"bad polynomial term {term!r}")
        return cls.from_exponents(exps)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return self.value.bit_length() - 1

    def coeffs(self) -> list[int]:
        return [self.value >> i & 1 for i in range(self.value.bit_length())]

    def __bool__(self) -> bool:
        return self.value != 0

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return poly_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        return poly_mul(self, other)

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return poly_mod(self, other)

    def __str__(self) -> str:
        if not self.value:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if self.value >> i & 1:
                terms.append("1" if i == 0 else "X" if i == 1 else f"X^{i}")
        return "+".join(terms)


def poly_add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(a.value ^ b.value)


def poly_mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    x, y, acc = a.value, b.value, 0
    while y:
        if y & 1:
            acc ^= x
        x <<= 1
        y >>= 1
    return Gf2Poly(acc)


def poly_mod(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Remainder of ``a`` divided by ``b``."""
    if not b.value:
        raise ZeroDivisionError("division by zero polynomial")
    r = a.value
    db = b.degree
    while r.bit_length() - 1 >= db:
        r ^= b.value << (r.bit_length() - 1 - db)
    return Gf2Poly(r)


def poly_gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Euclidean gcd; every nonzero polynomial over GF(2) is monic."""
    if not a.value and not b.value:
        raise ValueError("gcd(0, 0) is undefined")
    while b.value:
        a, b = b, poly_mod(a, b)
    return a
