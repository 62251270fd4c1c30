import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rsbent.gf2poly import Gf2Poly, poly_add, poly_gcd, poly_mod, poly_mul

P = Gf2Poly.parse
polys = st.integers(0, (1 << 65) - 1).map(Gf2Poly)
nonzero = st.integers(1, (1 << 65) - 1).map(Gf2Poly)


def test_add():
    assert poly_add(P("X+1"), P("X+1")) == Gf2Poly(0)
    assert poly_add(P("X^2+1"), P("X")) == P("X^2+X+1")
    p = P("X^5+X^2+1")
    assert poly_add(p, Gf2Poly(0)) == p


def test_mod():
    assert poly_mod(P("X^3"), P("X+1")) == P("1")
    assert poly_mod(P("X^4+1"), P("X+1")) == Gf2Poly(0)
    assert poly_mod(P("X^2"), P("X^3+1")) == P("X^2")


def test_mod_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_mod(P("X"), Gf2Poly(0))


def test_gcd_examples():
    assert poly_gcd(P("X^2+1"), P("X+1")) == P("X+1")
    assert poly_gcd(P("X+X^3"), P("X^4+1")) == P("X^2+1")
    for n in range(1, 12):
        for m in range(1, 12):
            assert poly_gcd(Gf2Poly(1 << m), Gf2Poly(1 << n | 1)) == P("1")


def test_gcd_with_zero():
    p = P("X^3+X+1")
    assert poly_gcd(p, Gf2Poly(0)) == p
    assert poly_gcd(Gf2Poly(0), p) == p
    with pytest.raises(ValueError):
        poly_gcd(Gf2Poly(0), Gf2Poly(0))


def test_text():
    assert str(P("X^3+X+1")) == "X^3+X+1"
    assert str(Gf2Poly(0)) == "0"
    assert P("1 + X").value == 0b11
    assert Gf2Poly(0).degree == -1
    with pytest.raises(ValueError):
        P("Y^2")


@settings(max_examples=500, deadline=None)
@given(nonzero, nonzero)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert poly_mod(a, g) == Gf2Poly(0)
    assert poly_mod(b, g) == Gf2Poly(0)
    assert poly_gcd(b, a) == g
    assert g == poly_gcd(b, poly_mod(a, b))


@settings(max_examples=200, deadline=None)
@given(polys, nonzero)
def test_division_identity(a, b):
    r = poly_mod(a, b)
    assert r.degree < b.degree
    # a - r is a multiple of b: reduce (a + r) and expect zero
    assert poly_mod(poly_add(a, r), b) == Gf2Poly(0)


@settings(max_examples=100, deadline=None)
@given(nonzero, nonzero, nonzero)
def test_common_factor_survives(a, b, c):
    g = poly_gcd(poly_mul(a, c), poly_mul(b, c))
    assert poly_mod(g, c) == Gf2Poly(0)
