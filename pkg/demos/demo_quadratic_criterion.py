"""
Quadratic rotation-symmetric bent functions
===========================================

A quadratic rotation-symmetric function with coefficients ``c_1..c_m`` is
bent exactly when ``sum c_i (X^i + X^{n-i}) + c_m X^m`` is coprime with
``X^n + 1`` over GF(2).  The gcd test and the Walsh spectrum agree on every
coefficient vector.
"""

from rsbent import QuadraticSpec, construct_quadratic_rs, is_bent, quadratic_rs_bent_by_gcd
from rsbent.constructions import quadratic_polynomial
from rsbent.gf2poly import Gf2Poly, poly_gcd

for m in range(2, 7):
    bent = agree = 0
    for v in range(1 << m):
        spec = QuadraticSpec(m, tuple(v >> i & 1 for i in range(m)))
        by_gcd = quadratic_rs_bent_by_gcd(spec)
        by_walsh = is_bent(construct_quadratic_rs(spec))
        bent += by_walsh
        agree += by_gcd == by_walsh
    print(f"m={m}: {bent:2d} of {1 << m:2d} bent, criteria agree on {agree}")

##############################################################################
# One failure spelled out: ``m = 2``, ``c = (1, 0)``.

spec = QuadraticSpec(2, (1, 0))
p = quadratic_polynomial(spec)
print("p =", p, "  gcd(p, X^4+1) =", poly_gcd(p, Gf2Poly.parse("X^4+1")))
