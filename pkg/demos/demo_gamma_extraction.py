"""
Recovering gamma
================

A rotation-symmetric function that is invariant under every swap
``x_i <-> x_{i+m}`` and has no monomial containing both ``x_i`` and
``x_{i+m}`` is a polynomial in the pair sums.  ``gamma_extract`` recovers
that polynomial.  Su-Tang functions with the pair products removed have
this shape, so they belong to the pair-sum family.
"""

from rsbent import (
    BooleanFunction,
    GammaConditionError,
    anf_from_tt,
    compose_pair_sums,
    construct_su_tang,
    gamma_extract,
    orbit_representatives,
)
from rsbent.constructions import pair_product_sum

m = 4
for orbit in orbit_representatives(m):
    f = construct_su_tang(m, [orbit.representative])
    g = f ^ pair_product_sum(m)
    gamma = gamma_extract(g)
    ok = compose_pair_sums(gamma) == g
    print(f"orbit {orbit.representative:04b} (size {orbit.size}): gamma = {gamma}  recomposes: {ok}")

##############################################################################
# Each violated condition is reported separately.

for g in [BooleanFunction.variable(4, 0), pair_product_sum(2), BooleanFunction.variable(4, 0) ^ BooleanFunction.variable(4, 2)]:
    try:
        gamma_extract(g)
    except GammaConditionError as exc:
        print(f"{anf_from_tt(g)!s:<12} -> {exc}")
