"""
The cubic family and its permutation
====================================

``f_t = sum_i (x_i x_{i+t} x_{i+m} + x_i x_{i+t}) + sum_{i<m} x_i x_{i+m}``
plus ``gamma`` of the pair sums is bent whenever ``m / gcd(m, t)`` is odd.
Bentness comes from the map
``pi_i(a) = a_i a_{i+t} + a_{i+t} + a_{i+m-t}`` being a permutation.
"""

from math import gcd

from rsbent import (
    HypothesisError,
    Theorem2Params,
    construct_theorem2,
    degree,
    is_bent,
    is_pi_permutation,
    is_rotation_symmetric,
    make_rotation_symmetric_gamma,
)

##############################################################################
# When is ``pi`` a permutation?
# -----------------------------
#
# Brute force over every ``a`` in ``F_2^m``.  An odd ratio always gives a
# permutation; an even ratio may fail.

for m in range(2, 9):
    row = []
    for t in range(1, m):
        odd = (m // gcd(m, t)) % 2 == 1
        row.append(f"t={t}:{'P' if is_pi_permutation(m, t) else '.'}{'*' if odd else ' '}")
    print(f"m={m}  " + "  ".join(row))
print("(P = permutation, * = m/gcd(m,t) odd)")

##############################################################################
# The ``gamma = 0`` member for ``m = 6, t = 2``
# ----------------------------------------------
#
# This one is bent and rotation symmetric.  Its ANF is cubic, so its degree
# is 3.

f = construct_theorem2(Theorem2Params(6, 2))
print("m=6 t=2 gamma=0: bent", is_bent(f), "rotsym", is_rotation_symmetric(f), "degree", degree(f))

##############################################################################
# Raising the degree with ``gamma``
# ---------------------------------

for weight in range(3, 7):
    gamma = make_rotation_symmetric_gamma(6, [(1 << weight) - 1])
    f = construct_theorem2(Theorem2Params(6, 2, gamma))
    print(f"gamma of degree {weight}: bent {is_bent(f)}, degree {degree(f)}")

##############################################################################
# Parameters outside the hypothesis are rejected.

try:
    Theorem2Params(4, 2)
except HypothesisError as exc:
    print("rejected:", exc)
