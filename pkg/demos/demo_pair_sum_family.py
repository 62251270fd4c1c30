"""
Bent functions from pair sums
=============================

Any polynomial ``gamma`` in ``m`` variables, evaluated on the pair sums
``x_i + x_{i+m}`` and added to ``sum x_i x_{i+m}``, gives a bent function
on ``n = 2m`` variables.
"""

import numpy as np

from rsbent import (
    construct_theorem1,
    degree,
    dual,
    is_bent,
    is_rotation_symmetric,
    make_rotation_symmetric_gamma,
    parse_gamma,
    walsh_spectrum,
)

##############################################################################
# The full product
# ----------------
#
# With ``gamma = X0*X1*...*X5`` we get a 12-variable function whose degree
# is the largest a bent function on 12 variables can have.

gamma = make_rotation_symmetric_gamma(6, [0b111111])
f = construct_theorem1(6, gamma)
spec = walsh_spectrum(f)
print("gamma            :", gamma)
print("distinct |W_f(b)|:", sorted(set(np.abs(spec.values).tolist())))
print("bent, rotsym, deg:", is_bent(f), is_rotation_symmetric(f), degree(f))

##############################################################################
# The dual of a rotation-symmetric bent function is again rotation symmetric.

g = dual(f)
print("dual bent/rotsym :", is_bent(g), is_rotation_symmetric(g))

##############################################################################
# Degree follows gamma
# --------------------
#
# The degree of ``f`` is ``max(2, deg gamma)``.

for text in ["0", "X0+X1+X2+X3+X4", "X0*X1+X1*X2+X2*X3+X3*X4+X0*X4",
             "X0*X1*X2*X3+X1*X2*X3*X4+X0*X2*X3*X4+X0*X1*X3*X4+X0*X1*X2*X4"]:
    gamma = parse_gamma(text, 5)
    f = construct_theorem1(5, gamma)
    print(f"deg gamma = {gamma.degree}  ->  deg f = {degree(f)}, bent = {is_bent(f)}")

##############################################################################
# Rotation symmetry of ``f`` needs a rotation-symmetric ``gamma``; bentness
# does not.

f = construct_theorem1(4, parse_gamma("X0*X1*X3", 4))
print("asymmetric gamma: bent =", is_bent(f), " rotsym =", is_rotation_symmetric(f))
