"""Rotation-symmetric bent functions: constructions and exact verification."""

from .boolfn import (
    Anf,
    BooleanFunction,
    anf_from_tt,
    apply_affine_substitution,
    degree,
    evaluate,
    is_rotation_symmetric,
    parse_anf,
    rotate,
    tt_from_anf,
)
from .constructions import (
    HypothesisError,
    MmSpec,
    QuadraticSpec,
    Theorem2Params,
    construct_carlet_cubic,
    construct_mm,
    construct_quadratic_rs,
    construct_su_tang,
    construct_theorem1,
    construct_theorem2,
    is_pi_permutation,
    pi_map,
    quadratic_rs_bent_by_gcd,
    verify_lemma2_identity,
)
from .gf2poly import Gf2Poly, poly_add, poly_gcd, poly_mod
from .rotsym import (
    Gamma,
    GammaConditionError,
    Orbit,
    compose_pair_sums,
    gamma_extract,
    make_rotation_symmetric_gamma,
    orbit_of,
    orbit_representatives,
    parse_gamma,
)
from .spectral import NotBentError, SpectralCapError, WalshSpectrum, dual, is_bent, nonlinearity, walsh_spectrum

__version__ = "0.1.0"
