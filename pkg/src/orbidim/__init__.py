"""Exact invariants of closed hyperbolic 2-orbifolds.

Orbifold Euler characteristics, Teichmüller and Hitchin-component
dimensions, orbifold line bundles and Riemann-Roch, finite covers, and
triangle-group presentations, all in exact integer/rational arithmetic.
"""
from .exceptions import (BundleMismatchError, DomainError, InvalidActionError,
                         NonIntegralError, OrbidimError, SignatureError,
                         SignatureSyntaxError)
from .hitchin import (ExponentProfile, choi_goldman_dimension, exponent_profile,
                      hitchin_dimension_exponents, hitchin_dimension_pgl,
                      pgl4_dimension, r_value)
from .parsing import format_signature, parse_signature
from .signatures import (OrbifoldSignature, coarse_euler_characteristic,
                         is_hyperbolic, orbifold_euler_characteristic, sphere,
                         surface, teichmuller_dimension, triangle,
                         validate_signature)

__version__ = "0.1.0"

__all__ = [
    "BundleMismatchError", "DomainError", "InvalidActionError", "NonIntegralError",
    "OrbidimError", "SignatureError", "SignatureSyntaxError",
    "ExponentProfile", "choi_goldman_dimension", "exponent_profile",
    "hitchin_dimension_exponents", "hitchin_dimension_pgl", "pgl4_dimension", "r_value",
    "format_signature", "parse_signature",
    "OrbifoldSignature", "coarse_euler_characteristic", "is_hyperbolic",
    "orbifold_euler_characteristic", "sphere", "surface", "teichmuller_dimension",
    "triangle", "validate_signature",
]
