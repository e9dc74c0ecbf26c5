"""Orbifold Riemann-Roch on complex and real orbi-curves.

``euler_char_sheaf`` is Kawasaki's formula

    chi(X; L) = chi(X; O) + deg L - sum_i age_i(L),     chi(X; O) = 1 - g,

and ``coarse_rr_oracle`` is classical Riemann-Roch applied to the coarse
line bundle of the normalized decomposition; the two must always agree.

For a real curve the genus ``g`` is that of the double cover's coarse
surface, the degree is taken on the double cover, and each cone pair counts
its age twice.  With this reading ``chi(K^2) = 3(g - 1) + 2k + l`` equals the
Teichmüller dimension ``-3 chi(X) + 2k + l``.
"""
from __future__ import annotations

from fractions import Fraction

from .exceptions import DomainError, NonIntegralError
from .picard import (Curve, OrbiCurve, OrbiLineBundle, RealOrbiCurve, check_aligned,
                     canonical_power, degree)

__all__ = [
    "euler_char_sheaf",
    "euler_char_sheaf_real",
    "coarse_rr_oracle",
    "h0_canonical_power",
    "hitchin_base_dimension",
]


def _kawasaki(curve: Curve, L: OrbiLineBundle) -> int:
    ages = sum((Fraction(w * a, m) for a, m, w in zip(L.isotropies, curve.orders, curve.weights)),
               Fraction(0))
    value = (1 - curve.genus) + degree(L, curve) - ages
    if value.denominator != 1:
        raise NonIntegralError(f"Riemann-Roch produced the non-integer {value}")
    return value.numerator


def euler_char_sheaf(curve: OrbiCurve, L: OrbiLineBundle) -> int:
    """``h^0 - h^1`` of ``L`` on a complex orbi-curve."""
    if not isinstance(curve, OrbiCurve):
        raise TypeError("euler_char_sheaf expects an OrbiCurve; use euler_char_sheaf_real")
    return _kawasaki(curve, L)


def euler_char_sheaf_real(curve: RealOrbiCurve, L: OrbiLineBundle) -> int:
    """Real dimension ``h^0 - h^1`` of ``L`` on a real orbi-curve."""
    if not isinstance(curve, RealOrbiCurve):
        raise TypeError("euler_char_sheaf_real expects a RealOrbiCurve")
    return _kawasaki(curve, L)


def coarse_rr_oracle(curve: Curve, L: OrbiLineBundle) -> int:
    """Classical Riemann-Roch ``deg L + 1 - g`` on the coarse bundle."""
    check_aligned(L, curve)
    return L.coarse_degree + 1 - curve.genus


def _require_hyperbolic(curve: Curve) -> None:
    if curve.euler_characteristic() >= 0:
        raise DomainError(f"{curve} is not hyperbolic")


def h0_canonical_power(curve: Curve, d: int) -> int:
    """Dimension of the space of degree-``d`` differentials, ``d >= 2``.

    ``H^1(K^d)`` vanishes since ``deg K^d > deg K`` on a hyperbolic curve, so
    ``h^0`` is the Riemann-Roch Euler characteristic.  Complex dimension on an
    :class:`OrbiCurve`, real dimension on a :class:`RealOrbiCurve`.
    """
    _require_hyperbolic(curve)
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise DomainError(f"h0_canonical_power needs d >= 2, got {d!r}")
    return _kawasaki(curve, canonical_power(curve, d))


def hitchin_base_dimension(curve: Curve, n: int) -> int:
    """Dimension of ``sum_{d=2..n} H^0(K^d)``.

    Complex dimension for an :class:`OrbiCurve` (the real Hitchin component
    has twice this), real dimension for a :class:`RealOrbiCurve`.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"rank n must be an integer >= 2, got {n!r}")
    return sum(h0_canonical_power(curve, d) for d in range(2, n + 1))
