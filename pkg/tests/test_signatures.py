from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, strategies as st

from orbidim.exceptions import DomainError, SignatureError
from orbidim.signatures import (OrbifoldSignature, coarse_euler_characteristic,
                                is_hyperbolic, orbifold_euler_characteristic,
                                sphere, surface, teichmuller_dimension, triangle,
                                validate_signature)


def chi_by_common_denominator(sig):
    """Evaluate the Euler characteristic over one common denominator, integers only."""
    orders = sig.cone_orders + sig.corner_orders
    den = 2 * lcm(*orders) if orders else 2
    if sig.orientable:
        coarse = 2 - 2 * sig.genus - sig.mirror_circles
    else:
        coarse = 2 - sig.genus - sig.mirror_circles
    num = coarse * den
    num -= sum(den - den // m for m in sig.cone_orders)
    num -= sum((den - den // n) // 2 for n in sig.corner_orders)
    return Fraction(num, den)


orders = st.lists(st.integers(2, 30), max_size=6)


@st.composite
def signatures(draw):
    orientable = draw(st.booleans())
    genus = draw(st.integers(0 if orientable else 1, 4))
    mirrors = draw(st.integers(0, 3))
    corners = draw(orders) if mirrors else []
    return OrbifoldSignature(orientable, genus, mirrors, tuple(draw(orders)), tuple(corners))


class TestValidation:
    def test_sorted_canonical_form(self):
        sig = validate_signature({"orientable": True, "genus": 0, "cone_orders": [7, 3, 2]})
        assert sig.cone_orders == (2, 3, 7)

    def test_corners_need_mirror(self):
        with pytest.raises(SignatureError) as exc:
            validate_signature({"orientable": True, "genus": 0, "mirror_circles": 0,
                                "corner_orders": [2, 3, 7]})
        assert exc.value.field == "corner_orders"

    def test_projective_plane_with_cone(self):
        sig = validate_signature({"orientable": False, "genus": 1, "cone_orders": [3]})
        assert sig == OrbifoldSignature(False, 1, 0, (3,))

    @pytest.mark.parametrize("raw, field", [
        ({"orientable": True, "genus": 0, "cone_orders": [1, 3]}, "cone_orders"),
        ({"orientable": True, "genus": 0, "mirror_circles": 1, "corner_orders": [0]}, "corner_orders"),
        ({"orientable": False, "genus": 0}, "genus"),
        ({"orientable": True, "genus": -1}, "genus"),
        ({"orientable": True, "genus": 0, "mirror_circles": -2}, "mirror_circles"),
    ])
    def test_invalid(self, raw, field):
        with pytest.raises(SignatureError) as exc:
            validate_signature(raw)
        assert exc.value.field == field

    def test_missing_and_unknown_fields(self):
        with pytest.raises(SignatureError):
            validate_signature({"genus": 0})
        with pytest.raises(SignatureError):
            validate_signature({"orientable": True, "genus": 0, "boundary": 1})

    @given(signatures())
    def test_idempotent(self, sig):
        assert validate_signature(validate_signature(sig)) == validate_signature(sig)


class TestEulerCharacteristic:
    @pytest.mark.parametrize("sig, expected", [
        (surface(2), -2),
        (OrbifoldSignature(True, 0, 1), 1),
        (surface(1, orientable=False), 1),
    ])
    def test_coarse(self, sig, expected):
        assert coarse_euler_characteristic(sig) == expected

    def test_sphere_237(self):
        assert orbifold_euler_characteristic(sphere(2, 3, 7)) == Fraction(-1, 42)

    def test_triangle_237_is_klein_quartic_quotient(self):
        chi = orbifold_euler_characteristic(triangle(2, 3, 7))
        assert chi == Fraction(-1, 84)
        assert chi == Fraction(orbifold_euler_characteristic(surface(3)), 336)

    def test_closed_surface(self):
        assert orbifold_euler_characteristic(surface(2)) == -2

    @given(signatures())
    def test_matches_common_denominator(self, sig):
        chi = orbifold_euler_characteristic(sig)
        assert chi == chi_by_common_denominator(sig)
        orders = sig.cone_orders + sig.corner_orders
        assert (2 * (lcm(*orders) if orders else 1)) % chi.denominator == 0

    @given(st.booleans(), st.integers(0, 5), st.integers(0, 3))
    def test_no_singular_points_gives_integer(self, orientable, genus, mirrors):
        sig = OrbifoldSignature(orientable, genus + (0 if orientable else 1), mirrors)
        assert orbifold_euler_characteristic(sig) == coarse_euler_characteristic(sig)


class TestHyperbolicity:
    def test_examples(self):
        assert is_hyperbolic(sphere(2, 3, 7))
        assert not is_hyperbolic(sphere(2, 3, 6))

    @pytest.mark.parametrize("m", range(2, 20))
    def test_torus_with_one_cone(self, m):
        assert is_hyperbolic(OrbifoldSignature(True, 1, 0, (m,)))

    def test_bad_orbifolds_are_not_hyperbolic(self):
        # teardrop and spindles
        assert not is_hyperbolic(sphere(5))
        assert not is_hyperbolic(sphere(3, 5))


class TestTeichmuller:
    def test_sphere_three_cones_is_a_point(self):
        assert teichmuller_dimension(sphere(2, 3, 7)) == 0

    @pytest.mark.parametrize("pqr", [(2, 3, 7), (3, 3, 4), (2, 4, 5), (5, 5, 5), (2, 3, 100)])
    def test_triangle_is_a_point(self, pqr):
        assert teichmuller_dimension(triangle(*pqr)) == 0

    def test_genus_two(self):
        assert teichmuller_dimension(surface(2)) == 6

    def test_non_hyperbolic_rejected(self):
        with pytest.raises(DomainError):
            teichmuller_dimension(sphere(2, 3, 6))
