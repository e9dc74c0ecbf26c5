"""Line bundles on analytic orbi-curves.

Every orbifold line bundle on an orbi-curve with cone points ``x_i`` of order
``m_i`` decomposes uniquely as the pull-back of a line bundle ``L`` on the
coarse Riemann surface twisted by ``O(sum a_i x_i)`` with ``0 <= a_i < m_i``.
An :class:`OrbiLineBundle` stores exactly that data: ``deg L`` and the
residues ``a_i``.  Its orbifold degree is ``deg L + sum a_i/m_i``.

Real orbi-curves are handled through their complex double cover.  A cone
point of the real curve is a pair of swapped cone points upstairs and a
dihedral point is a single fixed cone point, so every real-curve formula is
the complex one with cone points weighted by 2 and dihedral points by 1.  A
bundle on a :class:`RealOrbiCurve` carries one residue per cone pair followed
by one per dihedral point, and its ``coarse_degree`` is the coarse degree of
the bundle on the double cover.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .exceptions import BundleMismatchError, DomainError, SignatureError
from .signatures import (OrbifoldSignature, coarse_euler_characteristic,
                         orbifold_euler_characteristic)

__all__ = [
    "OrbiCurve",
    "RealOrbiCurve",
    "OrbiLineBundle",
    "check_aligned",
    "trivial_bundle",
    "canonical_bundle",
    "age",
    "degree",
    "tensor",
    "dual",
    "power",
    "canonical_power",
]


def _sorted_orders(orders, field):
    orders = tuple(sorted(int(m) for m in orders))
    if any(m < 2 for m in orders):
        raise SignatureError(f"{field}: orders must be >= 2", field)
    return orders


def _check_genus(genus):
    if isinstance(genus, bool) or not isinstance(genus, int) or genus < 0:
        raise SignatureError("genus must be a non-negative integer", "genus")


@dataclass(frozen=True)
class OrbiCurve:
    """Compact complex orbi-curve: coarse genus and cone orders."""

    genus: int
    cone_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_genus(self.genus)
        object.__setattr__(self, "cone_orders", _sorted_orders(self.cone_orders, "cone_orders"))

    @classmethod
    def from_signature(cls, sig: OrbifoldSignature) -> "OrbiCurve":
        if not sig.is_closed_orientable:
            raise DomainError(f"{sig} is not a closed orientable orbifold")
        return cls(sig.genus, sig.cone_orders)

    def signature(self) -> OrbifoldSignature:
        return OrbifoldSignature(True, self.genus, 0, self.cone_orders)

    @property
    def orders(self) -> Tuple[int, ...]:
        return self.cone_orders

    @property
    def weights(self) -> Tuple[int, ...]:
        return (1,) * len(self.cone_orders)

    def euler_characteristic(self) -> Fraction:
        return orbifold_euler_characteristic(self.signature())


@dataclass(frozen=True)
class RealOrbiCurve:
    """Orbi-curve defined over the reals, described through its double cover.

    ``double_cover_genus`` is the genus of the coarse surface of the complex
    double cover; ``cone_orders`` lists one order per swapped pair and
    ``dihedral_orders`` the orders of the fixed points.
    """

    double_cover_genus: int
    cone_orders: Tuple[int, ...] = ()
    dihedral_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_genus(self.double_cover_genus)
        object.__setattr__(self, "cone_orders", _sorted_orders(self.cone_orders, "cone_orders"))
        object.__setattr__(self, "dihedral_orders",
                           _sorted_orders(self.dihedral_orders, "dihedral_orders"))

    @classmethod
    def from_signature(cls, sig: OrbifoldSignature) -> "RealOrbiCurve":
        """Real curve of a non-orientable or mirrored signature.

        The double cover's coarse surface has Euler characteristic
        ``2 chi(X)``, hence genus ``1 - chi(X)``.
        """
        if sig.is_closed_orientable:
            raise DomainError(f"{sig} has no real structure: it is closed and orientable")
        return cls(1 - coarse_euler_characteristic(sig), sig.cone_orders, sig.corner_orders)

    @property
    def genus(self) -> int:
        return self.double_cover_genus

    @property
    def orders(self) -> Tuple[int, ...]:
        return self.cone_orders + self.dihedral_orders

    @property
    def weights(self) -> Tuple[int, ...]:
        return (2,) * len(self.cone_orders) + (1,) * len(self.dihedral_orders)

    def double_cover(self) -> OrbiCurve:
        return OrbiCurve(self.double_cover_genus,
                         self.cone_orders * 2 + self.dihedral_orders)

    def euler_characteristic(self) -> Fraction:
        """Orbifold Euler characteristic of the real curve (half that of the cover)."""
        return self.double_cover().euler_characteristic() / 2


Curve = Union[OrbiCurve, RealOrbiCurve]


@dataclass(frozen=True)
class OrbiLineBundle:
    coarse_degree: int
    isotropies: Tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.coarse_degree, bool) or not isinstance(self.coarse_degree, int):
            raise BundleMismatchError("coarse_degree must be an integer")
        object.__setattr__(self, "isotropies", tuple(int(a) for a in self.isotropies))

    def to_json(self) -> dict:
        return {"coarse_degree": self.coarse_degree, "isotropies": list(self.isotropies)}

    @classmethod
    def from_json(cls, data: dict) -> "OrbiLineBundle":
        try:
            return cls(data["coarse_degree"], tuple(data.get("isotropies", ())))
        except (KeyError, TypeError) as exc:
            raise BundleMismatchError(f"malformed bundle data: {exc}") from None


def check_aligned(L: OrbiLineBundle, curve: Curve) -> None:
    orders = curve.orders
    if len(L.isotropies) != len(orders):
        raise BundleMismatchError(
            f"bundle has {len(L.isotropies)} isotropies but the curve has "
            f"{len(orders)} orbifold points")
    for a, m in zip(L.isotropies, orders):
        if not 0 <= a < m:
            raise BundleMismatchError(f"isotropy {a} out of range for a point of order {m}")


def trivial_bundle(curve: Curve) -> OrbiLineBundle:
    return OrbiLineBundle(0, (0,) * len(curve.orders))


def canonical_bundle(curve: Curve) -> OrbiLineBundle:
    return canonical_power(curve, 1)


def age(L: OrbiLineBundle, curve: Curve, i: int) -> Fraction:
    """Age ``a_i / m_i`` of ``L`` at the ``i``-th orbifold point of ``curve``."""
    check_aligned(L, curve)
    if not 0 <= i < len(curve.orders):
        raise IndexError(f"point index {i} out of range")
    return Fraction(L.isotropies[i], curve.orders[i])


def degree(L: OrbiLineBundle, curve: Curve) -> Fraction:
    """Orbifold degree ``deg L + sum a_i/m_i``.

    On a real curve this is the degree of the bundle on the double cover.
    """
    check_aligned(L, curve)
    return L.coarse_degree + sum(
        (Fraction(w * a, m) for a, m, w in zip(L.isotropies, curve.orders, curve.weights)),
        Fraction(0))


def tensor(L1: OrbiLineBundle, L2: OrbiLineBundle, curve: Curve) -> OrbiLineBundle:
    """Tensor product, renormalized so residues stay in ``[0, m)``.

    Each residue overflow is a unit of the coarse degree.
    """
    check_aligned(L1, curve)
    check_aligned(L2, curve)
    coarse = L1.coarse_degree + L2.coarse_degree
    residues = []
    for a, b, m, w in zip(L1.isotropies, L2.isotropies, curve.orders, curve.weights):
        carry, r = divmod(a + b, m)
        coarse += w * carry
        residues.append(r)
    return OrbiLineBundle(coarse, tuple(residues))


def dual(L: OrbiLineBundle, curve: Curve) -> OrbiLineBundle:
    check_aligned(L, curve)
    coarse = -L.coarse_degree - sum(w for a, w in zip(L.isotropies, curve.weights) if a)
    residues = tuple((m - a) % m for a, m in zip(L.isotropies, curve.orders))
    return OrbiLineBundle(coarse, residues)


def power(L: OrbiLineBundle, curve: Curve, d: int) -> OrbiLineBundle:
    """``d``-fold tensor power; negative ``d`` goes through the dual."""
    if d < 0:
        return power(dual(L, curve), curve, -d)
    result = trivial_bundle(curve)
    for _ in range(d):
        result = tensor(result, L, curve)
    return result


def canonical_power(curve: Curve, d: int) -> OrbiLineBundle:
    """Normalized decomposition of ``K^d``.

    Coarse part ``K_X^d (sum floor(d(m_i - 1)/m_i) x_i)``, residue
    ``d(m_i - 1) mod m_i`` at each point.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise DomainError(f"canonical power needs an integer d >= 0, got {d!r}")
    coarse = d * (2 * curve.genus - 2)
    residues = []
    for m, w in zip(curve.orders, curve.weights):
        carry, r = divmod(d * (m - 1), m)
        coarse += w * carry
        residues.append(r)
    return OrbiLineBundle(coarse, tuple(residues))
