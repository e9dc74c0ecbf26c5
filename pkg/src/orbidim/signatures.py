"""Closed 2-orbifold signatures and their Euler characteristics.

A signature records the coarse surface (orientability, genus, number of
mirror boundary circles) together with the orders of its cone points and of
its corner reflectors.  Orders are kept sorted, which is the canonical form.

Example::

    >>> sig = OrbifoldSignature(True, 0, cone_orders=(7, 3, 2))
    >>> sig.cone_orders
    (2, 3, 7)
    >>> orbifold_euler_characteristic(sig)
    Fraction(-1, 42)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .exceptions import DomainError, SignatureError

__all__ = [
    "OrbifoldSignature",
    "validate_signature",
    "coarse_euler_characteristic",
    "orbifold_euler_characteristic",
    "cone_defect",
    "corner_defect",
    "is_hyperbolic",
    "teichmuller_dimension",
    "require_hyperbolic",
    "sphere",
    "triangle",
    "surface",
]


def _orders(values: Iterable[int], field: str) -> Tuple[int, ...]:
    out = []
    for m in values:
        if isinstance(m, bool) or int(m) != m:
            raise SignatureError(f"{field}: order {m!r} is not an integer", field)
        m = int(m)
        if m < 2:
            raise SignatureError(f"{field}: order {m} is smaller than 2", field)
        out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class OrbifoldSignature:
    """Combinatorial data of a closed 2-orbifold.

    ``genus`` is the orientable genus when ``orientable`` is true and the
    number of cross-caps otherwise.  Which mirror circle carries which corner
    reflector is not recorded: none of the invariants computed here depend on
    it.
    """

    orientable: bool
    genus: int
    mirror_circles: int = 0
    cone_orders: Tuple[int, ...] = ()
    corner_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.orientable, bool):
            raise SignatureError("orientable must be a boolean", "orientable")
        for name in ("genus", "mirror_circles"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise SignatureError(f"{name} must be a non-negative integer", name)
        if not self.orientable and self.genus < 1:
            raise SignatureError(
                "a non-orientable surface needs at least one cross-cap", "genus")
        cones = _orders(self.cone_orders, "cone_orders")
        corners = _orders(self.corner_orders, "corner_orders")
        if corners and self.mirror_circles == 0:
            raise SignatureError(
                "corner reflectors require at least one mirror circle", "corner_orders")
        object.__setattr__(self, "cone_orders", cones)
        object.__setattr__(self, "corner_orders", corners)

    @property
    def k(self) -> int:
        """Number of cone points."""
        return len(self.cone_orders)

    @property
    def l(self) -> int:  # noqa: E743
        """Number of corner reflectors."""
        return len(self.corner_orders)

    @property
    def is_closed_orientable(self) -> bool:
        return self.orientable and self.mirror_circles == 0 and not self.corner_orders

    def __str__(self):
        from .parsing import format_signature

        return format_signature(self)


SignatureLike = Union[OrbifoldSignature, Mapping]


def validate_signature(raw: SignatureLike) -> OrbifoldSignature:
    """Return the canonical signature for ``raw``.

    ``raw`` is either an :class:`OrbifoldSignature` or a mapping with the
    same field names.  Raises :class:`SignatureError` on any invariant
    violation.
    """
    if isinstance(raw, OrbifoldSignature):
        return OrbifoldSignature(raw.orientable, raw.genus, raw.mirror_circles,
                                 raw.cone_orders, raw.corner_orders)
    if not isinstance(raw, Mapping):
        raise SignatureError(f"cannot build a signature from {type(raw).__name__}")
    unknown = set(raw) - {"orientable", "genus", "mirror_circles",
                          "cone_orders", "corner_orders"}
    if unknown:
        raise SignatureError("unknown signature fields: " + ", ".join(sorted(unknown)))
    try:
        return OrbifoldSignature(
            orientable=raw["orientable"],
            genus=raw["genus"],
            mirror_circles=raw.get("mirror_circles", 0),
            cone_orders=tuple(raw.get("cone_orders", ())),
            corner_orders=tuple(raw.get("corner_orders", ())),
        )
    except KeyError as exc:
        raise SignatureError(f"missing signature field {exc.args[0]!r}") from None


def sphere(*cone_orders: int) -> OrbifoldSignature:
    return OrbifoldSignature(True, 0, 0, cone_orders)


def triangle(*corner_orders: int) -> OrbifoldSignature:
    """Disk whose boundary is one mirror circle carrying the given corners."""
    return OrbifoldSignature(True, 0, 1, (), corner_orders)


def surface(genus: int, orientable: bool = True) -> OrbifoldSignature:
    return OrbifoldSignature(orientable, genus)


def coarse_euler_characteristic(sig: OrbifoldSignature) -> int:
    """Euler characteristic of the underlying surface, mirror circles counted as boundary."""
    if sig.orientable:
        return 2 - 2 * sig.genus - sig.mirror_circles
    return 2 - sig.genus - sig.mirror_circles


def cone_defect(orders: Iterable[int]) -> Fraction:
    """Sum of ``1 - 1/m`` over cone orders."""
    return sum((1 - Fraction(1, m) for m in orders), Fraction(0))


def corner_defect(orders: Iterable[int]) -> Fraction:
    """Half the sum of ``1 - 1/n`` over corner orders."""
    return cone_defect(orders) / 2


def orbifold_euler_characteristic(sig: OrbifoldSignature) -> Fraction:
    return (coarse_euler_characteristic(sig)
            - cone_defect(sig.cone_orders)
            - corner_defect(sig.corner_orders))


def is_hyperbolic(sig: OrbifoldSignature) -> bool:
    return orbifold_euler_characteristic(sig) < 0


def require_hyperbolic(sig: OrbifoldSignature) -> None:
    if not is_hyperbolic(sig):
        raise DomainError(
            f"orbifold {sig} is not hyperbolic "
            f"(Euler characteristic {orbifold_euler_characteristic(sig)})")


def teichmuller_dimension(sig: OrbifoldSignature) -> int:
    """Real dimension of the Teichmüller space, ``-3 chi(X) + 2k + l``."""
    require_hyperbolic(sig)
    return -3 * coarse_euler_characteristic(sig) + 2 * sig.k + sig.l
