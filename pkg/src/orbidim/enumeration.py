"""Deterministic enumeration of signatures and of rigid orbifolds.

Signatures are produced in a fixed order: orientable before non-orientable,
then by genus, number of mirror circles, number of cone points, number of
corners, and finally lexicographically by the sorted cone and corner orders.
Each canonical signature appears exactly once.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, List

from .exceptions import DomainError
from .hitchin import hitchin_dimension_pgl
from .signatures import OrbifoldSignature, is_hyperbolic

__all__ = ["Bounds", "enumerate_signatures", "enumerate_rigid"]


@dataclass(frozen=True)
class Bounds:
    """Box of signatures to enumerate.

    ``max_points`` bounds the number of cone points; corners are bounded
    separately by ``max_corners`` and only occur with at least one mirror
    circle.  ``min_*`` fields restrict to a sub-box (e.g. exactly three cone
    points).
    """

    max_genus: int = 0
    max_points: int = 0
    max_order: int = 2
    max_corners: int = 0
    max_mirrors: int = 0
    orientable_only: bool = False
    min_genus: int = 0
    min_points: int = 0
    min_corners: int = 0
    min_mirrors: int = 0

    def __post_init__(self):
        for name in ("max_genus", "max_points", "max_order", "max_corners", "max_mirrors",
                     "min_genus", "min_points", "min_corners", "min_mirrors"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise DomainError(f"bound {name} must be a non-negative integer, got {value!r}")


def _multisets(size, max_order):
    return combinations_with_replacement(range(2, max_order + 1), size)


def enumerate_signatures(bounds: Bounds, hyperbolic_only: bool = False) -> Iterator[OrbifoldSignature]:
    """Yield every valid canonical signature inside ``bounds``."""
    b = bounds
    for orientable in ((True,) if b.orientable_only else (True, False)):
        for genus in range(max(b.min_genus, 0 if orientable else 1), b.max_genus + 1):
            for mirrors in range(b.min_mirrors, b.max_mirrors + 1):
                max_corners = b.max_corners if mirrors else 0
                for k in range(b.min_points, b.max_points + 1):
                    for l in range(b.min_corners, max_corners + 1):  # noqa: E741
                        for cones in _multisets(k, b.max_order):
                            for corners in _multisets(l, b.max_order):
                                sig = OrbifoldSignature(orientable, genus, mirrors, cones, corners)
                                if hyperbolic_only and not is_hyperbolic(sig):
                                    continue
                                yield sig


def enumerate_rigid(n: int, bounds: Bounds) -> List[OrbifoldSignature]:
    """Hyperbolic signatures in ``bounds`` whose ``PGL(n, R)`` Hitchin component is a point."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"rank n must be an integer >= 2, got {n!r}")
    return [sig for sig in enumerate_signatures(bounds, hyperbolic_only=True)
            if hitchin_dimension_pgl(sig, n) == 0]
