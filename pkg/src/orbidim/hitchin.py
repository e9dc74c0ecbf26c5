"""Dimensions of Hitchin components of closed hyperbolic 2-orbifolds.

The general count for ``PGL(n, R)`` is

    dim Hit = -(n^2 - 1) chi(X) + sum_{d=2..n} (2 sum_i R(d, m_i) + sum_j R(d, n_j))

with ``R(d, m) = floor(d - d/m)``, where ``chi(X)`` is the Euler
characteristic of the coarse surface, ``m_i`` the cone orders and ``n_j`` the
corner orders.  Closed forms for ``n = 3`` and ``n = 4`` are provided
separately so that they can be checked against the general count.

For other split groups the same count is taken over the degrees ``e + 1`` of
the group's exponents ``e`` (see :class:`ExponentProfile`).  This is an
extrapolation of the ``PGL(n)`` pattern through the Hitchin base
``sum_d H^0(K^d)``, not a quoted formula.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from .exceptions import DomainError
from .signatures import (OrbifoldSignature, coarse_euler_characteristic,
                         require_hyperbolic)

__all__ = [
    "r_value",
    "singular_correction",
    "hitchin_dimension_pgl",
    "choi_goldman_dimension",
    "pgl4_dimension",
    "ExponentProfile",
    "exponent_profile",
    "hitchin_dimension_exponents",
]


def r_value(d: int, m: int) -> int:
    """``floor(d - d/m)``, the pole-order allowance of a degree-``d`` differential at an order-``m`` point."""
    if d < 2 or m < 2:
        raise DomainError(f"R(d, m) needs d >= 2 and m >= 2, got d={d}, m={m}")
    return d * (m - 1) // m


def singular_correction(orders: Iterable[int], degrees: Iterable[int]) -> int:
    """``sum_d sum_m R(d, m)`` over the given degrees and point orders.

    Additive in ``orders``: the correction of a union of multisets is the sum
    of the corrections.
    """
    orders = tuple(orders)
    return sum(r_value(d, m) for d in degrees for m in orders)


def _check_rank(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"rank n must be an integer >= 2, got {n!r}")


def _hitchin_count(sig: OrbifoldSignature, degrees: Tuple[int, ...], dim_g: int) -> int:
    require_hyperbolic(sig)
    return (-dim_g * coarse_euler_characteristic(sig)
            + 2 * singular_correction(sig.cone_orders, degrees)
            + singular_correction(sig.corner_orders, degrees))


def hitchin_dimension_pgl(sig: OrbifoldSignature, n: int) -> int:
    """Real dimension of the ``PGL(n, R)`` Hitchin component of ``sig``."""
    _check_rank(n)
    return _hitchin_count(sig, tuple(range(2, n + 1)), n * n - 1)


def _count_order(orders, m):
    return sum(1 for x in orders if x == m)


def choi_goldman_dimension(sig: OrbifoldSignature) -> int:
    """``PGL(3, R)`` closed form ``-8 chi(X) + (6k - 2k_2) + (3l - l_2)``."""
    require_hyperbolic(sig)
    k2 = _count_order(sig.cone_orders, 2)
    l2 = _count_order(sig.corner_orders, 2)
    return (-8 * coarse_euler_characteristic(sig)
            + (6 * sig.k - 2 * k2) + (3 * sig.l - l2))


def pgl4_dimension(sig: OrbifoldSignature) -> int:
    """``PGL(4, R)`` closed form ``-15 chi(X) + (12k - 4k_2 - 2k_3) + (6l - 2l_2 - l_3)``."""
    require_hyperbolic(sig)
    cones, corners = sig.cone_orders, sig.corner_orders
    k2, k3 = _count_order(cones, 2), _count_order(cones, 3)
    l2, l3 = _count_order(corners, 2), _count_order(corners, 3)
    return (-15 * coarse_euler_characteristic(sig)
            + (12 * sig.k - 4 * k2 - 2 * k3)
            + (6 * sig.l - 2 * l2 - l3))


@dataclass(frozen=True)
class ExponentProfile:
    """Exponents of a simple Lie algebra together with the group dimension.

    The differentials entering the Hitchin base have degrees ``e + 1``.
    """

    label: str
    exponents: Tuple[int, ...]
    group_dimension: int

    def __post_init__(self):
        exps = tuple(sorted(int(e) for e in self.exponents))
        if not exps:
            raise DomainError("an exponent profile needs at least one exponent")
        if exps[0] < 1:
            raise DomainError("exponents must be positive integers")
        expected = sum(2 * e + 1 for e in exps)
        if self.group_dimension != expected:
            raise DomainError(
                f"group dimension {self.group_dimension} does not match exponents "
                f"{exps} (expected {expected})")
        object.__setattr__(self, "exponents", exps)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(e + 1 for e in self.exponents)


_EXCEPTIONAL = {
    "G2": (1, 5),
    "F4": (1, 5, 7, 11),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
}

_MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 3}


def exponent_profile(label: str) -> ExponentProfile:
    """Built-in profile for a Lie type such as ``"A5"``, ``"C3"``, ``"D4"`` or ``"G2"``.

    ``A{n-1}`` corresponds to ``PGL(n, R)``.
    """
    label = label.strip().upper()
    if label in _EXCEPTIONAL:
        exps = _EXCEPTIONAL[label]
        return ExponentProfile(label, exps, sum(2 * e + 1 for e in exps))
    match = re.fullmatch(r"([ABCD])(\d+)", label)
    if not match:
        raise DomainError(f"unknown Lie type {label!r}")
    kind, rank = match.group(1), int(match.group(2))
    if rank < _MIN_RANK[kind]:
        raise DomainError(f"type {kind} needs rank >= {_MIN_RANK[kind]}")
    if kind == "A":
        exps = tuple(range(1, rank + 1))
    elif kind in "BC":
        exps = tuple(range(1, 2 * rank, 2))
    else:
        exps = tuple(range(1, 2 * rank - 2, 2)) + (rank - 1,)
    return ExponentProfile(label, exps, sum(2 * e + 1 for e in exps))


def hitchin_dimension_exponents(sig: OrbifoldSignature, profile: ExponentProfile) -> int:
    """Hitchin dimension for the split group described by ``profile``."""
    if not isinstance(profile, ExponentProfile):
        raise DomainError("profile must be an ExponentProfile")
    return _hitchin_count(sig, profile.degrees, profile.group_dimension)
