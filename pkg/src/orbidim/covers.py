"""Finite covers of orbifolds.

A finite cover of degree ``N`` of an orientable cone-type orbifold is given
by a transitive action of its fundamental group

    < a_1, b_1, ..., a_g, b_g, c_1, ..., c_k | prod [a_i, b_i] prod c_j = 1 = c_j^{m_j} >

on ``{0, ..., N-1}``.  Permutations are stored 0-indexed in one-line image
notation (``p[i]`` is the image of ``i``); the JSON form is 1-indexed.  They
act on the right: a product ``p q`` applies ``p`` first, and
``[a, b] = a b a^-1 b^-1``.  The ``c`` images follow the sorted cone order of
the signature.

The covering orbifold is read off by Riemann-Hurwitz: a cycle of length
``L`` of ``c_j`` lifts to a cone point of order ``m_j / L`` and the genus is
whatever makes the orbifold Euler characteristic multiply by ``N``.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exceptions import DomainError, InvalidActionError
from .signatures import (OrbifoldSignature, coarse_euler_characteristic,
                         cone_defect, orbifold_euler_characteristic)

__all__ = [
    "Permutation",
    "PermutationAction",
    "compose",
    "inverse",
    "identity",
    "cycle_lengths",
    "validate_action",
    "lift_signature",
    "orientation_double_cover",
    "MultiplicativityReport",
    "check_multiplicativity",
    "klein_quartic_action",
    "hyperelliptic_action",
]

Permutation = Tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _product(perms, n):
    result = identity(n)
    for p in perms:
        result = compose(result, p)
    return result


def _power(p, e):
    result = identity(len(p))
    for _ in range(e):
        result = compose(result, p)
    return result


def cycle_lengths(p: Permutation) -> List[int]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return lengths


@dataclass(frozen=True)
class PermutationAction:
    degree: int
    a: Tuple[Permutation, ...] = ()
    b: Tuple[Permutation, ...] = ()
    c: Tuple[Permutation, ...] = ()

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise InvalidActionError("the degree of an action must be a positive integer")
        for name in ("a", "b", "c"):
            perms = tuple(tuple(int(i) for i in p) for p in getattr(self, name))
            for p in perms:
                if sorted(p) != list(range(self.degree)):
                    raise InvalidActionError(
                        f"{name}: {list(p)} is not a permutation of {self.degree} points")
            object.__setattr__(self, name, perms)

    @property
    def generators(self) -> Tuple[Permutation, ...]:
        return self.a + self.b + self.c

    def relator_image(self) -> Permutation:
        """Image of ``prod [a_i, b_i] prod c_j``."""
        word = []
        for x, y in zip(self.a, self.b):
            word += [x, y, inverse(x), inverse(y)]
        word += list(self.c)
        return _product(word, self.degree)

    def is_transitive(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for p in self.generators:
                j = p[i]
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return len(seen) == self.degree

    def to_json(self) -> dict:
        def one_based(perms):
            return [[i + 1 for i in p] for p in perms]

        return {"degree": self.degree, "a": one_based(self.a),
                "b": one_based(self.b), "c": one_based(self.c)}

    @classmethod
    def from_json(cls, data) -> "PermutationAction":
        """Build an action from the 1-indexed JSON document (dict or text)."""
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = data["degree"]

            def zero_based(perms):
                return tuple(tuple(i - 1 for i in p) for p in perms)

            return cls(n, zero_based(data.get("a", [])), zero_based(data.get("b", [])),
                       zero_based(data.get("c", [])))
        except (KeyError, TypeError) as exc:
            raise InvalidActionError(f"malformed action document: {exc}") from None


def _require_cone_type(sig: OrbifoldSignature) -> None:
    if not sig.is_closed_orientable:
        raise DomainError(f"covers by permutation actions need a closed orientable base, got {sig}")


def validate_action(sig: OrbifoldSignature, action: PermutationAction) -> PermutationAction:
    """Check that ``action`` is a transitive action of the orbifold group of ``sig``.

    Returns the action unchanged; raises :class:`InvalidActionError` on wrong
    arity, a violated relation, or a non-transitive action.
    """
    _require_cone_type(sig)
    if len(action.a) != sig.genus or len(action.b) != sig.genus or len(action.c) != sig.k:
        raise InvalidActionError(
            f"{sig} needs {sig.genus} a/b images and {sig.k} c images, got "
            f"{len(action.a)}/{len(action.b)}/{len(action.c)}")
    if action.relator_image() != identity(action.degree):
        raise InvalidActionError("the long relation prod[a_i,b_i] prod c_j = 1 fails")
    for j, (m, p) in enumerate(zip(sig.cone_orders, action.c), 1):
        if _power(p, m) != identity(action.degree):
            raise InvalidActionError(f"c_{j}^{m} is not the identity")
    if not action.is_transitive():
        raise InvalidActionError("the action is not transitive (the cover is disconnected)")
    return action


def lift_signature(sig: OrbifoldSignature, action: PermutationAction) -> OrbifoldSignature:
    """Signature of the connected cover defined by a validated ``action``."""
    validate_action(sig, action)
    cones = []
    for m, p in zip(sig.cone_orders, action.c):
        for length in cycle_lengths(p):
            if m // length > 1:
                cones.append(m // length)
    target = action.degree * orbifold_euler_characteristic(sig)
    coarse = target + cone_defect(cones)
    genus = (2 - coarse) / 2
    if genus.denominator != 1 or genus < 0:
        raise InvalidActionError(f"Riemann-Hurwitz gives a non-integral genus {genus}")
    return OrbifoldSignature(True, int(genus), 0, tuple(cones))


def orientation_double_cover(sig: OrbifoldSignature) -> OrbifoldSignature:
    """Orientable double cover of a non-orientable or mirrored orbifold.

    Each cone point lifts to two cone points of the same order and each corner
    reflector to a single cone point; the coarse Euler characteristic doubles.
    """
    if sig.is_closed_orientable:
        raise DomainError(f"{sig} is already closed and orientable")
    genus = Fraction(2 - 2 * coarse_euler_characteristic(sig), 2)
    if genus.denominator != 1 or genus < 0:
        raise DomainError(f"double cover of {sig} would have genus {genus}")
    return OrbifoldSignature(True, int(genus), 0, sig.cone_orders * 2 + sig.corner_orders)


@dataclass(frozen=True)
class MultiplicativityReport:
    cover: OrbifoldSignature
    degree: int
    cover_chi: Fraction
    scaled_base_chi: Fraction

    @property
    def holds(self) -> bool:
        return self.cover_chi == self.scaled_base_chi


def check_multiplicativity(sig: OrbifoldSignature, action: PermutationAction) -> MultiplicativityReport:
    """Compare ``chi(cover)`` with ``N chi(base)``; a mismatch is reported, not raised.

    ``lift_signature`` solves the genus from multiplicativity, so the genus
    is recomputed here from the coarse cover directly: the cover's vertices,
    edges and faces come from the action on a cell structure of the base.
    """
    cover = lift_signature(sig, action)
    cover_chi = _cover_chi_from_cells(sig, action)
    if cover_chi != orbifold_euler_characteristic(cover):
        raise InvalidActionError("cell count disagrees with the lifted signature")
    return MultiplicativityReport(cover, action.degree, cover_chi,
                                  action.degree * orbifold_euler_characteristic(sig))


def _cover_chi_from_cells(sig, action) -> Fraction:
    # Base cell structure: one 0-cell, 2g + k one-cells (a_i, b_i and an arc
    # to each cone point), one 2-cell, plus one 0-cell per cone point.
    # Upstairs each cell has N lifts, except cone points which lift to one
    # point per cycle of c_j, carrying order m_j / cycle length.
    n = action.degree
    vertices = n
    edges = n * (2 * sig.genus + sig.k)
    faces = n
    orbifold_correction = Fraction(0)
    for m, p in zip(sig.cone_orders, action.c):
        for length in cycle_lengths(p):
            vertices += 1
            orbifold_correction += 1 - Fraction(length, m)
    return vertices - edges + faces - orbifold_correction


def hyperelliptic_action() -> Tuple[OrbifoldSignature, PermutationAction]:
    """Degree-2 action of the sphere with six order-2 cone points (genus-2 cover)."""
    swap = (1, 0)
    return OrbifoldSignature(True, 0, 0, (2,) * 6), PermutationAction(2, (), (), (swap,) * 6)


def _psl27_elements() -> Tuple[List[Tuple[int, int, int, int]], Dict, Tuple]:
    p = 7

    def norm(m):
        a, b, c, d = (x % p for x in m)
        # Representative of {M, -M}: first nonzero entry in 1..3.
        for x in (a, b, c, d):
            if x:
                if x > p // 2:
                    a, b, c, d = (-a) % p, (-b) % p, (-c) % p, (-d) % p
                break
        return (a, b, c, d)

    def mul(m1, m2):
        a, b, c, d = m1
        e, f, g, h = m2
        return norm((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    s = norm((0, -1, 1, 0))              # order 2
    st = norm((0, -1, 1, 1))             # S T, order 3
    elements = [norm((1, 0, 0, 1))]
    index = {elements[0]: 0}
    queue = deque(elements)
    while queue:
        g = queue.popleft()
        for x in (s, st):
            h = mul(g, x)
            if h not in index:
                index[h] = len(elements)
                elements.append(h)
                queue.append(h)
    return elements, index, (s, st, mul)


def klein_quartic_action() -> Tuple[OrbifoldSignature, PermutationAction]:
    """Regular action of ``PSL(2, 7)`` for the sphere with cone orders (2, 3, 7).

    Generators ``S`` (order 2) and ``ST`` (order 3) have product ``T`` of
    order 7; ``c_3`` is sent to ``T^-1`` so that ``c_1 c_2 c_3 = 1``.  Each
    group element acts by right multiplication on the 168 group elements.
    The resulting cover is the Klein quartic, of genus 3.
    """
    elements, index, (s, st, mul) = _psl27_elements()
    if len(elements) != 168:
        raise AssertionError(f"expected 168 elements, generated {len(elements)}")
    t = mul(s, st)
    t_inv = t
    while mul(t_inv, t) != elements[0]:
        t_inv = mul(t_inv, t)

    def right_mult(x):
        return tuple(index[mul(g, x)] for g in elements)

    action = PermutationAction(168, (), (), (right_mult(s), right_mult(st), right_mult(t_inv)))
    return OrbifoldSignature(True, 0, 0, (2, 3, 7)), action


def cone_cycle_profile(action: PermutationAction) -> List[Counter]:
    """Cycle-length multiset of each ``c_j``; each sums to the degree."""
    return [Counter(cycle_lengths(p)) for p in action.c]
