"""Text grammar for orbifold signatures.

::

    signature := ('o' | 'n') INT ['b' INT] ['c:' LIST] ['d:' LIST]
    LIST      := INT (',' INT)*

``o`` marks an orientable coarse surface and ``n`` a non-orientable one; the
integer after it is the genus (cross-cap count for ``n``).  ``b`` gives the
number of mirror circles, ``c:`` the cone orders and ``d:`` the corner
orders.  No whitespace is allowed.  Examples: ``o0c:2,3,7``, ``o0b1d:2,3,7``,
``o2``, ``n1c:3``.
"""
from __future__ import annotations

from .exceptions import SignatureError, SignatureSyntaxError
from .signatures import OrbifoldSignature

__all__ = ["parse_signature", "format_signature"]

_EOF = "end of input"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self, literal: str) -> bool:
        return self.text.startswith(literal, self.pos)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def fail(self, message, expected):
        raise SignatureSyntaxError(message, self.pos, expected)

    def integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = repr(self.text[self.pos]) if not self.at_end() else _EOF
            self.fail(f"expected a decimal integer, found {found}", ("digit",))
        return int(self.text[start:self.pos]), start

    def integer_list(self):
        values = [self.integer()]
        while self.peek(","):
            self.pos += 1
            values.append(self.integer())
        return values


def parse_signature(text: str) -> OrbifoldSignature:
    """Parse ``text`` into a canonical :class:`OrbifoldSignature`.

    Syntax errors and invariant violations both raise
    :class:`SignatureSyntaxError` carrying the offending offset and the set of
    tokens that would have been accepted there.
    """
    if not isinstance(text, str):
        raise TypeError("signature text must be a str")
    sc = _Scanner(text)
    if sc.peek("o"):
        orientable = True
    elif sc.peek("n"):
        orientable = False
    else:
        sc.fail("signature must start with an orientability flag", ("o", "n"))
    sc.pos += 1
    genus, genus_at = sc.integer()
    offsets = {"genus": genus_at, "orientable": 0}

    mirrors, seen_b = 0, False
    offsets["mirror_circles"] = sc.pos
    if sc.peek("b"):
        sc.pos += 1
        seen_b = True
        mirrors, offsets["mirror_circles"] = sc.integer()

    cones, corners = [], []
    offsets["cone_orders"] = sc.pos
    if sc.peek("c:"):
        sc.pos += 2
        cones = sc.integer_list()
    offsets["corner_orders"] = sc.pos
    if sc.peek("d:"):
        sc.pos += 2
        corners = sc.integer_list()

    if not sc.at_end():
        expected = []
        if not (seen_b or cones or corners):
            expected.append("b")
        if not (cones or corners):
            expected.append("c:")
        if not corners:
            expected.append("d:")
        if cones or corners:
            expected.append(",")
        expected.append(_EOF)
        sc.fail(f"unexpected character {text[sc.pos]!r}", expected)

    for field, values in (("cone_orders", cones), ("corner_orders", corners)):
        for m, at in values:
            if m < 2:
                raise SignatureSyntaxError(
                    f"order {m} is smaller than 2", at, ("integer >= 2",), field=field)
    try:
        return OrbifoldSignature(orientable, genus, mirrors,
                                 tuple(m for m, _ in cones),
                                 tuple(n for n, _ in corners))
    except SignatureError as exc:
        raise SignatureSyntaxError(
            exc.args[0], offsets.get(exc.field, 0), field=exc.field) from None


def format_signature(sig: OrbifoldSignature) -> str:
    """Canonical text form; ``parse_signature`` inverts it."""
    parts = ["o" if sig.orientable else "n", str(sig.genus)]
    if sig.mirror_circles:
        parts.append(f"b{sig.mirror_circles}")
    if sig.cone_orders:
        parts.append("c:" + ",".join(map(str, sig.cone_orders)))
    if sig.corner_orders:
        parts.append("d:" + ",".join(map(str, sig.corner_orders)))
    return "".join(parts)
