"""Presentations of orbifold fundamental groups and triangle-group checks.

Words are tuples of ``(generator, exponent)`` letters with exponent ``+1`` or
``-1``.  The Coxeter generators ``x, y, z`` are involutions; for those the
exponent is always normalized to ``+1`` and ``xx`` cancels like ``x x^-1``.

Only decidable, local checks are made: free (and involutive) reduction and
matching against cyclic rotations of relators.  The word problem for the
infinite triangle groups is not attempted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple, Union

from .exceptions import DomainError
from .signatures import OrbifoldSignature

__all__ = [
    "Word",
    "Presentation",
    "word",
    "word_inverse",
    "reduce_word",
    "presentation_fuchsian",
    "presentation_coxeter_triangle",
    "substitute",
    "flattening_morphism_check",
    "parity_quotient",
    "format_word",
    "COXETER_GENERATORS",
    "FLATTENING",
]

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]

COXETER_GENERATORS = frozenset("xyz")
FLATTENING = {"a": "xy", "b": "yz", "c": "zx"}


def word(text: Union[str, Iterable], involutions: FrozenSet[str] = frozenset()) -> Word:
    """Build a word from ``"xy"``-style text (one letter per generator) or from letters.

    In text form an uppercase letter denotes the inverse of its lowercase
    generator.
    """
    if isinstance(text, str):
        letters = [(ch.lower(), -1 if ch.isupper() else 1) for ch in text]
    else:
        letters = list(text)
    return tuple((g, 1 if g in involutions else e) for g, e in letters)


def word_inverse(w: Word, involutions: FrozenSet[str] = frozenset()) -> Word:
    return tuple((g, 1 if g in involutions else -e) for g, e in reversed(w))


def reduce_word(w: Iterable[Letter], involutions: FrozenSet[str] = frozenset()) -> Word:
    """Free reduction, plus ``g g = 1`` for every ``g`` in ``involutions``."""
    stack = []
    for g, e in w:
        if g in involutions:
            e = 1
        if stack and stack[-1][0] == g and (g in involutions or stack[-1][1] == -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class Presentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]
    involutions: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise DomainError("duplicate generator names")
        relators = []
        for r in self.relators:
            for g, _ in r:
                if g not in gens:
                    raise DomainError(f"relator uses undeclared generator {g!r}")
            relators.append(reduce_word(r))
        object.__setattr__(self, "relators", tuple(relators))

    def to_text(self) -> str:
        return "<" + ", ".join(self.generators) + " | " + ", ".join(
            format_word(r, self.involutions) for r in self.relators) + ">"

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [format_word(r, self.involutions) for r in self.relators],
            "relator_letters": [[[g, e] for g, e in r] for r in self.relators],
        }

    def __str__(self):
        return self.to_text()


def _commutator(x: str, y: str) -> Word:
    return ((x, 1), (y, 1), (x, -1), (y, -1))


def presentation_fuchsian(sig: OrbifoldSignature) -> Presentation:
    """Presentation of the fundamental group of a closed orientable cone-type orbifold."""
    if not sig.is_closed_orientable:
        raise DomainError(f"{sig} is not a closed orientable orbifold")
    g, k = sig.genus, sig.k
    if g == 1:
        a_names, b_names = ["a"], ["b"]
    else:
        a_names = [f"a{i}" for i in range(1, g + 1)]
        b_names = [f"b{i}" for i in range(1, g + 1)]
    if g == 0 and k == 3:
        c_names = ["a", "b", "c"]
    elif k == 1:
        c_names = ["c"]
    else:
        c_names = [f"c{j}" for j in range(1, k + 1)]
    gens = []
    for x, y in zip(a_names, b_names):
        gens += [x, y]
    gens += c_names
    relators = [tuple((c, 1) for _ in range(m)) for c, m in zip(c_names, sig.cone_orders)]
    long = []
    for x, y in zip(a_names, b_names):
        long += _commutator(x, y)
    long += [(c, 1) for c in c_names]
    if long:
        relators.append(tuple(long))
    return Presentation(tuple(gens), tuple(relators))


def presentation_coxeter_triangle(p: int, q: int, r: int) -> Presentation:
    """``<x, y, z | x^2, y^2, z^2, (xy)^p, (yz)^q, (zx)^r>``."""
    for v in (p, q, r):
        if isinstance(v, bool) or not isinstance(v, int) or v < 2:
            raise DomainError(f"triangle group orders must be integers >= 2, got {(p, q, r)}")
    rels = [(("x", 1), ("x", 1)), (("y", 1), ("y", 1)), (("z", 1), ("z", 1))]
    for pair, n in (("xy", p), ("yz", q), ("zx", r)):
        rels.append(tuple((g, 1) for g in pair * n))
    return Presentation(("x", "y", "z"), tuple(rels), COXETER_GENERATORS)


def substitute(w: Word, images: Dict[str, Word], involutions=COXETER_GENERATORS) -> Word:
    """Image of ``w`` under the morphism sending each generator to ``images[g]``."""
    out = []
    for g, e in w:
        img = images[g]
        out.extend(img if e > 0 else word_inverse(img, involutions))
    return reduce_word(out, involutions)


def _is_rotation(w: Word, r: Word) -> bool:
    if len(w) != len(r):
        return False
    if not w:
        return True
    return any(r[i] == w[0] and r[i:] + r[:i] == w for i in range(len(r)))


def _matches_relator(w: Word, relators: Sequence[Word], involutions) -> bool:
    return any(_is_rotation(w, r) or _is_rotation(w, word_inverse(r, involutions))
               for r in relators if len(r) == len(w))


def flattening_morphism_check(p: int, q: int, r: int, images: Dict[str, str] = None) -> bool:
    """Check that ``a -> xy, b -> yz, c -> zx`` kills every Von Dyck relator.

    Each relator image is reduced freely and with ``x^2 = y^2 = z^2 = 1``; it
    passes if it becomes empty or is a cyclic rotation of a Coxeter relator
    (or of its inverse).  ``images`` overrides the default assignment.
    """
    images = FLATTENING if images is None else images
    coxeter = presentation_coxeter_triangle(p, q, r)
    # Von Dyck relators in (p, q, r) position; presentation_fuchsian would sort them.
    relators = [(("a", 1),) * p, (("b", 1),) * q, (("c", 1),) * r,
                (("a", 1), ("b", 1), ("c", 1))]
    image_words = {g: word(text, COXETER_GENERATORS) for g, text in images.items()}
    for rel in relators:
        img = substitute(rel, image_words)
        if img and not _matches_relator(img, coxeter.relators, COXETER_GENERATORS):
            return False
    return True


def parity_quotient(w: Union[str, Iterable[Letter]]) -> int:
    """Image in ``{+1, -1}`` of a word in ``x, y, z``: ``(-1)^(reduced length)``."""
    letters = word(w, COXETER_GENERATORS) if isinstance(w, str) else tuple(w)
    for g, _ in letters:
        if g not in COXETER_GENERATORS:
            raise DomainError(f"unknown symbol {g!r}; expected one of x, y, z")
    reduced = reduce_word(letters, COXETER_GENERATORS)
    return -1 if len(reduced) % 2 else 1


def _smallest_period(w: Word) -> int:
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return d
    return n


def format_word(w: Word, involutions: FrozenSet[str] = frozenset()) -> str:
    """Text form with ``^`` powers and ``[a,b]`` commutator sugar."""
    if not w:
        return "1"
    d = _smallest_period(w)
    if d < len(w) and d > 1:
        return f"({format_word(w[:d], involutions)})^{len(w) // d}"
    parts = []
    i = 0
    while i < len(w):
        g, e = w[i]
        if (i + 3 < len(w) and e == 1 and w[i + 1][1] == 1
                and w[i + 2] == (g, -1) and w[i + 3] == (w[i + 1][0], -1)
                and w[i + 1][0] != g):
            parts.append(f"[{g},{w[i + 1][0]}]")
            i += 4
            continue
        j = i
        while j < len(w) and w[j] == (g, e):
            j += 1
        run = j - i
        if e == 1:
            parts.append(g if run == 1 else f"{g}^{run}")
        else:
            parts.append(f"{g}^-{run}")
        i = j
    single = all(len(g) == 1 for g, _ in w)
    return ("" if single else "*").join(parts)
