"""Monomial ideals of finite colength in k[x, y].

An ideal is stored as its minimal generators, exponent pairs ``(a, b)``
sorted by ``a`` ascending (so ``b`` descending).  The complement of the
ideal in the exponent lattice is the staircase.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InfiniteColength

Exponent = tuple[int, int]


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Exponent, ...]

    def __post_init__(self):
        gens = self.generators
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for (a1, b1), (a2, b2) in zip(gens, gens[1:]):
            if not (a1 < a2 and b1 > b2):
                raise ValueError(f"generators {gens} are not minimal and sorted")

    @classmethod
    def from_generators(cls, gens: Iterable[Exponent]) -> MonomialIdeal:
        return minimalize(gens)

    @classmethod
    def parse(cls, text: str) -> MonomialIdeal:
        from .polyparse import parse_monomial_ideal
        return minimalize(parse_monomial_ideal(text))

    @property
    def is_unit(self) -> bool:
        return self.generators[0] == (0, 0)

    @property
    def has_finite_colength(self) -> bool:
        return self.generators[0][0] == 0 and self.generators[-1][1] == 0

    def contains(self, e: Exponent) -> bool:
        return any(e[0] >= a and e[1] >= b for a, b in self.generators)

    def __str__(self):
        # highest x-power first, the usual way of writing these ideals
        return format_generators(reversed(self.generators))


def format_monomial(e: Exponent) -> str:
    parts = [v if k == 1 else f"{v}^{k}" for v, k in zip("xy", e) if k]
    return " ".join(parts) or "1"


def format_generators(gens: Iterable[Exponent]) -> str:
    return ", ".join(format_monomial(e) for e in gens)


def minimalize(gens: Iterable[Exponent]) -> MonomialIdeal:
    """Drop generators divisible by another one and sort the rest."""
    pts = sorted({(int(a), int(b)) for a, b in gens})
    if not pts:
        raise ValueError("cannot form an ideal from no generators")
    if any(a < 0 or b < 0 for a, b in pts):
        raise ValueError("exponents must be non-negative")
    kept = []
    best_b = None
    # sorted by a then b: a point survives iff its b beats every earlier b
    for a, b in pts:
        if best_b is None or b < best_b:
            kept.append((a, b))
            best_b = b
    return MonomialIdeal(tuple(kept))


def _require_finite(I: MonomialIdeal):
    if not I.has_finite_colength:
        raise InfiniteColength(f"({I}) lacks a pure power of x or of y")


def colength(I: MonomialIdeal) -> int:
    """Number of standard monomials (lattice points under the staircase)."""
    _require_finite(I)
    gens = I.generators
    return sum((a2 - a1) * b1 for (a1, b1), (a2, _) in zip(gens, gens[1:]))


def standard_monomials(I: MonomialIdeal) -> list[Exponent]:
    _require_finite(I)
    gens = I.generators
    return [(a, b) for (a1, b1), (a2, _) in zip(gens, gens[1:])
            for a in range(a1, a2) for b in range(b1)]


def order(I: MonomialIdeal) -> int:
    return min(a + b for a, b in I.generators)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimalize((a1 + a2, b1 + b2) for a1, b1 in I.generators for a2, b2 in J.generators)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise ValueError("power needs n >= 1")
    result = I
    for _ in range(n - 1):
        result = multiply(result, I)
    return result


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[Exponent, ...]

    def edges(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def contains(self, e) -> bool:
        """Exact test for membership of a rational point in the Newton region."""
        a, b = Fraction(e[0]), Fraction(e[1])
        if a < 0 or b < 0:
            return False
        for (a1, b1), (a2, b2) in self.edges():
            # (b1 - b2, a2 - a1) is the inward normal of the edge
            if (b1 - b2) * (a - a1) + (a2 - a1) * (b - b1) < 0:
                return False
        return True

    def doubled_area_below(self) -> int:
        """Twice the area of the region cut off between the polygon and the axes."""
        pts = [(0, 0)] + list(self.vertices)
        twice = 0
        for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1]):
            twice += x1 * y2 - x2 * y1
        return abs(twice)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(I: MonomialIdeal) -> NewtonPolygon:
    """Lower convex hull of the generators, from (0, b) down to (a, 0)."""
    _require_finite(I)
    hull: list[Exponent] = []
    for p in I.generators:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return NewtonPolygon(tuple(hull))


def membership_in_closure(I: MonomialIdeal, e: Exponent) -> bool:
    return newton_polygon(I).contains(e)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    poly = newton_polygon(I)
    a_max = poly.vertices[-1][0]
    b_max = poly.vertices[0][1]
    gens = []
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            if poly.contains((a, b)):
                gens.append((a, b))
                break
    return minimalize(gens)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return integral_closure(I) == I


def samuel_multiplicity(I: MonomialIdeal) -> int:
    """e(I) as twice the covolume of the Newton region."""
    return newton_polygon(I).doubled_area_below()


def report(I: MonomialIdeal) -> dict:
    closure = integral_closure(I)
    return {
        "generators": str(I),
        "colength": colength(I),
        "order": order(I),
        "e": samuel_multiplicity(I),
        "integrally_closed": closure == I,
        "closure_generators": str(closure),
    }


def staircase_ideals(max_colength: int):
    """Every finite-colength monomial ideal of colength 1..max_colength.

    Staircases of colength c correspond to partitions of c: the column
    heights b_0 >= b_1 >= ... give the generators.
    """
    def partitions(n, largest):
        if n == 0:
            yield ()
            return
        for k in range(min(n, largest), 0, -1):
            for rest in partitions(n - k, k):
                yield (k,) + rest

    for c in range(1, max_colength + 1):
        for heights in partitions(c, c):
            gens = [(0, heights[0])]
            gens += [(i, h) for i, h in enumerate(heights) if i and h < heights[i - 1]]
            gens.append((len(heights), 0))
            yield minimalize(gens)
