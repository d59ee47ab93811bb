"""Pencils of plane curves: base points, resolution by blow-ups, genus.

A pencil is spanned by two coprime forms f, g of degree d in x, y, z.  Its
base points (actual and infinitely near) are found over the rationals and
blown up until the proper transform is base-point free.  The multiplicity
at each point is that of a general member, ``min(ord f, ord g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import (
    Polynomial,
    UnivariatePolynomial,
    dehomogenize,
    gcd_univariate,
    homogenize,
    ord_at_origin,
    restrict,
    resultant,
    squarefree_and_rational_roots,
    substitute,
    translate,
)
from .blowup import (
    DEFAULT_DEPTH_CAP,
    ClusterNode,
    ClusterSums,
    ClusterTree,
    chart_exponent,
    cluster_sums,
)
from .errors import (
    DepthExceeded,
    DimensionMismatch,
    FixedComponent,
    InconsistentBezout,
    NonRationalBasePoint,
    NotHomogeneous,
)
from .polyparse import parse_polynomial

XYZ = ("x", "y", "z")


def _fmt(c: Fraction) -> str:
    return str(c)


def format_projective(point) -> str:
    return "(" + ":".join(_fmt(c) for c in point) + ")"


def _divisible_by(F: Polynomial, i: int) -> bool:
    return all(e[i] > 0 for e in F.terms)


def _check_coprime(F: Polynomial, G: Polynomial):
    if _divisible_by(F, 2) and _divisible_by(G, 2):
        raise FixedComponent("both members vanish on the line z = 0")
    f, g = dehomogenize(F, "z"), dehomogenize(G, "z")
    for i in (1, 0):
        if resultant(f, g, i).is_zero():
            raise FixedComponent(f"members share a common factor: {F} and {G}")


@dataclass(frozen=True)
class Pencil:
    f: Polynomial
    g: Polynomial

    def __post_init__(self):
        for h in (self.f, self.g):
            if h.variables != XYZ:
                raise DimensionMismatch("pencil members are forms in x, y, z")
            if h.is_zero():
                raise FixedComponent("a pencil member is zero")
            if not h.is_homogeneous():
                raise NotHomogeneous(f"{h} is not homogeneous")
        if self.f.degree() != self.g.degree():
            raise NotHomogeneous("pencil members must have equal degree")
        if self.f.degree() < 1:
            raise NotHomogeneous("pencil members must have degree at least 1")
        _check_coprime(self.f, self.g)

    @property
    def degree(self) -> int:
        return self.f.degree()

    @classmethod
    def parse(cls, f_text: str, g_text: str, affine: bool = False,
              degree: int | None = None) -> Pencil:
        if not affine:
            return cls(parse_polynomial(f_text, XYZ), parse_polynomial(g_text, XYZ))
        f = parse_polynomial(f_text, ("x", "y"))
        g = parse_polynomial(g_text, ("x", "y"))
        d = degree if degree is not None else max(f.degree(), g.degree())
        return cls(homogenize(f, "z", d), homogenize(g, "z", d))

    def transformed(self, matrix) -> Pencil:
        """Pull back both members along the linear map v -> matrix @ v."""
        v = [Polynomial.var(s, XYZ) for s in XYZ]
        images = [sum((Fraction(matrix[i][j]) * v[j] for j in range(3)),
                      Polynomial.zero(XYZ)) for i in range(3)]
        return Pencil(substitute(self.f, images), substitute(self.g, images))


def _top_form_value(p: Polynomial, c: int) -> Fraction:
    d = p.degree()
    return sum((coef * Fraction(c) ** e[0] for e, coef in p.terms.items() if sum(e) == d),
               Fraction(0))


def _shear_constant(f: Polynomial, g: Polynomial) -> int:
    # top forms are nonzero, so some small c avoids the zeros of both
    c = 0
    while not (_top_form_value(f, c) and _top_form_value(g, c)):
        c = -c if c > 0 else 1 - c
    return c


def _common_roots(a: UnivariatePolynomial, b: UnivariatePolynomial, where: str):
    """Rational common roots of two univariate polynomials.

    A zero polynomial imposes no condition.  Non-rational common roots raise.
    """
    nonzero = [p for p in (a, b) if not p.is_zero()]
    if not nonzero:
        raise FixedComponent(f"both members vanish identically along {where}")
    h = nonzero[0] if len(nonzero) == 1 else gcd_univariate(*nonzero)
    if h.degree() <= 0:
        return []
    roots, residual = squarefree_and_rational_roots(h)
    if residual:
        raise NonRationalBasePoint(f"non-rational base point on {where}", eliminant=h)
    return [r for r, _ in roots]


def base_points(f: Polynomial, g: Polynomial) -> list[tuple[tuple[Fraction, Fraction], int]]:
    """Common zeros of two coprime polynomials in an affine chart.

    A shear ``u -> u + c*v`` first makes both leading coefficients in v
    constant, so every root of the eliminant is the u-coordinate of an
    actual common zero.  Returns ``((u, v), m)`` pairs sorted by point.
    """
    if f.nvars != 2 or g.nvars != 2:
        raise DimensionMismatch("base_points works in a two-variable chart")
    if f.is_zero() or g.is_zero():
        raise FixedComponent("a member vanishes identically on the chart")
    c = _shear_constant(f, g)
    u, v = (Polynomial.var(s, f.variables) for s in f.variables)
    shear = [u + v.scale(c), v]
    fs, gs = substitute(f, shear), substitute(g, shear)
    elim = resultant(fs, gs, 1)
    if elim.is_zero():
        raise FixedComponent(f"members share a common factor: {f} and {g}")
    if elim.degree() <= 0:
        return []
    roots, residual = squarefree_and_rational_roots(elim)
    if residual:
        raise NonRationalBasePoint("non-rational base point in the affine chart",
                                   eliminant=elim)
    points = []
    for u0, _ in roots:
        for v0 in _common_roots(restrict(fs, 0, u0), restrict(gs, 0, u0),
                                "a line of the chart"):
            pt = (u0 + c * v0, v0)
            m = min(ord_at_origin(translate(f, pt)), ord_at_origin(translate(g, pt)))
            points.append((pt, m))
    return sorted(points)


def _projective_base_points(P: Pencil):
    """Every base point in P^2 with its local chart data.

    Yields ``(projective_point, f_local, g_local)`` with the point moved to
    the origin of its chart.
    """
    F, G = P.f, P.g
    f, g = dehomogenize(F, "z"), dehomogenize(G, "z")
    for (a, b), _ in base_points(f, g):
        yield (a, b, Fraction(1)), translate(f, (a, b)), translate(g, (a, b))
    # the line z = 0: points (t : 1 : 0), then (1 : 0 : 0)
    fy, gy = dehomogenize(F, "y"), dehomogenize(G, "y")  # variables (x, z)
    for t in _common_roots(restrict(fy, 1, 0), restrict(gy, 1, 0), "the line z = 0"):
        yield (t, Fraction(1), Fraction(0)), translate(fy, (t, 0)), translate(gy, (t, 0))
    fx, gx = dehomogenize(F, "x"), dehomogenize(G, "x")  # variables (y, z)
    if fx.constant_term() == 0 and gx.constant_term() == 0:
        yield (Fraction(1), Fraction(0), Fraction(0)), fx, gx


def _proper_transform(p: Polynomial, chart: str, m: int) -> Polynomial:
    return p.map_exponents(lambda e: chart_exponent(e, chart, m))


def _resolve_local(f: Polynomial, g: Polynomial, chart: str, point: str,
                   depth: int, depth_cap: int) -> ClusterNode:
    if depth > depth_cap:
        raise DepthExceeded(f"pencil resolution deeper than {depth_cap}")
    m = min(ord_at_origin(f), ord_at_origin(g))
    assert m >= 1, "not a base point"
    children = []
    fx, gx = _proper_transform(f, "x", m), _proper_transform(g, "x", m)
    # exceptional line is u = 0 in the x-chart, parametrized by v
    for t in _common_roots(restrict(fx, 0, 0), restrict(gx, 0, 0), "an exceptional line"):
        children.append(_resolve_local(translate(fx, (0, t)), translate(gx, (0, t)),
                                       "x", f"(0, {t})", depth + 1, depth_cap))
    fy, gy = _proper_transform(f, "y", m), _proper_transform(g, "y", m)
    if fy.constant_term() == 0 and gy.constant_term() == 0:
        children.append(_resolve_local(fy, gy, "y", "(0, 0)", depth + 1, depth_cap))
    return ClusterNode(m, chart, point, tuple(children))


@dataclass
class PencilReport:
    degree: int
    cluster: ClusterTree
    sums: ClusterSums
    L2: int
    KL: int
    pa: int
    genus: int
    checks: dict

    @property
    def two_g_minus_2(self) -> int:
        return 2 * self.genus - 2

    def to_json(self) -> dict:
        return {
            "d": self.degree,
            "base_points": [{"point": n.point, "m": n.multiplicity} for n in self.cluster.roots],
            "cluster": self.cluster.to_json(),
            "sums": self.sums.to_json(),
            "L2": self.L2,
            "KL": self.KL,
            "pa": self.pa,
            "g": self.genus,
            "checks": dict(self.checks),
        }


def resolve_pencil(P: Pencil, depth_cap: int = DEFAULT_DEPTH_CAP) -> PencilReport:
    """Blow up all base points of ``P`` and evaluate the genus formula."""
    roots = []
    seen = set()
    for pt, fl, gl in _projective_base_points(P):
        if pt in seen:
            continue
        seen.add(pt)
        roots.append(_resolve_local(fl, gl, "root", format_projective(pt), 1, depth_cap))
    tree = ClusterTree(tuple(roots))
    sums = cluster_sums(tree)
    d = P.degree
    if sums.sum_m_sq != d * d:
        raise InconsistentBezout(
            f"sum of m_i^2 is {sums.sum_m_sq}, expected d^2 = {d * d}")
    two_g_minus_2 = d * (d - 3) - sums.sum_m_m_minus_1
    if two_g_minus_2 % 2:
        raise InconsistentBezout(f"2g - 2 = {two_g_minus_2} is odd")
    report = PencilReport(
        degree=d,
        cluster=tree,
        sums=sums,
        L2=d * d,
        KL=-3 * d,
        pa=(d - 1) * (d - 2) // 2,
        genus=two_g_minus_2 // 2 + 1,
        checks={},
    )
    report.checks.update(noether_identities(report))
    report.checks.update(konno_inequalities(report))
    return report


def noether_identities(r: PencilReport) -> dict[str, bool]:
    two_pa_minus_2 = r.L2 + r.KL
    return {
        "self_intersection_zero": r.L2 - r.sums.sum_m_sq == 0,
        "genus_formula": r.two_g_minus_2 == two_pa_minus_2 - r.sums.sum_m_m_minus_1,
        "genus_integral": (two_pa_minus_2 - r.sums.sum_m_m_minus_1) % 2 == 0,
    }


def konno_inequalities(r: PencilReport) -> dict[str, bool]:
    """Exact integer forms of 2g-2 >= K.L + sqrt(L^2) and 2g-2 >= K.L."""
    lhs = r.two_g_minus_2
    shifted = lhs - r.KL
    return {
        "thm21_identity": lhs == r.KL + r.sums.sum_m,
        "thm21": lhs >= r.KL + r.sums.sum_m and shifted >= 0 and shifted * shifted >= r.L2,
        "eq2": lhs >= r.KL,
    }


def pencil_from_linear_factors(f_factors: Iterable, g_factors: Iterable) -> Pencil:
    """Pencil spanned by two products of forms given as polynomials."""
    one = Polynomial.constant(XYZ, 1)
    f, g = one, one
    for h in f_factors:
        f = f * h
    for h in g_factors:
        g = g * h
    return Pencil(f, g)
