import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as hs

from konno.algebra import (
    Polynomial,
    UnivariatePolynomial as U,
    dehomogenize,
    determinant,
    gcd_univariate,
    homogenize,
    interpolate,
    ord_at_origin,
    rational_roots,
    restrict,
    resultant,
    squarefree_and_rational_roots,
    translate,
)
from konno.errors import DimensionMismatch
from konno.polyparse import parse_polynomial

from conftest import univariates, polynomials, small_fractions, XY

XYZ = ("x", "y", "z")
t = U([0, 1])


def P(text, variables=XY):
    return parse_polynomial(text, variables)


# -- examples --------------------------------------------------------------

def test_ord_examples():
    assert ord_at_origin(P("x^2 + x y^3")) == 2
    assert ord_at_origin(Polynomial.zero(XY)) == math.inf
    assert ord_at_origin(Polynomial.constant(XY, 7)) == 0


def test_translate_examples():
    assert translate(P("x^2"), (1, 0)) == P("x^2 + 2 x + 1")
    a = Fraction(5, 3)
    assert translate(P("y - x"), (a, a)) == P("y - x")
    assert translate(P("x y"), (1, 1)) == P("x y + x + y + 1")


def test_gcd_examples():
    assert gcd_univariate(t ** 2 - 1, t - 1) == t - 1
    assert gcd_univariate(t ** 2 + 1, t - 1) == U([1])
    assert gcd_univariate(t ** 3 - t, t ** 2 - t) == t ** 2 - t


def test_gcd_both_zero_raises():
    with pytest.raises(ValueError):
        gcd_univariate(U(), U())


def test_roots_examples():
    assert squarefree_and_rational_roots(t ** 2 * (t - 1)) == ([(0, 2), (1, 1)], 0)
    assert squarefree_and_rational_roots(t ** 2 + 1) == ([], 2)
    half = Fraction(1, 2)
    assert squarefree_and_rational_roots((t - half) ** 2 * (t ** 2 - 2)) == ([(half, 2)], 2)


def test_dehomogenize_examples():
    assert dehomogenize(P("x^2 z", XYZ), "z") == P("x^2")
    assert dehomogenize(P("x^3 - x z^2", XYZ), "z") == P("x^3 - x")
    assert dehomogenize(P("x y + z^2", XYZ), "x") == P("y + z^2", ("y", "z"))


def test_homogenize_inverts_dehomogenize():
    F = P("x^3 - x z^2 + y z^2", XYZ)
    assert homogenize(dehomogenize(F, "z"), "z", 3) == F


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        P("x") + P("x", XYZ)


def test_printing_graded_lex():
    assert str(P("y^2 + x^2 - 2 x y")) == "x^2 - 2 x y + y^2"
    assert str(P("3/2 x y^3")) == "3/2 x y^3"
    assert str(Polynomial.zero(XY)) == "0"


def test_resultant_of_lines():
    # x - y and x + y - 2 meet at (1, 1)
    r = resultant(P("x - y"), P("x + y - 2"), 1)
    assert rational_roots(r) == [1]


def test_resultant_matches_product_of_root_differences():
    # Res_y(y - a(x), y - b(x)) = +/-(a - b)
    r = resultant(P("y - x^2"), P("y - 1"), 1)
    assert sorted(rational_roots(r)) == [-1, 1]
    assert r.degree() == 2


def test_determinant_and_interpolate():
    assert determinant([[2, 1], [1, 3]]) == 5
    assert determinant([[Fraction(1, 2), 0], [0, 4]]) == 2
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    assert interpolate([0, 1, 2], [1, 2, 5]) == U([1, 0, 1])


def test_divmod():
    q, r = divmod(t ** 3 + 2, t - 1)
    assert q * (t - 1) + r == t ** 3 + 2 and r.degree() < 1


# -- properties ------------------------------------------------------------

@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p - p == Polynomial.zero(XY)


@given(polynomials(), polynomials())
def test_ord_is_multiplicative(p, q):
    if not p.is_zero() and not q.is_zero():
        assert ord_at_origin(p * q) == ord_at_origin(p) + ord_at_origin(q)


@given(polynomials(), small_fractions, small_fractions)
def test_translate_round_trip(p, a, b):
    assert translate(translate(p, (a, b)), (-a, -b)) == p


@given(polynomials(), small_fractions, small_fractions)
def test_translate_is_shifted_evaluation(p, a, b):
    q = translate(p, (a, b))
    assert q.evaluate((0, 0)) == p.evaluate((a, b))
    assert q.evaluate((1, 2)) == p.evaluate((a + 1, b + 2))


@given(univariates(), univariates(), univariates())
def test_gcd_divides_and_captures_common_factor(a, b, c):
    if c.is_zero() or (a.is_zero() and b.is_zero()):
        return
    g = gcd_univariate(a * c, b * c)
    assert ((a * c) % g).is_zero() and ((b * c) % g).is_zero()
    assert (g % c.monic()).is_zero()


@given(hs.lists(small_fractions, max_size=5), univariates(max_deg=3))
def test_roots_reconstruct_input(roots, cofactor):
    if cofactor.is_zero():
        return
    a = U.from_roots(roots) * cofactor
    found, residual = squarefree_and_rational_roots(a)
    rebuilt = U([1])
    for r, mult in found:
        rebuilt = rebuilt * (t - r) ** mult
    rest, rem = divmod(a.monic(), rebuilt)
    assert rem.is_zero() and rest.degree() == residual
    assert rational_roots(rest) == []
    assert set(roots) <= {r for r, _ in found}


@given(polynomials(max_deg=2, max_terms=4), small_fractions)
def test_restrict_matches_evaluation(p, c):
    assert restrict(p, 0, c)(3) == p.evaluate((c, 3))
