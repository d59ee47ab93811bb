import pytest
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as hs

from konno.algebra import Polynomial, UnivariatePolynomial
from konno.staircase import MonomialIdeal, minimalize

settings.register_profile("konno", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("konno")

XY = ("x", "y")

small_fractions = hs.builds(Fraction, hs.integers(-6, 6), hs.integers(1, 4))


@hs.composite
def polynomials(draw, variables=XY, max_deg=3, max_terms=5):
    n = len(variables)
    terms = draw(hs.dictionaries(
        hs.tuples(*[hs.integers(0, max_deg)] * n), small_fractions, max_size=max_terms))
    return Polynomial(variables, terms)


@hs.composite
def univariates(draw, max_deg=4):
    cs = draw(hs.lists(small_fractions, min_size=1, max_size=max_deg + 1))
    return UnivariatePolynomial(cs)


@hs.composite
def finite_ideals(draw, max_exp=6):
    gens = [(draw(hs.integers(1, max_exp)), 0), (0, draw(hs.integers(1, max_exp)))]
    extra = draw(hs.lists(hs.tuples(hs.integers(0, max_exp), hs.integers(0, max_exp))
                          .filter(lambda e: e != (0, 0)), max_size=4))
    return minimalize(gens + extra)


@pytest.fixture
def xy():
    return Polynomial.var("x", XY), Polynomial.var("y", XY)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
