"""Seeded random inputs and the batch verification harness."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import staircase as st
from .algebra import Polynomial
from .blowup import (
    DEFAULT_DEPTH_CAP,
    ClusterSums,
    hoskin_deligne_check,
    lech_check,
    resolve_ideal,
)
from .errors import FixedComponent, NonRationalBasePoint
from .pencil import XYZ, Pencil, PencilReport, resolve_pencil
from .staircase import MonomialIdeal

MAX_EXPONENT = 10


def random_ideal(rng: random.Random, max_exponent: int = MAX_EXPONENT) -> MonomialIdeal:
    """A non-unit finite-colength monomial ideal with exponents <= max_exponent."""
    gens = [(rng.randint(1, max_exponent), 0), (0, rng.randint(1, max_exponent))]
    for _ in range(rng.randint(0, 4)):
        e = (rng.randint(0, max_exponent), rng.randint(0, max_exponent))
        if e != (0, 0):
            gens.append(e)
    return st.minimalize(gens)


def ideal_corpus(seed: int, count: int) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_ideal(rng) for _ in range(count)]


def _linear_form(rng: random.Random) -> Polynomial:
    while True:
        cs = [rng.randint(-3, 3) for _ in range(3)]
        if any(cs):
            return Polynomial(XYZ, {(1, 0, 0): cs[0], (0, 1, 0): cs[1], (0, 0, 1): cs[2]})


def _split_quadric(rng: random.Random) -> Polynomial:
    # often meets other factors irrationally; random_pencil redraws then
    while True:
        q = _linear_form(rng) * _linear_form(rng) + _linear_form(rng) * _linear_form(rng)
        if not q.is_zero():
            return q


def _random_form(rng: random.Random, degree: int) -> Polynomial:
    factors = []
    left = degree
    while left:
        roll = rng.random()
        if factors and roll < 0.2 and factors[-1].degree() <= left:
            factors.append(factors[-1])
            left -= factors[-1].degree()
        elif left >= 2 and roll < 0.35:
            factors.append(_split_quadric(rng))
            left -= 2
        else:
            factors.append(_linear_form(rng))
            left -= 1
    out = Polynomial.constant(XYZ, 1)
    for h in factors:
        out = out * h
    return out


def random_pencil(rng: random.Random, max_degree: int = 5,
                  depth_cap: int = DEFAULT_DEPTH_CAP) -> tuple[Pencil, PencilReport]:
    """A pencil of degree <= max_degree whose base locus is rational.

    Candidates with a fixed component or an irrational base point are
    discarded and redrawn from the same stream, as are candidates whose
    multiplicities share a factor: a pencil composed with a pencil has all
    multiplicities divisible by the composition degree, so gcd 1 certifies
    irreducible general members.
    """
    d = rng.randint(1, max_degree)
    while True:
        try:
            P = Pencil(_random_form(rng, d), _random_form(rng, d))
            report = resolve_pencil(P, depth_cap)
        except (FixedComponent, NonRationalBasePoint):
            continue
        if math.gcd(*report.cluster.multiplicities()) == 1:
            return P, report


def pencil_corpus(seed: int, count: int, max_degree: int = 5):
    rng = random.Random(seed)
    return [random_pencil(rng, max_degree) for _ in range(count)]


@dataclass
class SuiteResult:
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, dump):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(dump)


def _ideal_checks(I: MonomialIdeal):
    sums = ClusterSums.of(resolve_ideal(st.integral_closure(I)).multiplicities())
    e = st.samuel_multiplicity(I)
    hd = hoskin_deligne_check(I)
    lech = lech_check(I)
    hd_ok = (st.colength(st.integral_closure(I)) == sums.sum_m_m_plus_1_half
             and hd.verdict != "violation")
    return {
        "hoskin_deligne": hd_ok,
        "multiplicity": e == sums.sum_m_sq,
        "lech": lech.lhs_holds,
    }


def _pencil_checks(report: PencilReport, mutate: bool):
    ms = report.cluster.multiplicities()
    if mutate:
        ms[0] += 1
    sums = ClusterSums.of(ms)
    d = report.degree
    two_g_minus_2 = d * (d - 3) - sums.sum_m_m_minus_1
    return {
        "noether": sums.sum_m_sq == d * d and two_g_minus_2 % 2 == 0
        and two_g_minus_2 >= -2 and two_g_minus_2 == -3 * d + sums.sum_m,
        "konno": all(report.checks.values()),
    }


def run_corpus(seed: int, count: int, mutate_index: int | None = None) -> dict:
    """Run every checker on ``count`` ideals and ``count`` pencils.

    ``mutate_index`` bumps one multiplicity in the cluster of that pencil
    before the Noether check, which must surface as exactly one failure; it
    exists to test the harness itself.
    """
    suites = {name: SuiteResult() for name in
              ("hoskin_deligne", "multiplicity", "lech", "noether", "konno")}
    for i, I in enumerate(ideal_corpus(seed, count)):
        for name, ok in _ideal_checks(I).items():
            suites[name].record(ok, {"index": i, "ideal": str(I)})
    for i, (P, report) in enumerate(pencil_corpus(seed, count)):
        for name, ok in _pencil_checks(report, i == mutate_index).items():
            suites[name].record(ok, {"index": i, "f": str(P.f), "g": str(P.g)})
    return {
        "seed": seed,
        "count": count,
        "suites": {name: {"passed": s.passed, "failed": s.failed, "failures": s.failures}
                   for name, s in suites.items()},
    }
