"""Point blow-ups, clusters of infinitely near base points, and the
colength/multiplicity identities they satisfy for monomial ideals.

Blowing up the origin of the (x, y)-plane gives two charts:

* the x-chart, ``y = x*v``: a monomial x^a y^b becomes x^(a+b) v^b,
* the y-chart, ``x = u*y``: a monomial x^a y^b becomes u^a y^(a+b).

Dividing by the m-th power of the exceptional coordinate is the proper
transform.  Both the monomial-ideal and the pencil code use these maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from math import isqrt
from typing import Iterator

from . import staircase as st
from .errors import DepthExceeded, UnitIdeal
from .staircase import MonomialIdeal

DEFAULT_DEPTH_CAP = 64


def chart_exponent(e, chart: str, m: int):
    a, b = e
    if chart == "x":
        return (a + b - m, b)
    if chart == "y":
        return (a, a + b - m)
    raise ValueError(f"unknown chart {chart!r}")


@dataclass(frozen=True)
class ClusterNode:
    multiplicity: int
    chart: str = "root"
    point: str | None = None
    children: tuple[ClusterNode, ...] = ()

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError("cluster multiplicities are positive")

    def walk(self) -> Iterator[ClusterNode]:
        yield self
        for c in self.children:
            yield from c.walk()

    def to_json(self) -> dict:
        out = {"m": self.multiplicity, "chart": self.chart}
        if self.point is not None:
            out["point"] = self.point
        out["children"] = [c.to_json() for c in self.children]
        return out


@dataclass(frozen=True)
class ClusterTree:
    """A forest of base points; the ideal case has at most one root."""

    roots: tuple[ClusterNode, ...] = ()

    def nodes(self) -> Iterator[ClusterNode]:
        for r in self.roots:
            yield from r.walk()

    def multiplicities(self) -> list[int]:
        return [n.multiplicity for n in self.nodes()]

    def to_json(self) -> list:
        return [r.to_json() for r in self.roots]


@dataclass(frozen=True)
class ClusterSums:
    sum_m: int = 0
    sum_m_sq: int = 0
    sum_m_m_minus_1: int = 0
    sum_m_m_plus_1_half: int = 0

    @classmethod
    def of(cls, ms) -> ClusterSums:
        ms = list(ms)
        return cls(
            sum_m=sum(ms),
            sum_m_sq=sum(m * m for m in ms),
            sum_m_m_minus_1=sum(m * (m - 1) for m in ms),
            sum_m_m_plus_1_half=sum(m * (m + 1) // 2 for m in ms),
        )

    def consistent(self) -> bool:
        return (self.sum_m_m_minus_1 == self.sum_m_sq - self.sum_m
                and 2 * self.sum_m_m_plus_1_half == self.sum_m_sq + self.sum_m
                and self.sum_m_sq <= self.sum_m ** 2
                and self.sum_m >= _ceil_sqrt(self.sum_m_sq))

    def to_json(self) -> dict:
        return {
            "sum_m": self.sum_m,
            "sum_m_sq": self.sum_m_sq,
            "sum_m_m_minus_1": self.sum_m_m_minus_1,
            "sum_m_m_plus_1_half": self.sum_m_m_plus_1_half,
        }


def _ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def cluster_sums(t: ClusterTree) -> ClusterSums:
    return ClusterSums.of(t.multiplicities())


def transform_monomial(I: MonomialIdeal):
    """One blow-up of the origin: ``(m, x_chart_ideal, y_chart_ideal)``."""
    m = st.order(I)
    if m == 0:
        raise UnitIdeal("the unit ideal has no base point to blow up")
    x_chart = st.minimalize(chart_exponent(e, "x", m) for e in I.generators)
    y_chart = st.minimalize(chart_exponent(e, "y", m) for e in I.generators)
    # co-support on the exceptional line sits at the chart origins only
    assert x_chart.generators[0][0] == 0, x_chart
    assert y_chart.generators[-1][1] == 0, y_chart
    return m, x_chart, y_chart


def resolve_ideal(I: MonomialIdeal, depth_cap: int = DEFAULT_DEPTH_CAP) -> ClusterTree:
    """Cluster of base points of a finite-colength monomial ideal.

    Children are listed x-chart first.  The unit ideal gives an empty tree.
    """
    st._require_finite(I)

    def resolve(J: MonomialIdeal, chart: str, depth: int) -> ClusterNode:
        if depth > depth_cap:
            raise DepthExceeded(f"resolution of ({I}) is deeper than {depth_cap}")
        m, jx, jy = transform_monomial(J)
        children = tuple(resolve(K, c, depth + 1)
                         for K, c in ((jx, "x"), (jy, "y")) if not K.is_unit)
        return ClusterNode(m, chart, None, children)

    if I.is_unit:
        return ClusterTree()
    return ClusterTree((resolve(I, "root", 1),))


@dataclass
class HoskinDeligneReport:
    colength: int
    closure_colength: int
    hd_sum: int
    closed: bool
    verdict: str
    cluster: ClusterTree
    closure_cluster: ClusterTree
    trees_agree: bool = field(default=True)

    def to_json(self) -> dict:
        return {
            "colength": self.colength,
            "closure_colength": self.closure_colength,
            "hd_sum": self.hd_sum,
            "closed": self.closed,
            "verdict": self.verdict,
            "trees_agree": self.trees_agree,
            "cluster": self.cluster.to_json(),
            "closure_cluster": self.closure_cluster.to_json(),
        }


def hoskin_deligne_check(I: MonomialIdeal, depth_cap: int = DEFAULT_DEPTH_CAP) -> HoskinDeligneReport:
    """Compare colength with sum m(m+1)/2 over the cluster of the closure.

    ``equality`` for integrally closed input; ``strict`` when the ideal is
    not closed and its colength exceeds that of its closure, which in turn
    equals the cluster sum.  Anything else is a ``violation``.
    """
    closure = st.integral_closure(I)
    closed = closure == I
    tree = resolve_ideal(I, depth_cap)
    closure_tree = tree if closed else resolve_ideal(closure, depth_cap)
    hd = cluster_sums(closure_tree).sum_m_m_plus_1_half
    c, cc = st.colength(I), st.colength(closure)
    if closed and c == hd:
        verdict = "equality"
    elif not closed and cc == hd and c > cc:
        verdict = "strict"
    else:
        verdict = "violation"
    return HoskinDeligneReport(c, cc, hd, closed, verdict, tree, closure_tree,
                               trees_agree=tree == closure_tree)


def lech_holds(e: int, colength: int) -> bool:
    """Exact decision of e + sqrt(e) <= 2*colength."""
    gap = 2 * colength - e
    return gap >= 0 and gap * gap >= e


def _slack_string(e: int, colength: int) -> str:
    with localcontext() as ctx:
        ctx.prec = 50
        value = Decimal(2 * colength - e) - Decimal(e).sqrt()
        return str(value.quantize(Decimal("0.0001")) + 0)


@dataclass
class LechReport:
    e: int
    colength: int
    lhs_holds: bool
    slack: str
    equality: bool

    def to_json(self) -> dict:
        return {"e": self.e, "colength": self.colength, "holds": self.lhs_holds,
                "equality": self.equality, "slack": self.slack}


def lech_check(I: MonomialIdeal) -> LechReport:
    e = st.samuel_multiplicity(I)
    c = st.colength(I)
    gap = 2 * c - e
    return LechReport(e, c, lech_holds(e, c), _slack_string(e, c),
                      equality=gap >= 0 and gap * gap == e)


def multiplicity_from_cluster(I: MonomialIdeal, depth_cap: int = DEFAULT_DEPTH_CAP) -> int:
    """Sum of m_i^2 over the cluster of the integral closure."""
    e = cluster_sums(resolve_ideal(st.integral_closure(I), depth_cap)).sum_m_sq
    assert e == st.samuel_multiplicity(I), (str(I), e)
    return e
