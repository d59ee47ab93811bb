"""Closed-form Konno bounds for hypersurfaces and polarized K3 surfaces.

All arithmetic is on integers; square roots are handled by squaring with
sign guards, and the K3 auxiliary integer comes from ``math.isqrt``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb, factorial, isqrt

from .errors import InvalidGenus


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def h0_restricted(n: int, d: int, m: int) -> int:
    """h^0(X, O_X(m)) for a degree-d hypersurface X of dimension n."""
    return _binom(m + n + 1, n + 1) - _binom(m - d + n + 1, n + 1)


@dataclass(frozen=True)
class HypersurfaceBounds:
    n: int
    d: int
    h0_K: int
    h0_K_minus_H: int
    h0_K_plus_H: int
    lower: int
    upper: int
    note: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def konno_bounds_hypersurface(n: int, d: int) -> HypersurfaceBounds:
    """Bounds h0(K) - h0(K-H) <= Konno <= h0(K+H) - h0(K) with K = O(d-n-2).

    h1(K) vanishes on a smooth hypersurface of dimension >= 2.  When the
    canonical twist is negative (d <= n+1) both bounds are reported as 0.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    k = d - n - 2
    h0_K = h0_restricted(n, d, k)
    h0_KmH = h0_restricted(n, d, k - 1)
    h0_KpH = h0_restricted(n, d, k + 1)
    if k < 0:
        return HypersurfaceBounds(n, d, h0_K, h0_KmH, h0_KpH, 0, 0, note="fano/degenerate")
    return HypersurfaceBounds(n, d, h0_K, h0_KmH, h0_KpH,
                              lower=h0_K - h0_KmH, upper=h0_KpH - h0_K)


def asymptotic_ratio(n: int, d: int) -> Fraction:
    """upper(n, d) * n! / d^n, which tends to 1."""
    return Fraction(konno_bounds_hypersurface(n, d).upper * factorial(n), d ** n)


@dataclass(frozen=True)
class K3Bounds:
    d: int
    m: int
    g_min: int
    g_max: int
    m_choice: str = "largest"

    def to_json(self) -> dict:
        return {"d": self.d, "m": self.m, "g_min": self.g_min, "g_max": self.g_max,
                "m_choice": self.m_choice}


def k3_auxiliary_m(d: int) -> int:
    """Largest m >= 1 with (m+1)^2 <= 2d <= (m+2)^2."""
    m = isqrt(2 * d) - 1
    if (m + 1) ** 2 > 2 * d:
        m -= 1
    assert (m + 1) ** 2 <= 2 * d <= (m + 2) ** 2 and m >= 1, (d, m)
    return m


def konno_bounds_k3(d: int) -> K3Bounds:
    """Genus window for pencils on a K3 surface of genus d with Picard rank 1.

    ``g_min`` is the least g with 2g-2 >= sqrt(2d-2); ``g_max`` is the genus
    bound of the pencil of curves with an m-fold point at a fixed point.
    """
    if d < 3:
        raise InvalidGenus(f"K3 genus must be at least 3, got {d}")
    m = k3_auxiliary_m(d)
    assert (d + 1) - m * (m + 1) // 2 >= 2, (d, m)
    root = isqrt(2 * d - 2)
    if root * root < 2 * d - 2:
        root += 1
    # smallest even 2g-2 >= 1 whose square reaches 2d-2
    g_min = max(2, root + root % 2) // 2 + 1
    g_max = 1 + ((2 * d - 2) - m * (m - 1)) // 2
    return K3Bounds(d, m, g_min, g_max)


def k3_sweep(max_d: int) -> list[K3Bounds]:
    return [konno_bounds_k3(d) for d in range(3, max_d + 1)]
