"""Exact rational polynomials in at most three variables.

Coefficients are :class:`fractions.Fraction`.  Multivariate polynomials are
sparse maps from exponent tuples to nonzero coefficients; univariate helpers
use a dense ascending coefficient list.  Everything is immutable.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, NotHomogeneous

Rational = Fraction

VARIABLES = ("x", "y", "z")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


# graded-lexicographic, largest first
def _grlex_key(exp):
    return (-sum(exp), tuple(-e for e in exp))


class Polynomial:
    """Sparse polynomial over Q in the variables ``variables`` (at most 3)."""

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        variables = tuple(variables)
        if len(variables) > 3:
            raise DimensionMismatch("at most three variables are supported")
        if len(set(variables)) != len(variables):
            raise DimensionMismatch(f"repeated variable in {variables}")
        acc: dict[tuple[int, ...], Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables) or any(e < 0 for e in exp):
                raise DimensionMismatch(f"bad exponent {exp} for variables {variables}")
            c = _as_fraction(c)
            if c:
                acc[exp] = acc.get(exp, 0) + c
        self.variables = variables
        self._terms = MappingProxyType({e: c for e, c in acc.items() if c})
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> Polynomial:
        # trusted path: exponents valid, no zero coefficients
        p = object.__new__(cls)
        p.variables = variables
        p._terms = MappingProxyType(terms)
        p._hash = None
        return p

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, variables, c) -> Polynomial:
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def var(cls, name: str, variables) -> Polynomial:
        variables = tuple(variables)
        if name not in variables:
            raise DimensionMismatch(f"{name!r} not among {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    @classmethod
    def zero(cls, variables) -> Polynomial:
        return cls(variables)

    # -- basic queries ------------------------------------------------
    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return self._terms

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatch("point length differs from variable count")
        point = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            t = c
            for v, e in zip(point, exp):
                if e:
                    t *= v**e
            total += t
        return total

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise DimensionMismatch(
                    f"variables differ: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial._raw(self.variables, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Polynomial:
        c = _as_fraction(c)
        return Polynomial(self.variables, {e: c * v for e, v in self._terms.items()})

    def map_exponents(self, fn) -> Polynomial:
        """Apply ``fn`` to every exponent vector, summing colliding terms."""
        terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in self._terms.items():
            e2 = tuple(fn(e))
            terms[e2] = terms.get(e2, 0) + c
        return Polynomial(self.variables, terms)

    # -- comparison / display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (exp, c) in enumerate(self.sorted_terms()):
            mono = " ".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a} {mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self.variables!r}, {str(self)!r})"


def ord_at_origin(p: Polynomial):
    """Order of vanishing at the origin: minimal total degree of a term.

    Returns ``math.inf`` for the zero polynomial.
    """
    if p.nvars != 2:
        raise DimensionMismatch("ord_at_origin expects a polynomial in two variables")
    return min((sum(e) for e in p.terms), default=math.inf)


def translate(p: Polynomial, point: Sequence) -> Polynomial:
    """Return q with q(v) = p(v + point)."""
    if len(point) != p.nvars:
        raise DimensionMismatch("point length differs from variable count")
    point = [_as_fraction(c) for c in point]
    expansions: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}

    def expand(i, e):
        # (v_i + point_i)^e as [(power, coefficient)]
        key = (i, e)
        if key not in expansions:
            c = point[i]
            expansions[key] = [(k, math.comb(e, k) * c ** (e - k))
                               for k in range(e + 1) if c or k == e]
        return expansions[key]

    terms: dict[tuple[int, ...], Fraction] = {}
    for exp, coef in p.terms.items():
        for combo in itertools.product(*(expand(i, e) for i, e in enumerate(exp))):
            c = coef
            for _, ck in combo:
                c *= ck
            key = tuple(k for k, _ in combo)
            terms[key] = terms.get(key, 0) + c
    return Polynomial._raw(p.variables, {e: c for e, c in terms.items() if c})


def dehomogenize(F: Polynomial, chart: str) -> Polynomial:
    """Set the variable ``chart`` to 1.

    The result keeps the remaining variables in their original order, so the
    chart ``x`` gives (y, z), ``y`` gives (x, z) and ``z`` gives (x, y).
    """
    if F.nvars != 3:
        raise DimensionMismatch("dehomogenize expects a form in three variables")
    if not F.is_homogeneous():
        raise NotHomogeneous(f"{F} is not homogeneous")
    k = F.variables.index(chart)
    rest = tuple(v for v in F.variables if v != chart)
    terms: dict[tuple[int, ...], Fraction] = {}
    for exp, c in F.terms.items():
        e2 = exp[:k] + exp[k + 1:]
        terms[e2] = terms.get(e2, 0) + c
    return Polynomial(rest, terms)


def homogenize(p: Polynomial, var: str = "z", degree: int | None = None) -> Polynomial:
    """Homogenize a two-variable polynomial with a new last variable ``var``."""
    if p.nvars != 2:
        raise DimensionMismatch("homogenize expects a polynomial in two variables")
    d = p.degree() if degree is None else degree
    if d < p.degree():
        raise DimensionMismatch(f"degree {d} is below the polynomial's degree {p.degree()}")
    return Polynomial(p.variables + (var,),
                      {e + (d - sum(e),): c for e, c in p.terms.items()})


def restrict(p: Polynomial, index: int, value) -> UnivariatePolynomial:
    """Fix variable ``index`` of a two-variable polynomial at ``value``.

    The result is univariate in the other variable.
    """
    if p.nvars != 2:
        raise DimensionMismatch("restrict expects a polynomial in two variables")
    value = _as_fraction(value)
    other = 1 - index
    coeffs: dict[int, Fraction] = {}
    for exp, c in p.terms.items():
        coeffs[exp[other]] = coeffs.get(exp[other], 0) + c * value ** exp[index]
    return UnivariatePolynomial.from_dict(coeffs)


def coefficients_in(p: Polynomial, index: int) -> dict[int, UnivariatePolynomial]:
    """View a two-variable polynomial as a polynomial in variable ``index``
    whose coefficients are univariate in the other variable."""
    other = 1 - index
    buckets: dict[int, dict[int, Fraction]] = {}
    for exp, c in p.terms.items():
        b = buckets.setdefault(exp[index], {})
        b[exp[other]] = b.get(exp[other], 0) + c
    return {k: UnivariatePolynomial.from_dict(v) for k, v in buckets.items()}


class UnivariatePolynomial:
    """Dense univariate polynomial, coefficients listed from the constant term up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_dict(cls, d: Mapping[int, Fraction]) -> UnivariatePolynomial:
        if not d:
            return cls()
        n = max(d)
        return cls(d.get(i, 0) for i in range(n + 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> UnivariatePolynomial:
        p = cls([1])
        for r in roots:
            p = p * cls([-_as_fraction(r), 1])
        return p

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def _coerce(self, other):
        if isinstance(other, UnivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UnivariatePolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UnivariatePolynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree()
        q = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                q[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UnivariatePolynomial(q), UnivariatePolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> UnivariatePolynomial:
        if self.is_zero():
            return self
        inv = 1 / self.lead
        return UnivariatePolynomial(c * inv for c in self.coeffs)

    def derivative(self) -> UnivariatePolynomial:
        return UnivariatePolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UnivariatePolynomial([other])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_polynomial(self, var: str = "t") -> Polynomial:
        return Polynomial((var,), {(i,): c for i, c in enumerate(self.coeffs)})

    def __str__(self):
        return str(self.to_polynomial())

    def __repr__(self):
        return f"UnivariatePolynomial({str(self)!r})"


def gcd_univariate(a: UnivariatePolynomial, b: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic gcd by the Euclidean remainder sequence."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _primitive_integer(p: UnivariatePolynomial) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _primes():
    n = 2
    while True:
        if all(n % q for q in range(2, math.isqrt(n) + 1)):
            yield n
        n += 1


def _eval_mod(cs, x, mod):
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % mod
    return acc


def _trim_mod(cs, p):
    cs = [c % p for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _gcd_degree_mod(a, b, p):
    a, b = _trim_mod(a, p), _trim_mod(b, p)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % p
            a = _trim_mod(a, p)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _integer_roots_monic(cs: list[int]) -> list[int]:
    """Integer roots of a squarefree monic integer polynomial.

    Roots are found modulo a prime where the reduction stays squarefree,
    Hensel-lifted past twice the Cauchy bound, and checked exactly.
    """
    n = len(cs) - 1
    if n == 0:
        return []
    if n == 1:
        return [-cs[0]]
    bound = 1 + max(abs(c) for c in cs[:-1])
    deriv = [i * c for i, c in enumerate(cs) if i]
    for p in _primes():
        if _gcd_degree_mod(cs, deriv, p) == 0:
            break
    roots = []
    for r0 in range(p):
        if _eval_mod(cs, r0, p):
            continue
        r, mod = r0, p
        while mod <= 2 * bound:
            mod = mod * mod
            fr = _eval_mod(cs, r, mod)
            dr = _eval_mod(deriv, r, mod)
            r = (r - fr * pow(dr, -1, mod)) % mod
        s = r if r <= mod // 2 else r - mod
        if _horner_int(cs, s) == 0:
            roots.append(s)
    return roots


def _horner_int(cs, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def rational_roots(a: UnivariatePolynomial) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial, sorted ascending."""
    if a.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    roots = []
    cs = list(a.coeffs)
    k = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    if k:
        roots.append(Fraction(0))
    if len(cs) <= 1:
        return roots
    sqf = UnivariatePolynomial(cs)
    g = gcd_univariate(sqf, sqf.derivative())
    sqf = sqf // g
    ints = _primitive_integer(sqf)
    n = len(ints) - 1
    lead = ints[-1]
    # s = lead * t turns the polynomial monic with integer coefficients
    monic = [ints[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    roots.extend(Fraction(s, lead) for s in _integer_roots_monic(monic))
    return sorted(roots)


def squarefree_and_rational_roots(a: UnivariatePolynomial):
    """Rational roots with multiplicities, plus the degree left over.

    Returns ``(roots, residual_degree)`` where ``roots`` is a list of
    ``(root, multiplicity)`` sorted by root and ``residual_degree`` counts
    the non-rational roots with multiplicity.
    """
    if a.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    out = []
    rest = a
    for r in rational_roots(a):
        lin = UnivariatePolynomial([-r, 1])
        mult = 0
        while True:
            q, rem = divmod(rest, lin)
            if not rem.is_zero():
                break
            rest = q
            mult += 1
        out.append((r, mult))
    return out, rest.degree()


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant; integer matrices take the fraction-free Bareiss path."""
    if all(isinstance(v, int) for row in rows for v in row):
        return Fraction(_bareiss([list(row) for row in rows]))
    m = [[_as_fraction(v) for v in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                row_r, row_c = m[r], m[col]
                for c in range(col, n):
                    row_r[c] -= f * row_c[c]
    return det


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - a * rk[j]) // prev
        prev = pk
    return sign * m[n - 1][n - 1]


def sylvester_matrix(a: Sequence, b: Sequence) -> list[list]:
    """Sylvester matrix of two coefficient lists given highest degree first."""
    da, db = len(a) - 1, len(b) - 1
    n = da + db
    rows = []
    for i in range(db):
        rows.append([0] * i + list(a) + [0] * (n - da - 1 - i))
    for i in range(da):
        rows.append([0] * i + list(b) + [0] * (n - db - 1 - i))
    return rows


def interpolate(xs: Sequence, ys: Sequence) -> UnivariatePolynomial:
    """Newton divided-difference interpolation through the given points."""
    xs = [_as_fraction(x) for x in xs]
    coef = [_as_fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = UnivariatePolynomial([coef[-1]])
    for i in range(n - 2, -1, -1):
        result = result * UnivariatePolynomial([-xs[i], 1]) + coef[i]
    return result


def resultant(p: Polynomial, q: Polynomial, index: int) -> UnivariatePolynomial:
    """Resultant eliminating variable ``index`` of two two-variable polynomials.

    The Sylvester determinant is evaluated at enough integer values of the
    other variable and interpolated, so the result is exact.
    """
    if p.nvars != 2 or q.nvars != 2:
        raise DimensionMismatch("resultant expects polynomials in two variables")
    if p.is_zero() or q.is_zero():
        return UnivariatePolynomial()
    cp, cq = coefficients_in(p, index), coefficients_in(q, index)
    dp, dq = max(cp), max(cq)
    if dp == 0 and dq == 0:
        return UnivariatePolynomial([1])
    other = 1 - index
    bound = dq * p.degree_in(other) + dp * q.degree_in(other)
    # integer inputs keep every Sylvester determinant fraction-free;
    # Res(s*p, t*q) = s^dq * t^dp * Res(p, q)
    sp, sq = _denominator_lcm(p), _denominator_lcm(q)
    ip = {k: [int(c * sp) for c in u.coeffs] for k, u in cp.items()}
    iq = {k: [int(c * sq) for c in u.coeffs] for k, u in cq.items()}
    xs = list(range(bound + 1))
    ys = []
    for x in xs:
        a = [_horner_int(ip[k], x) if k in ip else 0 for k in range(dp, -1, -1)]
        b = [_horner_int(iq[k], x) if k in iq else 0 for k in range(dq, -1, -1)]
        ys.append(_bareiss(sylvester_matrix(a, b)))
    scale = Fraction(1, sp ** dq * sq ** dp)
    return interpolate(xs, ys) * scale


def _denominator_lcm(p: Polynomial) -> int:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return den


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Replace the i-th variable of ``p`` by ``images[i]``.

    All images must share one variable tuple, which becomes the result's.
    """
    if len(images) != p.nvars:
        raise DimensionMismatch("need one image per variable")
    target = images[0].variables
    result = Polynomial.zero(target)
    cache: dict[tuple[int, int], Polynomial] = {}
    for exp, c in p.terms.items():
        t = Polynomial.constant(target, c)
        for i, e in enumerate(exp):
            if e:
                if (i, e) not in cache:
                    cache[(i, e)] = images[i] ** e
                t = t * cache[(i, e)]
        result = result + t
    return result
