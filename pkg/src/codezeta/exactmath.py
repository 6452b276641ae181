"""Exact rational arithmetic: dense univariate polynomials, sparse bivariate
polynomials, truncated power series and rational-function pairs.

All coefficients are `fractions.Fraction`; every operation is exact and pure.
Degrees stay small throughout (codes of length <= ~24), so a dense list in one
variable and a dict keyed by exponent pairs in two variables are plenty.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def binomial(a, k):
    """Generalized binomial a(a-1)...(a-k+1)/k! for any integer a, k >= 0.

    binomial(a, 0) = 1 for every a (empty product), including negative a.
    """
    if k < 0:
        raise ValueError("lower index must be nonnegative")
    if a >= 0:
        return math.comb(a, k)
    num = 1
    for i in range(k):
        num *= a - i
    return num // math.factorial(k)


class UniPoly:
    """Dense univariate polynomial; coefficient index = degree.

    The zero polynomial has an empty coefficient list and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, deg, c=1):
        return cls([0] * deg + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """Substitute another polynomial for the variable (Horner)."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, m):
        """Multiply by t^m."""
        if self.is_zero():
            return self
        return UniPoly((Fraction(0),) * m + self.coeffs)

    def truncated(self, order):
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self, "t")


def format_poly(p, var="t"):
    if p.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c} {var}" if c != 1 else var)
        else:
            parts.append(f"{c} {var}^{i}" if c != 1 else f"{var}^{i}")
    return " + ".join(parts).replace("+ -", "- ")


class TruncatedSeries:
    """A power series class modulo T^(order+1); length order+1 coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def coeff(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)]
        )

    def __sub__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries(
            order, [self.coeffs[i] - other.coeffs[i] for i in range(order + 1)]
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, [c * other for c in self.coeffs])
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a:
                for j in range(order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(order, out)

    __rmul__ = __mul__

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __repr__(self):
        return f"TruncatedSeries({self.order}, {list(self.coeffs)!r})"


def series_quotient(num, den, order):
    """num/den modulo T^(order+1); den must be invertible, i.e. den(0) != 0."""
    if den.coeff(0) == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    inv0 = 1 / den.coeff(0)
    out = []
    for m in range(order + 1):
        acc = num.coeff(m)
        for j in range(1, m + 1):
            dj = den.coeff(j)
            if dj:
                acc -= dj * out[m - j]
        out.append(acc * inv0)
    return TruncatedSeries(order, out)


def mobius_compose(a, order):
    """Substitute t <- T/(1-T) in a(t), truncated mod T^(order+1).

    Uses T^j (1-T)^(-j) = sum_i C(i+j-1, j-1) T^(i+j).
    """
    out = [Fraction(0)] * (order + 1)
    if not a.is_zero():
        out[0] = a.coeff(0)
        for m in range(1, order + 1):
            acc = Fraction(0)
            for j in range(1, min(m, a.degree) + 1):
                aj = a.coeff(j)
                if aj:
                    acc += aj * binomial(m - 1, j - 1)
            out[m] = acc
    return TruncatedSeries(order, out)


class BiPoly:
    """Sparse bivariate polynomial: {(i, j): coeff} with no stored zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    key = (int(i), int(j))
                    c0 = t.get(key)
                    c = c if c0 is None else c0 + c
                    if c:
                        t[key] = c
                    elif key in t:
                        del t[key]
        self.terms = t

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_uni(cls, p, var=0):
        """Lift a UniPoly into the first (var=0) or second (var=1) variable."""
        if var == 0:
            return cls({(i, 0): c for i, c in enumerate(p.coeffs)})
        return cls({(0, i): c for i, c in enumerate(p.coeffs)})

    def coeff(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        t = dict(self.terms)
        for key, c in other.terms.items():
            s = t.get(key, Fraction(0)) + c
            if s:
                t[key] = s
            elif key in t:
                del t[key]
        out = BiPoly()
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = BiPoly()
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            out = BiPoly()
            if other:
                out.terms = {k: c * other for k, c in self.terms.items()}
            return out
        t = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                s = t.get(key, Fraction(0)) + c1 * c2
                if s:
                    t[key] = s
                elif key in t:
                    del t[key]
        out = BiPoly()
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, e):
        result = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval(self, x, y):
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * Fraction(x) ** i * Fraction(y) ** j
        return acc

    def subs_second(self, value):
        """Evaluate the second variable at a scalar, leaving a UniPoly."""
        value = Fraction(value)
        out = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, Fraction(0)) + c * value**j
        deg = max(out) if out else -1
        return UniPoly([out.get(i, Fraction(0)) for i in range(deg + 1)])

    def max_exp(self, var):
        if not self.terms:
            return -1
        return max(k[var] for k in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"BiPoly({dict(self.sorted_terms())!r})"


class RatFun:
    """Ratio of two bivariate polynomials; no canonicalization is attempted.

    Equality is decided by cross-multiplication (ratfun_equal), never by gcd.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if isinstance(num, UniPoly):
            num = BiPoly.from_uni(num)
        if isinstance(den, UniPoly):
            den = BiPoly.from_uni(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"


def ratfun_equal(f, g):
    """True iff f.num * g.den == g.num * f.den as polynomials."""
    return f.num * g.den == g.num * f.den


def solve_linear(matrix, rhs):
    """Exact Gaussian elimination for matrix . x = rhs over the rationals.

    Returns (solution, rank, nullity). solution is None when the system is
    consistent but underdetermined. Raises ValueError on inconsistency.
    """
    m = len(matrix)
    ncols = len(matrix[0]) if m else 0
    rows = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    rank = 0
    pivots = []
    for col in range(ncols):
        pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [v / pv for v in rows[rank]]
        for r in range(m):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    for r in range(rank, m):
        if rows[r][ncols] != 0:
            raise ValueError("inconsistent linear system")
    nullity = ncols - rank
    if nullity:
        return None, rank, nullity
    sol = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        sol[col] = rows[r][ncols]
    return sol, rank, nullity


def interpolate(points):
    """Lagrange interpolation through (x, y) pairs with distinct x."""
    result = UniPoly()
    xs = [Fraction(x) for x, _ in points]
    for i, (_, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = UniPoly([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1])
                denom *= xs[i] - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
