"""Weight-enumerator algebra: MacWilliams transform, normalization, averaged
puncture/shorten operators and the binomially-weighted truncation invariant."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .code import WeightDistribution, macwilliams_counts
from .exactmath import TruncatedSeries, UniPoly


class InvalidDistributionError(ValueError):
    pass


@dataclass(frozen=True)
class NormalizedEnumerator:
    """a_w = A_w / C(n, w); a(t) = (a_d + a_{d+1} t + ... + a_n t^{n-d})/(q-1)."""

    q: int
    n: int
    d: int
    a_list: tuple  # a_0 .. a_n as Fraction
    a_poly: UniPoly


@dataclass(frozen=True)
class AveragedDistribution:
    """Rational-coefficient weight counts produced by averaged puncturing or
    shortening; same shape as a WeightDistribution but not integral."""

    q: int
    n: int
    counts: tuple

    @property
    def d(self):
        for i in range(1, self.n + 1):
            if self.counts[i]:
                return i
        return self.n + 1


def macwilliams(A):
    """MacWilliams transform: distribution of the dual [n, n-k] code."""
    try:
        counts = macwilliams_counts(A.q, A.n, A.k, A.counts)
    except ValueError as exc:
        raise InvalidDistributionError(str(exc)) from None
    d = next((i for i in range(1, A.n + 1) if counts[i]), A.n + 1)
    return WeightDistribution(
        q=A.q, n=A.n, k=A.n - A.k, counts=tuple(counts), d=d, d_dual=A.d
    )


def normalize_counts(q, n, counts):
    a_list = [Fraction(counts[w]) / comb(n, w) for w in range(n + 1)]
    d = next((i for i in range(1, n + 1) if a_list[i]), n + 1)
    if d > n:
        raise ValueError("no nonzero weight to normalize")
    a_poly = UniPoly([a_list[d + j] / (q - 1) for j in range(n - d + 1)])
    return NormalizedEnumerator(q=q, n=n, d=d, a_list=tuple(a_list), a_poly=a_poly)


def normalize(A):
    """Normalized enumerator of a (possibly rational, averaged) distribution."""
    return normalize_counts(A.q, A.n, A.counts)


def puncture_avg(A):
    """Coordinate-averaged puncturing: (1/n)(d/dx + d/dy) on A(x, y).

    Output counts live on length n-1 and may be non-integral rationals.
    """
    n = A.n
    if n < 2:
        raise ValueError("cannot puncture below length 1")
    counts = [Fraction(0)] * n
    for i in range(n):  # coefficient of x^(n-1-i) y^i
        counts[i] = (
            Fraction(n - i) * A.counts[i] + Fraction(i + 1) * A.counts[i + 1]
        ) / n
    return AveragedDistribution(q=A.q, n=n - 1, counts=tuple(counts))


def shorten_avg(A):
    """Coordinate-averaged shortening: (1/n)(d/dx) on A(x, y)."""
    n = A.n
    if n < 2:
        raise ValueError("cannot shorten below length 1")
    counts = [Fraction(n - i) * A.counts[i] / n for i in range(n)]
    return AveragedDistribution(q=A.q, n=n - 1, counts=tuple(counts))


def invariant_thm23(a):
    """The truncated series a(t)(1+t)^d mod t^(n-d+1)."""
    order = a.n - a.d
    prod = a.a_poly * UniPoly([1, 1]) ** a.d
    return prod.truncated(order)
