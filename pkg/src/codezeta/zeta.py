"""Zeta polynomials P(T) for codes, the duality functional equation, the
coefficient bound d+1 <= q+1+a, and the two-variable zeta Z(T, u)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactmath import (
    BiPoly,
    RatFun,
    UniPoly,
    mobius_compose,
    ratfun_equal,
    series_quotient,
    solve_linear,
)


class CrossCheckError(RuntimeError):
    """The two independent routes to P(T) disagree."""


class StructuralError(RuntimeError):
    pass


@dataclass(frozen=True)
class ZetaPolynomial:
    P: UniPoly
    q: int
    n: int
    k: int
    d: int
    d_dual: int

    @property
    def g(self):
        return self.n + 1 - self.k - self.d

    @property
    def g_dual(self):
        return self.k + 1 - self.d_dual


@dataclass(frozen=True)
class TwoVarZeta:
    value: RatFun  # variables (T, u)
    g: int


def _infer_k(a):
    """Recover k from sum A_w = q^k; the a-values determine the code size."""
    total = sum(aw * comb(a.n, w) for w, aw in enumerate(a.a_list))
    if total.denominator != 1:
        raise ValueError("normalized enumerator does not sum to an integer")
    total = total.numerator
    k = 0
    size = 1
    while size < total:
        size *= a.q
        k += 1
    if size != total:
        raise ValueError("code size is not a power of q")
    return k


def zeta_from_normalized(a, k=None, d_dual=None):
    """Solve Definition-2 style: P(T)(1-T)^d/(1-qT) == a(T/(1-T)) mod T^(n-d+1).

    The system is triangular in p_0..p_{n-d} because the series
    S(T) = (1-T)^d/(1-qT) has S(0) = 1.
    """
    n, d, q = a.n, a.d, a.q
    order = n - d
    target = mobius_compose(a.a_poly, order)
    s = series_quotient(UniPoly([1, -1]) ** d, UniPoly([1, -q]), order)
    p = []
    for m in range(order + 1):
        acc = target.coeff(m)
        for j in range(m):
            acc -= p[j] * s.coeff(m - j)
        p.append(acc)
    P = UniPoly(p)
    if k is None:
        k = _infer_k(a)
    if d_dual is None:
        d_dual = n + 2 - d - P.degree
    return ZetaPolynomial(P=P, q=q, n=n, k=k, d=d, d_dual=d_dual)


def _geom(q, j):
    # coefficient of T^j in 1/((1-T)(1-qT)), i.e. (q^(j+1)-1)/(q-1)
    if j < 0:
        return 0
    return (q ** (j + 1) - 1) // (q - 1)


def zeta_from_enumerator_def1(A):
    """Solve the original definition directly: for every monomial x^(n-i) y^i,
    the T^(n-d) coefficient of P(T)/((1-T)(1-qT)) (y+(x-y)T)^n must equal
    A_i/(q-1). Full bivariate route; used as an independent verifier."""
    q, n, d = A.q, A.n, A.d
    nun = n - d + 1
    matrix = []
    rhs = []
    for i in range(n + 1):
        row = []
        for l in range(nun):
            acc = 0
            for m in range(n - i, n + 1):
                gj = _geom(q, n - d - m - l)
                if gj:
                    acc += comb(n, m) * comb(m, n - i) * (-1) ** (m - (n - i)) * gj
            row.append(Fraction(acc))
        matrix.append(row)
        rhs.append(Fraction(A.counts[i], q - 1) if i > 0 else Fraction(0))
    try:
        sol, _, nullity = solve_linear(matrix, rhs)
    except ValueError:
        raise CrossCheckError(
            "weight distribution is inconsistent with the direct zeta definition"
        ) from None
    if nullity:
        raise CrossCheckError("direct zeta definition is underdetermined")
    return ZetaPolynomial(
        P=UniPoly(sol), q=q, n=n, k=A.k, d=d, d_dual=A.d_dual
    )


def check_functional_eq(Pc, Pd):
    """True iff Pd(T) = Pc(1/qT) q^g T^(g+g_dual) as an exact polynomial."""
    g, gd, q = Pc.g, Pc.g_dual, Pc.q
    top = g + gd
    coeffs = [Fraction(0)] * (top + 1)
    for j, pj in enumerate(Pc.P.coeffs):
        if pj:
            e = top - j
            if e < 0:
                return False  # transform is not a polynomial
            coeffs[e] += pj * Fraction(q) ** (g - j)
    return UniPoly(coeffs) == Pd.P


def a_coefficient_bound(P, a_list):
    """Extract a = p_1/p_0 from P = (a_d/(q-1))(1 + aT + ...), verify the
    relation a_d(a - d + q) = a_{d+1}, and report the bound d+1 <= q+1+a."""
    p0 = P.P.coeff(0)
    if p0 == 0:
        raise StructuralError("zeta polynomial with zero constant term")
    q, d, n = P.q, P.d, P.n
    a = P.P.coeff(1) / p0
    a_d = Fraction(a_list[d])
    a_d1 = Fraction(a_list[d + 1]) if d + 1 <= n else Fraction(0)
    relation = a_d * (a - d + q) == a_d1
    bound = q + 1 + a
    return {
        "a": a,
        "relation_holds": relation,
        "bound": bound,
        "bound_holds": Fraction(d + 1) <= bound,
    }


def _divide_by_u_minus_1(terms):
    """Exact division of a (T, u) polynomial by (u - 1)."""
    by_u = {}
    for (t, u), c in terms.items():
        by_u.setdefault(u, {})[t] = c
    top = max(by_u) if by_u else 0
    quotient = {}
    carry = {}  # current quotient coefficient (a poly in T), u-degree descending
    for u in range(top, 0, -1):
        cur = dict(carry)
        for t, c in by_u.get(u, {}).items():
            cur[t] = cur.get(t, Fraction(0)) + c
        for t, c in cur.items():
            if c:
                quotient[(t, u - 1)] = c
        carry = cur
    remainder = dict(by_u.get(0, {}))
    for t, c in carry.items():
        remainder[t] = remainder.get(t, Fraction(0)) + c
    if any(c for c in remainder.values()):
        raise StructuralError("numerator is not divisible by (u - 1)")
    return BiPoly(quotient)


def _subs_uT_invT(poly, shift):
    """x^i y^j -> (uT)^i (1/T)^j, cleared by T^shift; returns a (T, u) BiPoly."""
    out = {}
    for (i, j), c in poly.terms.items():
        t_exp = shift + i - j
        if t_exp < 0:
            raise StructuralError("insufficient T power to clear the y tail")
        key = (t_exp, i)
        out[key] = out.get(key, Fraction(0)) + c
    return BiPoly(out)


def two_var_zeta(Wn_plus, k, n, g):
    """Z(T, u) from W_n^+ via Z(T,u)(u-1)T^(1-g) = W_n^+(uT, 1/T).

    Multiplies through by T^(n-k+1) (enough to clear the y^(n-k+1) tail term),
    then divides the numerator exactly by (u-1); non-divisibility flags a
    broken W_n^+ construction.
    """
    shift = n - k + 1
    num = _subs_uT_invT(Wn_plus.num, shift)
    den = _subs_uT_invT(Wn_plus.den, shift)
    num = _divide_by_u_minus_1(num.terms)
    if g >= 1:
        num = num * BiPoly.monomial(g - 1, 0)
    else:
        den = den * BiPoly.monomial(1 - g, 0)
    return TwoVarZeta(value=RatFun(num, den), g=g)


def check_two_var_compat(Z, P):
    """True iff Z(T, q) equals P(T)/((1-T)(1-qT)) by cross-multiplication."""
    q = P.q
    num_t = Z.value.num.subs_second(q)
    den_t = Z.value.den.subs_second(q)
    one_var_den = UniPoly([1, -1]) * UniPoly([1, -q])
    return num_t * one_var_den == den_t * P.P


def two_var_functional_eq(Z):
    """Exploratory check of Z(T,u) = Z(1/(uT), u) u^(g-1) T^(2g-2).

    The relation is known for curves; for codes this simply reports whether
    it happens to hold. Not asserted anywhere.
    """
    g = Z.g

    def flip(poly, t_shift, u_shift):
        out = {}
        for (a, b), c in poly.terms.items():
            key = (t_shift - a, b + u_shift - a)
            out[key] = out.get(key, Fraction(0)) + c
        if any(t < 0 or u < 0 for (t, u) in out):
            raise StructuralError("clearing exponents were too small")
        return BiPoly(out)

    exps = list(Z.value.num.terms) + list(Z.value.den.terms)
    t_shift = max(a for a, _ in exps)
    u_shift = max(max(a - b for (a, b) in exps), 0) + t_shift
    num = flip(Z.value.num, t_shift, u_shift)
    den = flip(Z.value.den, t_shift, u_shift)
    # multiply by u^(g-1) T^(2g-2), putting negative powers in the denominator
    if g >= 1:
        num = num * BiPoly.monomial(2 * g - 2, g - 1)
    else:
        den = den * BiPoly.monomial(2 - 2 * g, 1 - g)
    return ratfun_equal(Z.value, RatFun(num, den))
