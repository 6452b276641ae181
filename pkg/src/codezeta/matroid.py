"""Rank-generating (Whitney) polynomials of the column matroid of a code,
normalized variants with their infinite-tail completion, Greene's theorem in
plain and normalized form, and the Clifford-property analysis."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .code import (
    CapacityError,
    LinearCode,
    contains_code,
    dual_code,
    iter_subset_ranks,
    nullspace,
    row_space_equal,
    subset_rank,
    weight_distribution,
)
from .exactmath import BiPoly, RatFun, UniPoly


@dataclass(frozen=True)
class RankGenPoly:
    W: BiPoly  # sum over subsets A of x^(k - r(A)) y^(|A| - r(A))
    n: int
    k: int


@dataclass(frozen=True)
class NormalizedRankGen:
    Wn: BiPoly  # same sum with each size-i layer divided by C(n, i)
    n: int
    k: int


def _corank_nullity_counts(C):
    """counts[(size, rank)] = number of column subsets of that size and rank."""
    counts = {}
    for _, size, rank in iter_subset_ranks(C):
        key = (size, rank)
        counts[key] = counts.get(key, 0) + 1
    return counts


def rank_gen_poly(C):
    counts = _corank_nullity_counts(C)
    terms = {}
    for (size, rank), m in counts.items():
        key = (C.k - rank, size - rank)
        terms[key] = terms.get(key, 0) + m
    return RankGenPoly(W=BiPoly(terms), n=C.n, k=C.k)


def normalized_rank_gen(C):
    counts = {}
    for (size, rank), m in _corank_nullity_counts(C).items():
        key = (C.k - rank, size - rank)
        counts[key] = counts.get(key, Fraction(0)) + Fraction(m, comb(C.n, size))
    return NormalizedRankGen(Wn=BiPoly(counts), n=C.n, k=C.k)


def wn_plus(Wn):
    """W_n^+(x,y) = W_n + x^(k+1)/(1-x) + y^(n-k+1)/(1-y), over ((1-x)(1-y))."""
    k, n = Wn.k, Wn.n
    one_minus_x = BiPoly({(0, 0): 1, (1, 0): -1})
    one_minus_y = BiPoly({(0, 0): 1, (0, 1): -1})
    num = (
        Wn.Wn * one_minus_x * one_minus_y
        + BiPoly.monomial(k + 1, 0) * one_minus_y
        + BiPoly.monomial(0, n - k + 1) * one_minus_x
    )
    return RatFun(num, one_minus_x * one_minus_y)


def greene_weight_enumerator(W, q):
    """A(x,y) predicted by Greene's theorem:
    W_G(qy/(x-y), (x-y)/y) (x-y)^k y^(n-k), with denominators cleared.

    Passing q^e instead of q predicts the enumerator of the same generator
    matrix read over the degree-e extension field.
    """
    n, k = W.n, W.k
    x_minus_y = BiPoly({(1, 0): 1, (0, 1): -1})
    xmy_pow = [BiPoly.const(1)]
    for _ in range(n):
        xmy_pow.append(xmy_pow[-1] * x_minus_y)
    out = BiPoly()
    for (cor, nul), c in W.W.terms.items():
        term = xmy_pow[k - cor + nul] * BiPoly.monomial(0, cor - nul + n - k)
        out = out + term * (c * Fraction(q) ** cor)
    return out


def check_greene(A, W):
    """Compare A(x,y) with the Greene substitution of W_G, exactly."""
    predicted = greene_weight_enumerator(W, A.q)
    actual = BiPoly({(A.n - i, i): c for i, c in enumerate(A.counts)})
    return predicted == actual


def _normalized_enum_poly(A):
    # A_n(1, t) = sum A_i / C(n, i) t^i
    return UniPoly([Fraction(A.counts[i], comb(A.n, i)) for i in range(A.n + 1)])


def check_greene_normalized(A, Wn):
    """The normalized congruence
    A_n(1,t)(1+t)^(n+1) == W_n(qt/(1+t),(1+t)/t)(1+t)^k t^(n-k)  mod t^(n+1).

    Each W_n monomial x^a y^b contributes q^a t^(a-b+n-k) (1+t)^(k+b-a); both
    exponents are nonnegative because a <= k and b <= n-k.
    """
    n, k, q = Wn.n, Wn.k, A.q
    if n != A.n:
        raise ValueError("distribution and rank-generating lengths differ")
    one_plus_t = UniPoly([1, 1])
    lhs = (_normalized_enum_poly(A) * one_plus_t ** (n + 1)).truncated(n)
    rhs = UniPoly()
    for (a, b), c in Wn.Wn.terms.items():
        t_exp = a - b + n - k
        e = k + b - a
        if t_exp < 0 or e < 0:
            raise ValueError("rank-generating exponent out of range")
        rhs = rhs + (one_plus_t**e).shift(t_exp) * (c * Fraction(q) ** a)
    return lhs == rhs.truncated(n)


def greene_normalized_symmetric(A, Wn):
    """Full two-sided identity for codes with a symmetric A_n(s,t), using the
    same W_n on both sides (binary self-complementary case):

    A_n(s,t)(s+t)^(n+1) ==  W_n-part(t-side) + W_n-part(s-side).
    """
    n, k, q = A.n, A.k, A.q
    s_plus_t = BiPoly({(1, 0): 1, (0, 1): 1})
    an = BiPoly(
        {(n - i, i): Fraction(A.counts[i], comb(n, i)) for i in range(n + 1)}
    )
    lhs = an * s_plus_t ** (n + 1)

    def side(swap):
        out = BiPoly()
        for (a, b), c in Wn.Wn.terms.items():
            t_exp = a - b + n - k
            spt = s_plus_t ** (k + b - a)
            mono = (
                BiPoly.monomial(n + 1, t_exp)
                if not swap
                else BiPoly.monomial(t_exp, n + 1)
            )
            out = out + spt * mono * (c * Fraction(q) ** a)
        return out

    return lhs == side(swap=False) + side(swap=True)


def puncture_shorten_wn(Wn, which):
    """Averaged puncture/shorten acting on W_n: subtract y^(n-k) or x^k.

    Metadata follows the operation: puncturing keeps k (valid when d >= 2);
    shortening drops it by one (valid when the dual distance is >= 2).
    """
    n, k = Wn.n, Wn.k
    if which == "puncture":
        return NormalizedRankGen(
            Wn=Wn.Wn - BiPoly.monomial(0, n - k), n=n - 1, k=k
        )
    if which == "shorten":
        return NormalizedRankGen(
            Wn=Wn.Wn - BiPoly.monomial(k, 0), n=n - 1, k=k - 1
        )
    raise ValueError("which must be 'puncture' or 'shorten'")


def _support_subcode(C, inside):
    """Basis of codewords of C supported inside the column set `inside`."""
    outside = [j for j in range(C.n) if j not in inside]
    if outside:
        gen_out = [[row[j] for j in outside] for row in C.generator]
        transposed = [list(col) for col in zip(*gen_out)]
        messages = nullspace(C.field, transposed)
    else:
        messages = [
            tuple(1 if i == r else 0 for i in range(C.k)) for r in range(C.k)
        ]
    field = C.field
    words = []
    for m in messages:
        word = [0] * C.n
        for i, mi in enumerate(m):
            if mi:
                for j in range(C.n):
                    word[j] = field.add(word[j], field.mul(mi, C.generator[i][j]))
        words.append(tuple(word))
    return words


def _classify(C):
    dual = dual_code(C) if C.k < C.n else None
    if dual is None:
        return "other", None
    if row_space_equal(C, dual):
        return "self-dual", dual
    if contains_code(C, dual):
        return "contains-dual", dual
    wd = weight_distribution(C)
    wd_dual = weight_distribution(dual)
    if wd.counts == wd_dual.counts:
        return "formally-self-dual", dual
    return "other", dual


def clifford_check(C, mode="exhaustive", count=1000, seed=0):
    """Check 2 r(A) >= |A| over column subsets A and report the findings.

    For codes containing their dual the inequality must hold everywhere;
    for a self-dual code every proper equality witness must split the code as
    a direct sum of self-dual codes supported on A and on its complement.
    """
    classification, _ = _classify(C)
    violations = []
    witnesses = []
    checked = 0
    if mode == "exhaustive":
        subsets = iter_subset_ranks(C)
    elif mode == "sample":
        rng = random.Random(seed)

        def sampled():
            for _ in range(count):
                mask = rng.getrandbits(C.n)
                cols = [j for j in range(C.n) if mask >> j & 1]
                yield mask, len(cols), subset_rank(C, cols)

        subsets = sampled()
    else:
        raise ValueError("mode must be 'exhaustive' or 'sample'")
    full_mask = (1 << C.n) - 1
    for mask, size, rank in subsets:
        checked += 1
        if 2 * rank < size:
            violations.append(
                {"subset": _mask_cols(mask, C.n), "size": size, "rank": rank}
            )
        elif 2 * rank == size and 0 < size and mask != full_mask:
            witnesses.append((mask, size, rank))
    report = {
        "classification": classification,
        "mode": mode,
        "subsets_checked": checked,
        "violations": violations,
        "first_violation": violations[0] if violations else None,
        "equality_witnesses": [
            {"subset": _mask_cols(m, C.n), "rank": r} for m, _, r in witnesses
        ],
        "decompositions": [],
    }
    ok = not violations
    if classification == "self-dual":
        for mask, size, rank in witnesses:
            entry = _decomposition_report(C, mask, size, rank)
            report["decompositions"].append(entry)
            ok = ok and entry["ok"]
    report["ok"] = ok
    return report


def _mask_cols(mask, n):
    return [j for j in range(n) if mask >> j & 1]


def _decomposition_report(C, mask, size, rank):
    cols = set(_mask_cols(mask, C.n))
    comp = set(range(C.n)) - cols
    sub_a = _support_subcode(C, cols)
    sub_b = _support_subcode(C, comp)
    support_a = set()
    for w in sub_a:
        support_a |= {j for j, v in enumerate(w) if v}
    support_b = set()
    for w in sub_b:
        support_b |= {j for j, v in enumerate(w) if v}
    dim_formula = size - rank  # dual-subcode dimension from corank/nullity duality
    ok = (
        len(sub_a) + len(sub_b) == C.k
        and support_a == cols
        and support_b == comp
        and len(sub_a) == dim_formula
    )
    return {
        "subset": sorted(cols),
        "dim_on_subset": len(sub_a),
        "dim_on_complement": len(sub_b),
        "dim_formula": dim_formula,
        "ok": ok,
    }


def find_two_disjoint_bases(C):
    """First (lexicographic) partition of the columns of an n = 2k code into
    two independent k-sets, or None when no such partition exists."""
    n, k = C.n, C.k
    if n != 2 * k:
        raise ValueError("two disjoint bases need n = 2k")
    if n > 20:
        raise CapacityError("basis-partition search guarded at n <= 20")
    for a in combinations(range(n), k):
        if subset_rank(C, a) == k:
            b = tuple(j for j in range(n) if j not in a)
            if subset_rank(C, b) == k:
                return a, b
    return None
