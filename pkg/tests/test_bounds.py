from fractions import Fraction

import pytest

from codezeta.bounds import (
    LemmaCheckError,
    check_bounds,
    divisibility,
    g_from_zeta,
    g_poly,
    h_poly,
    proof_zero_bound,
    subcode_average_identity,
    zero_count_audit,
)
from codezeta.code import weight_distribution
from codezeta.enumerator import normalize


def test_divisibility(hamming74, ext_hamming84, hexacode63):
    assert divisibility(weight_distribution(hamming74)) == 1
    assert divisibility(weight_distribution(ext_hamming84)) == 4
    assert divisibility(weight_distribution(hexacode63)) == 2


def test_g_poly_hamming(hamming74):
    wd = weight_distribution(hamming74)
    gw = g_poly(normalize(wd), wd.d_dual)
    assert gw.g.degree == 3  # n - d_dual
    assert [gw.g(w) for w in range(1, 8)] == [
        -1,
        0,
        Fraction(1, 5),
        0,
        Fraction(-1, 5),
        0,
        1,
    ]


def test_g_poly_rejects_wrong_dual_distance(hamming74):
    a = normalize(weight_distribution(hamming74))
    with pytest.raises(LemmaCheckError):
        g_poly(a, 7)


def test_g_from_zeta_matches_interpolation(hamming74, corpus):
    wd = weight_distribution(hamming74)
    a = normalize(wd)
    from codezeta.zeta import zeta_from_normalized

    P = zeta_from_normalized(a, k=hamming74.k, d_dual=wd.d_dual)
    assert g_from_zeta(P).g == g_poly(a, wd.d_dual).g
    for entry in corpus[:15]:
        expected = g_poly(entry.norm, entry.wd.d_dual).g
        assert g_from_zeta(entry.P).g == expected


def test_h_poly_ext_hamming(ext_hamming84):
    wd = weight_distribution(ext_hamming84)
    h = h_poly(normalize(wd), 4, wd.d_dual)
    assert h.degree <= 3  # n - d_dual less one for binary even all-one codes
    assert h(4) == Fraction(-4, 5)
    assert [h(w) for w in (5, 6, 7)] == [0, 0, 0]
    assert h(8) == Fraction(4, 5)


def test_h_poly_rejects_bad_divisor(hamming74):
    a = normalize(weight_distribution(hamming74))
    with pytest.raises(ValueError):
        h_poly(a, 0, 4)


def test_h_poly_matches_g_at_c_1(corpus):
    for entry in corpus[:10]:
        a = entry.norm
        d_dual = entry.wd.d_dual
        assert h_poly(a, 1, d_dual) == g_poly(a, d_dual).g


def test_check_bounds_ext_hamming(ext_hamming84):
    wd = weight_distribution(ext_hamming84)
    report = check_bounds(wd, wd)
    assert report["c"] == 4
    assert report["singleton_holds"] and report["divisibility_holds"]
    assert report["binary_even_allone"] and report["strong_holds"]
    ms = report["mallows_sloane"]
    assert ms == {"type": "II", "bound": 4, "holds": True, "extremal": True}


def test_check_bounds_hexacode(hexacode63):
    wd = weight_distribution(hexacode63)
    ms = check_bounds(wd, wd)["mallows_sloane"]
    assert ms == {"type": "IV", "bound": 4, "holds": True, "extremal": True}


def test_check_bounds_rep2(rep2):
    wd = weight_distribution(rep2)
    ms = check_bounds(wd, wd)["mallows_sloane"]
    assert ms == {"type": "I", "bound": 2, "holds": True, "extremal": True}


def test_check_bounds_selfdual105(selfdual105):
    wd = weight_distribution(selfdual105)
    report = check_bounds(wd, wd)
    ms = report["mallows_sloane"]
    assert ms["type"] == "I" and ms["bound"] == 4
    assert ms["holds"] and not ms["extremal"]


def test_check_bounds_corpus(corpus):
    for entry in corpus:
        report = check_bounds(entry.wd, entry.wd_dual)
        assert report["singleton_holds"]
        assert report["divisibility_holds"]


def test_subcode_average_identity(corpus):
    for entry in corpus:
        assert subcode_average_identity(entry.norm, entry.wd.d_dual)


def test_zero_count_audits():
    bound = proof_zero_bound(8, 4, 4, strong=True)
    assert bound == 1


def test_zero_audit_hamming(hamming74):
    wd = weight_distribution(hamming74)
    gw = g_poly(normalize(wd), wd.d_dual)
    audit = zero_count_audit(gw.g, proof_zero_bound(7, 3, 1), 2, 6)
    assert audit["zeros"] == [2, 4, 6]
    assert audit["meets"]


def test_zero_audit_ext_hamming(ext_hamming84):
    wd = weight_distribution(ext_hamming84)
    h = h_poly(normalize(wd), 4, wd.d_dual)
    audit = zero_count_audit(h, proof_zero_bound(8, 4, 4, strong=True), 5, 7)
    assert audit["zeros"] == [5, 6, 7]
    assert audit["meets"]
