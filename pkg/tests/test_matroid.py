import pytest

from codezeta.code import (
    CapacityError,
    LinearCode,
    parse_code,
    weight_distribution,
)
from codezeta.enumerator import puncture_avg, shorten_avg
from codezeta.exactmath import ratfun_equal
from codezeta.gf import field_new
from codezeta.matroid import (
    check_greene,
    check_greene_normalized,
    clifford_check,
    find_two_disjoint_bases,
    greene_normalized_symmetric,
    greene_weight_enumerator,
    puncture_shorten_wn,
    rank_gen_poly,
    wn_plus,
)


def test_rank_gen_poly_hamming(hamming74):
    W = rank_gen_poly(hamming74)
    assert W.W.eval(1, 1) == 2**7  # one term per column subset
    assert W.W.coeff(4, 0) == 1  # empty set
    assert W.W.coeff(0, 3) == 1  # full set
    assert W.W.coeff(3, 0) == 7  # singletons, all independent


def test_rank_gen_poly_code10(code10):
    W = rank_gen_poly(code10)
    # subsets: {} -> x, {0} -> 1, {1} -> xy, {0,1} -> y
    assert W.W.terms == {(1, 0): 1, (0, 0): 1, (1, 1): 1, (0, 1): 1}


def test_greene_fixtures(hamming74, hexacode63, ext_hamming84):
    for code in (hamming74, hexacode63, ext_hamming84):
        assert check_greene(weight_distribution(code), rank_gen_poly(code))


def test_greene_corpus(corpus):
    for entry in corpus[:20]:
        assert check_greene(entry.wd, entry.W)


def test_greene_normalized_corpus(corpus):
    for entry in corpus[:20]:
        assert check_greene_normalized(entry.wd, entry.Wn)


def test_greene_extension_field(hamming74):
    """The binary Hamming matroid with q = 4 predicts the GF(4) enumerator."""
    W = rank_gen_poly(hamming74)
    predicted = greene_weight_enumerator(W, 4)
    counts = tuple(predicted.coeff(7 - i, i) for i in range(8))
    over_gf4 = parse_code(
        "4 7 4\n" + "\n".join(
            " ".join(str(v) for v in row) for row in hamming74.generator
        )
    )
    assert counts == weight_distribution(over_gf4).counts
    assert counts == (1, 0, 0, 21, 21, 126, 42, 45)


def test_greene_symmetric_self_complementary(ext_hamming84, selfdual105, corpus):
    from codezeta.matroid import normalized_rank_gen

    for code in (ext_hamming84, selfdual105):
        wd = weight_distribution(code)
        assert wd.counts == wd.counts[::-1]  # self-complementary
        assert greene_normalized_symmetric(wd, normalized_rank_gen(code))


def test_puncture_shorten_wn_match_averaged_ops(corpus):
    for entry in corpus[:15]:
        wd = entry.wd
        if wd.d >= 2:
            punctured = puncture_shorten_wn(entry.Wn, "puncture")
            assert check_greene_normalized(puncture_avg(wd), punctured)
        if wd.d_dual >= 2:
            shortened = puncture_shorten_wn(entry.Wn, "shorten")
            assert check_greene_normalized(shorten_avg(wd), shortened)
    with pytest.raises(ValueError):
        puncture_shorten_wn(corpus[0].Wn, "extend")


def test_wn_plus_invariant_under_both_ops(corpus):
    for entry in corpus[:15]:
        plus = wn_plus(entry.Wn)
        for which in ("puncture", "shorten"):
            assert ratfun_equal(plus, wn_plus(puncture_shorten_wn(entry.Wn, which)))


def test_clifford_self_dual(ext_hamming84, selfdual105):
    for code in (ext_hamming84, selfdual105):
        report = clifford_check(code)
        assert report["classification"] == "self-dual"
        assert report["ok"] and not report["violations"]
        assert all(dec["ok"] for dec in report["decompositions"])


def test_clifford_contains_dual(hamming74):
    report = clifford_check(hamming74)
    assert report["classification"] == "contains-dual"
    assert report["ok"]


def test_clifford_violation(code10):
    report = clifford_check(code10)
    assert report["classification"] == "formally-self-dual"
    assert not report["ok"]
    assert report["first_violation"] == {"subset": [1], "size": 1, "rank": 0}


def test_clifford_pair22_decomposes(pair22):
    report = clifford_check(pair22)
    assert report["ok"]
    subsets = [dec["subset"] for dec in report["decompositions"]]
    assert [0, 1] in subsets and [2, 3] in subsets


def test_clifford_sample_mode(selfdual105):
    report = clifford_check(selfdual105, mode="sample", count=200, seed=7)
    assert report["mode"] == "sample"
    assert report["subsets_checked"] == 200
    assert report["ok"]
    with pytest.raises(ValueError):
        clifford_check(selfdual105, mode="full")


def test_find_two_disjoint_bases(pair22, selfdual105, hamming74):
    assert find_two_disjoint_bases(pair22) == ((0, 2), (1, 3))
    a, b = find_two_disjoint_bases(selfdual105)
    assert sorted(a + b) == list(range(10))
    with pytest.raises(ValueError):
        find_two_disjoint_bases(hamming74)


def test_find_two_disjoint_bases_capacity_guard():
    f = field_new(2)
    n, k = 22, 11
    gen = tuple(
        tuple(1 if j == i or j == i + k else 0 for j in range(n)) for i in range(k)
    )
    C = LinearCode(field=f, n=n, k=k, generator=gen)
    with pytest.raises(CapacityError):
        find_two_disjoint_bases(C)
