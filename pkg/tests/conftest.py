import random
from functools import cached_property
from pathlib import Path

import pytest

from codezeta import enumerator as enum_mod
from codezeta import matroid as matroid_mod
from codezeta import zeta as zeta_mod
from codezeta.code import LinearCode, dual_code, parse_code, weight_distribution
from codezeta.gf import field_new

FIXTURES = Path(__file__).parent / "fixtures"


def load_code(name):
    return parse_code((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def hamming74():
    return load_code("hamming74.code")


@pytest.fixture(scope="session")
def ext_hamming84():
    return load_code("ext_hamming84.code")


@pytest.fixture(scope="session")
def hexacode63():
    return load_code("hexacode63.code")


@pytest.fixture(scope="session")
def code10():
    return load_code("code10.code")


@pytest.fixture(scope="session")
def rep2():
    return load_code("rep2.code")


@pytest.fixture(scope="session")
def pair22():
    return load_code("pair22.code")


@pytest.fixture(scope="session")
def selfdual105():
    """A seeded random column permutation of ext-Hamming + {00,11}; self-dual."""
    rng = random.Random(20260823)
    base = [
        [1, 0, 0, 0, 0, 1, 1, 1, 0, 0],
        [0, 1, 0, 0, 1, 0, 1, 1, 0, 0],
        [0, 0, 1, 0, 1, 1, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    ]
    perm = list(range(10))
    rng.shuffle(perm)
    gen = tuple(tuple(row[p] for p in perm) for row in base)
    return LinearCode(field=field_new(2), n=10, k=5, generator=gen)


class CorpusEntry:
    """A random nondegenerate code plus lazily computed derived objects."""

    def __init__(self, code):
        self.code = code

    @cached_property
    def wd(self):
        return weight_distribution(self.code)

    @cached_property
    def dual(self):
        return dual_code(self.code)

    @cached_property
    def wd_dual(self):
        return weight_distribution(self.dual)

    @cached_property
    def norm(self):
        return enum_mod.normalize(self.wd)

    @cached_property
    def P(self):
        return zeta_mod.zeta_from_normalized(
            self.norm, k=self.code.k, d_dual=self.wd.d_dual
        )

    @cached_property
    def P_dual(self):
        return zeta_mod.zeta_from_normalized(
            enum_mod.normalize(self.wd_dual),
            k=self.dual.k,
            d_dual=self.wd_dual.d_dual,
        )

    @cached_property
    def W(self):
        return matroid_mod.rank_gen_poly(self.code)

    @cached_property
    def Wn(self):
        return matroid_mod.normalized_rank_gen(self.code)


def random_nondegenerate_code(rng, q, n, k):
    field = field_new(q)
    while True:
        rows = [
            tuple(
                (1 if j == i else 0) if j < k else rng.randrange(q)
                for j in range(n)
            )
            for i in range(k)
        ]
        code = LinearCode(field=field, n=n, k=k, generator=tuple(rows))
        wd = weight_distribution(code)
        if wd.d >= 2 and wd.d_dual >= 2:
            return code


@pytest.fixture(scope="session")
def corpus():
    """>= 60 seeded random nondegenerate codes, q in {2,3,4}, n <= 12."""
    rng = random.Random(1729)
    entries = []
    for q in (2, 3, 4):
        for _ in range(22):
            n = rng.randrange(6, 13)
            k = rng.randrange(2, n - 1)
            entries.append(CorpusEntry(random_nondegenerate_code(rng, q, n, k)))
    assert len(entries) >= 60
    return entries
