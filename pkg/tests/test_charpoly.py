"""Characteristic polynomial golden values, cross-method agreement, and
the structural invariants every discriminantal chi must satisfy.

Oracles: a no-memo subset sum re-derives whitney_charpoly on small cases,
and the literal alternating-sum-over-all-subcollections formula re-derives
combinatorial_charpoly.
"""

import random
from functools import lru_cache
from itertools import combinations
from math import comb

import pytest

from arrcensus import gallery
from arrcensus.charpoly import (
    CharPolynomial,
    combinatorial_charpoly,
    iso_class_count,
    poset_charpoly,
    whitney_charpoly,
    zaslavsky_regions,
)
from arrcensus.concurrency import SubsetCollection, combinatorial_rank
from arrcensus.discriminantal import build
from arrcensus.errors import OddRegionCount, TooLarge
from arrcensus.exact_linalg import rank
from arrcensus.normal_system import random_normal_system


@lru_cache(maxsize=None)
def chi(name):
    ns = getattr(gallery, name)()
    return poset_charpoly(build(ns))


def brute_whitney(da):
    # independent oracle: fresh rank for every one of the 2^N subsets
    N = len(da.normals)
    acc = [0] * (da.n + 1)
    for bits in range(1 << N):
        rows = [da.normals[p] for p in range(N) if bits >> p & 1]
        r = rank(rows) if rows else 0
        acc[da.n - r] += -1 if bin(bits).count("1") % 2 else 1
    return CharPolynomial([acc[da.n - i] for i in range(da.n + 1)])


def brute_combinatorial(n, m):
    # the literal alternating sum over every subcollection of E
    pool = list(combinations(range(1, n + 1), m + 1))
    acc = [0] * (n + 1)
    for r in range(len(pool) + 1):
        for D in combinations(pool, r):
            col = SubsetCollection(n, m, D)
            acc[n - combinatorial_rank(col)] += -1 if r % 2 else 1
    return CharPolynomial([acc[n - i] for i in range(n + 1)])


def test_four_line_chi_golden():
    p = whitney_charpoly(build(gallery.four_lines()))
    assert p.coefficients == (1, -4, 3, 0, 0)
    assert zaslavsky_regions(p) == 8
    assert iso_class_count(p) == 4
    assert p.factored_str() == "x^2 (x - 1) (x - 3)"


def test_five_line_chi_golden():
    p = whitney_charpoly(build(gallery.five_lines()))
    assert p.coefficients == (1, -10, 30, -21, 0, 0)
    assert zaslavsky_regions(p) == 62
    assert iso_class_count(p) == 31


def test_six_line_chi_golden_by_degeneracy():
    perp = chi("six_lines_perpendicular_pairs")
    assert perp.coefficients == (1, -20, 145, -422, 296, 0, 0)
    assert zaslavsky_regions(perp) == 884

    assert zaslavsky_regions(chi("six_lines_mixed_slopes")) == 888

    free = chi("six_lines_free")
    assert free.coefficients == (1, -20, 145, -426, 300, 0, 0)
    assert zaslavsky_regions(free) == 892
    assert iso_class_count(free) == 446


def test_six_plane_chi_golden():
    chain = chi("six_planes_chain")
    assert chain.coefficients == (1, -15, 65, -51, 0, 0, 0)
    assert zaslavsky_regions(chain) == 132

    free = chi("six_planes_free")
    assert free.coefficients == (1, -15, 69, -55, 0, 0, 0)
    assert zaslavsky_regions(free) == 140


def test_combinatorial_chi_golden():
    assert combinatorial_charpoly(4, 2).coefficients == (1, -4, 3, 0, 0)
    assert combinatorial_charpoly(5, 2).coefficients == (
        1, -10, 30, -21, 0, 0)
    assert combinatorial_charpoly(6, 2).coefficients == (
        1, -20, 145, -426, 300, 0, 0)
    assert combinatorial_charpoly(6, 3).coefficients == (
        1, -15, 69, -55, 0, 0, 0)


def test_whitney_matches_brute_oracle():
    for ns in [gallery.three_lines(), gallery.four_lines()]:
        da = build(ns)
        assert whitney_charpoly(da) == brute_whitney(da)
    da = build(random_normal_system(5, 2, seed=3, bound=9))
    assert whitney_charpoly(da) == brute_whitney(da)
    da = build(random_normal_system(5, 3, seed=3, bound=9))
    assert whitney_charpoly(da) == brute_whitney(da)


def test_combinatorial_matches_brute_oracle():
    assert combinatorial_charpoly(4, 2) == brute_combinatorial(4, 2)
    assert combinatorial_charpoly(4, 3) == brute_combinatorial(4, 3)
    assert combinatorial_charpoly(5, 2) == brute_combinatorial(5, 2)


def test_whitney_equals_poset_everywhere_both_run():
    for name in ["four_lines", "five_lines", "six_lines_perpendicular_pairs",
                 "six_lines_mixed_slopes", "six_lines_free",
                 "six_planes_chain", "six_planes_free"]:
        da = build(getattr(gallery, name)())
        assert whitney_charpoly(da) == chi(name), name
    rng = random.Random(55)
    for _ in range(4):
        n = rng.choice([4, 5])
        m = rng.choice([2, 3])
        if n <= m:
            continue
        da = build(random_normal_system(n, m, seed=rng.randint(0, 999),
                                        bound=9))
        assert whitney_charpoly(da) == poset_charpoly(da)


def test_combinatorial_equals_poset_on_free_systems():
    for name, (n, m) in [("four_lines", (4, 2)), ("five_lines", (5, 2)),
                         ("six_lines_free", (6, 2)),
                         ("six_planes_free", (6, 3))]:
        assert chi(name) == combinatorial_charpoly(n, m)


CHI_CASES = [("four_lines", 2), ("five_lines", 2),
             ("six_lines_perpendicular_pairs", 2),
             ("six_lines_mixed_slopes", 2), ("six_lines_free", 2),
             ("six_planes_chain", 3), ("six_planes_free", 3)]


@pytest.mark.parametrize("name,m", CHI_CASES)
def test_structural_invariants_of_every_chi(name, m):
    p = chi(name)
    coeffs = p.coefficients
    assert coeffs[0] == 1  # monic
    # trailing zeros form one block; the rest alternate strictly in sign
    nonzero = [c for c in coeffs if c != 0]
    tail = coeffs[len(nonzero):]
    assert all(c == 0 for c in tail)
    for a, b in zip(nonzero, nonzero[1:]):
        assert a * b < 0
    # x^m (x - 1) divides chi
    assert all(c == 0 for c in coeffs[-m:])
    assert p(1) == 0


def test_leading_terms_count_hyperplanes():
    for name, size in [("four_lines", comb(4, 3)),
                       ("five_lines", comb(5, 3)),
                       ("six_lines_free", comb(6, 3)),
                       ("six_planes_free", comb(6, 4))]:
        p = chi(name)
        assert p.coefficients[0] == 1
        assert p.coefficients[1] == -size


def test_zaslavsky_handles_odd_degree():
    # chi of a single line in the plane: x^2 - x -> 2 regions
    p = CharPolynomial([1, -1, 0])
    assert zaslavsky_regions(p) == 2
    # cubic: chi = x^3 - x^2 evaluates at -1 to -2; regions = 2
    assert zaslavsky_regions(CharPolynomial([1, -1, 0, 0])) == 2


def test_iso_class_count_rejects_odd():
    with pytest.raises(OddRegionCount):
        iso_class_count(CharPolynomial([1, -2]))  # p(-1) = -3, odd


def test_whitney_too_large_guard():
    da = build(random_normal_system(8, 2, seed=1, bound=9))  # 56 rows
    with pytest.raises(TooLarge):
        whitney_charpoly(da)


def test_poset_flat_guard(monkeypatch):
    import arrcensus.charpoly as mod
    monkeypatch.setattr(mod, "POSET_FLAT_LIMIT", 3)
    with pytest.raises(TooLarge):
        poset_charpoly(build(gallery.four_lines()))


def test_polynomial_basics():
    p = CharPolynomial([1, -4, 3, 0, 0])
    assert p.degree == 4
    assert p(0) == 0 and p(1) == 0 and p(3) == 0
    assert p(-1) == 8
    assert p == CharPolynomial((1, -4, 3, 0, 0))
    assert "x^4" in repr(p)
    assert CharPolynomial([1, 0, -1]).as_str() == "x^2 - 1"
