import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_sf_matrix
from ribbonimm.shapes import SkewShape
from ribbonimm.symfunc import (SFMatrix, SchurExpansion, SymPoly, determinant,
                               determinant_naive, e_poly, enumerate_ssyt,
                               expand_schur, h_poly, lr_coefficient,
                               schur_poly, skew_schur, ssyt_count)

partitions = st.lists(st.integers(1, 4), min_size=0, max_size=3).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def sympolys(nvars):
    return st.dictionaries(partitions, st.integers(-3, 3), max_size=4).map(
        lambda d: SymPoly(nvars, {k: v for k, v in d.items()
                                  if len(k) <= nvars}))


def test_sympoly_basics():
    p = SymPoly(2, {(1,): 2, (2, 1): -1})
    assert not p.is_zero()
    assert p.degree() == 3
    assert not p.is_homogeneous()
    assert SymPoly.one(2).degree() == 0
    assert SymPoly.zero(3).degree() is None
    with pytest.raises(ValueError):
        SymPoly(1, {(2, 1): 1})


@given(sympolys(2), sympolys(2))
def test_mul_commutative(p, q):
    assert p * q == q * p


@settings(max_examples=40)
@given(sympolys(2), sympolys(2), sympolys(2))
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(sympolys(3))
def test_evaluate_matches_product(p):
    # evaluation is a ring morphism: check against an explicit point
    point = (1, 2, 3)
    assert (p * p).evaluate(point) == p.evaluate(point) ** 2


def test_schur_pins():
    assert schur_poly((1,), 2) == SymPoly(2, {(1,): 1})
    # s_11 in two variables is x1*x2
    assert schur_poly((1, 1), 2) == SymPoly(2, {(1, 1): 1})
    # s_21(x1,x2) = m21 + ... : evaluate at (1,1) counts SSYT
    assert schur_poly((2, 1), 2).evaluate((1, 1)) == 2
    assert schur_poly((2, 1), 3).evaluate((1, 1, 1)) == 8


def test_h_e_pins():
    assert h_poly(2, 2) == SymPoly(2, {(2,): 1, (1, 1): 1})
    assert e_poly(2, 2) == SymPoly(2, {(1, 1): 1})
    assert e_poly(3, 2).is_zero()


def test_skew_schur_matches_enumeration():
    sh = SkewShape((3, 2), (1, 0))
    poly = skew_schur(sh, 2)
    assert poly.evaluate((1, 1)) == ssyt_count(sh, 2)
    assert ssyt_count(sh, 2) == sum(1 for _ in enumerate_ssyt(sh, 2))


def test_skew_schur_lr_expansion():
    # s_{(2,1)/(1)} = s_2 + s_11
    exp = expand_schur(skew_schur(SkewShape((2, 1), (1, 0)), 2))
    assert exp.coeffs == {(2,): 1, (1, 1): 1}


def test_lr_coefficients():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (1,), (2,)) == 1
    assert lr_coefficient((2, 2), (1,), (2, 1)) == 1
    assert lr_coefficient((3,), (1,), (1, 1)) == 0


def test_expand_schur_roundtrip():
    rng = random.Random(7)
    for _ in range(10):
        coeffs = {}
        for _ in range(3):
            lam = tuple(sorted((rng.randint(1, 3)
                                for _ in range(rng.randint(1, 3))),
                               reverse=True))
            coeffs[lam] = rng.randint(-2, 2)
        exp = SchurExpansion(3, coeffs)
        assert expand_schur(exp.to_poly()) == exp


def test_expand_schur_of_schur_is_delta():
    exp = expand_schur(schur_poly((3, 1), 3))
    assert exp.coeffs == {(3, 1): 1}
    assert exp.schur_positive


def test_determinant_matches_naive():
    rng = random.Random(11)
    for n in (1, 2, 3):
        M = random_sf_matrix(rng, n, 2)
        assert determinant(M) == determinant_naive(M)


def test_sfmatrix_indexing():
    M = SFMatrix(2, 2, [[SymPoly.one(2), SymPoly.zero(2)],
                        [SymPoly.zero(2), SymPoly.one(2)]])
    assert M[1, 1] == SymPoly.one(2)
    assert determinant(M) == SymPoly.one(2)
    sub = M.submatrix((2,), (2,))
    assert sub.n == 1 and sub[1, 1] == SymPoly.one(2)
