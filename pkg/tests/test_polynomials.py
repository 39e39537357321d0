"""Exact polynomial arithmetic, structure predicates, gamma expansions."""

import random

import pytest

from antichains.polynomials import (GammaStatus, IntPoly, even_index_extraction,
                                    gamma_expand, is_gamma_nonnegative,
                                    is_gamma_positive, one_plus_x_power)


def test_basic_arithmetic():
    one_plus_x = IntPoly([1, 1])
    assert (one_plus_x * one_plus_x).coeffs == (1, 2, 1)
    assert (IntPoly.X * IntPoly([1, 6, 3])).coeffs == (0, 1, 6, 3)
    assert (IntPoly([1, 2]) - IntPoly([1, 2])) == IntPoly.ZERO
    assert IntPoly([3]).scale(4).coeffs == (12,)
    assert IntPoly([1, 1]).shift(2).coeffs == (0, 0, 1, 1)


def test_zero_polynomial_conventions():
    zero = IntPoly([0, 0, 0])
    assert not zero
    assert zero.degree == -1
    assert zero.coeffs == ()
    assert zero.coefficient(5) == 0
    assert not zero.is_palindromic()
    assert not zero.is_monic()


def test_evaluation():
    diamond_n1 = IntPoly([1, 4, 1])
    assert diamond_n1(1) == 6
    assert IntPoly([1, 6, 3])(2) == 25
    from fractions import Fraction
    assert IntPoly([1, 6, 3])(Fraction(1, 2)) == Fraction(19, 4)


def test_derivative():
    assert IntPoly([5, 3, 2, 7]).derivative().coeffs == (3, 4, 21)
    assert IntPoly([5]).derivative() == IntPoly.ZERO


def test_structure_predicates():
    skew = IntPoly([1, 6, 3])
    assert not skew.is_palindromic()
    assert skew.is_log_concave()  # 36 >= 3
    worked = IntPoly([1, 24, 120, 200, 120, 24, 1])
    assert worked.is_palindromic() and worked.is_monic() and worked.is_unimodal()
    assert IntPoly([1, 1, 1, 1]).is_unimodal()
    assert IntPoly([1, 1, 1, 1]).is_log_concave()
    gap = IntPoly([1, 0, 1])
    assert gap.is_palindromic()
    assert not gap.is_unimodal()
    assert not gap.is_log_concave()
    assert not IntPoly([1, 6, 3]).is_monic()
    assert IntPoly([2, 1]).is_monic()


def test_log_concave_without_internal_zeros_implies_unimodal():
    rng = random.Random(7)
    for _ in range(200):
        coeffs = [rng.randint(1, 40) for _ in range(rng.randint(1, 9))]
        poly = IntPoly(coeffs)
        if poly.is_log_concave():
            assert poly.is_unimodal(), coeffs


def test_gamma_expansion_values():
    for n in range(1, 7):
        expansion = gamma_expand(IntPoly([1, 2 * n + 2, 1]))
        assert expansion.status is GammaStatus.EXACT
        assert expansion.gamma == (1, 2 * n)
    assert gamma_expand(one_plus_x_power(4)).gamma == (1, 0, 0)
    assert gamma_expand(IntPoly([7])).gamma == (7,)


def test_gamma_round_trip_on_constructed_expansions():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(0, 10)
        gamma = [rng.randint(0, 9) for _ in range(n // 2 + 1)]
        gamma[0] = max(gamma[0], 1)  # keep degree exactly n
        poly = IntPoly()
        for i, g in enumerate(gamma):
            poly = poly + one_plus_x_power(n - 2 * i).shift(i).scale(g)
        expansion = gamma_expand(poly)
        assert expansion.status is GammaStatus.EXACT
        assert list(expansion.gamma) == gamma


def test_gamma_rejects_non_palindromic():
    expansion = gamma_expand(IntPoly([1, 6, 3]))
    assert expansion.status is GammaStatus.NOT_PALINDROMIC
    assert expansion.gamma is None


def test_gamma_positivity_strict_vs_nonnegative():
    assert is_gamma_positive(IntPoly([1, 4, 1]))
    assert not is_gamma_positive(one_plus_x_power(4))
    assert is_gamma_nonnegative(one_plus_x_power(4))
    assert not is_gamma_nonnegative(IntPoly([1, 1, 1]))  # gamma = (1, -1)


def test_even_index_extraction():
    assert even_index_extraction(IntPoly([1, 2, 3])).coeffs == (1, 3)
    assert even_index_extraction(IntPoly.X) == IntPoly.ZERO
    from math import comb
    for n in range(1, 9):
        extracted = even_index_extraction(one_plus_x_power(n + 1))
        assert extracted.coeffs == tuple(
            comb(n + 1, 2 * i) for i in range((n + 1) // 2 + 1))


def test_even_index_extraction_is_linear():
    rng = random.Random(3)
    for _ in range(50):
        a = IntPoly([rng.randint(-5, 5) for _ in range(8)])
        b = IntPoly([rng.randint(-5, 5) for _ in range(8)])
        assert even_index_extraction(a + b) == \
            even_index_extraction(a) + even_index_extraction(b)


def test_text_io():
    assert IntPoly([1, 6, 3]).pretty() == "1 + 6x + 3x^2"
    assert IntPoly([0, 1]).pretty() == "x"
    assert IntPoly([1, -2, 1]).pretty() == "1 - 2x + x^2"
    assert IntPoly.ZERO.pretty() == "0"
    assert IntPoly([1, 6, 3]).coeff_csv() == "1,6,3"
    assert IntPoly.from_csv("1, 6, 3") == IntPoly([1, 6, 3])
    assert IntPoly.from_csv("0") == IntPoly.ZERO


def test_monomial_and_errors():
    assert IntPoly.monomial(3, 5).coeffs == (0, 0, 0, 5)
    with pytest.raises(ValueError):
        IntPoly.monomial(-1)
    with pytest.raises(ValueError):
        IntPoly([1]).shift(-2)
