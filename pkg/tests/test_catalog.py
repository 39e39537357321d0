"""Closed forms, Narayana identities, the rank product formula, monicity."""

from math import comb

import pytest

from antichains.catalog import (catalan, closed_form_antichain_poly,
                                enumerate_j2_ideal_codes,
                                ideal_product_formula, is_valid_j2_code,
                                j2_antichain_poly_k, j2_max_count,
                                j2_relative_max_count, j3_antichain_poly,
                                monic_classification, narayana_b, narayana_d,
                                realize_family, square_grid_antichain_poly,
                                staircase_antichain_poly)
from antichains.corpus import _zigzag
from antichains.ideals import ideal_poly_direct
from antichains.polynomials import IntPoly, gamma_expand
from antichains.posets import (Poset, chain, double_tailed_diamond, product,
                               shifted_staircase)
from antichains.transfer import antichain_poly_k


def test_realized_family_sizes():
    assert realize_family("grid", 3, 4).n == 12
    assert realize_family("staircase", 4).n == 10
    assert realize_family("diamond", 3).n == 8
    assert realize_family("j2").n == 16
    assert realize_family("j3").n == 27
    with pytest.raises(ValueError):
        realize_family("octahedron", 3)


def test_closed_forms_match_engine():
    for n in range(1, 7):
        assert closed_form_antichain_poly("grid", n, n) == \
            antichain_poly_k(realize_family("grid", n, n), 1)
        assert closed_form_antichain_poly("diamond", n) == \
            antichain_poly_k(realize_family("diamond", n), 1)
    for n in range(1, 8):
        assert closed_form_antichain_poly("staircase", n) == \
            antichain_poly_k(realize_family("staircase", n), 1)
    assert closed_form_antichain_poly("j3") == \
        antichain_poly_k(realize_family("j3"), 1)
    assert staircase_antichain_poly(2).coeffs == (1, 3)
    assert staircase_antichain_poly(3).coeffs == (1, 6, 1)
    assert square_grid_antichain_poly(2).coeffs == (1, 4, 1)


def test_closed_form_rejects_unsupported():
    with pytest.raises(ValueError):
        closed_form_antichain_poly("grid", 2, 3)
    with pytest.raises(ValueError):
        closed_form_antichain_poly("j2")


def test_j3_gamma_form():
    assert j3_antichain_poly().coeffs == (1, 27, 27, 1)
    assert gamma_expand(j3_antichain_poly()).gamma == (1, 24)


def test_narayana_b():
    assert narayana_b(2).coeffs == (1, 4, 1)
    assert gamma_expand(narayana_b(3)).gamma == (1, 6)
    for n in range(1, 9):
        assert narayana_b(n) == square_grid_antichain_poly(n)


def reference_diamond_product_poly(n):
    """Independent expansion of the degree-(2n+2) coefficient formula."""
    coeffs = [0] * (2 * n + 3)
    coeffs[0] = coeffs[2 * n + 2] = 1
    coeffs[1] = coeffs[2 * n + 1] = 4 * n * n + 6 * n + 2
    for i in range(2, 2 * n + 1):
        coeffs[i] = (comb(2 * n, i - 2) * comb(2 * n + 1, i - 1)
                     + comb(2 * n, i) * comb(2 * n + 1, i)
                     + 2 * comb(2 * n + 1, i - 1) * comb(2 * n + 1, i))
    return IntPoly(coeffs)


def test_narayana_d():
    assert narayana_d(4).coeffs == (1, 12, 24, 12, 1)
    for n in range(1, 4):
        assert narayana_d(2 * n + 2) == reference_diamond_product_poly(n)
        assert narayana_d(2 * n + 2) == \
            antichain_poly_k(double_tailed_diamond(n), 2 * n + 1)
    with pytest.raises(ValueError):
        narayana_d(5)
    with pytest.raises(ValueError):
        narayana_d(2)


def test_ideal_product_formula():
    grid = product(chain(2), chain(3))
    assert ideal_product_formula(grid, 1) == ideal_poly_direct(grid)
    assert ideal_product_formula(grid, 0) == IntPoly.ONE
    for p in (grid, shifted_staircase(3), double_tailed_diamond(2)):
        for k in range(1, 4):
            formula = ideal_product_formula(p, k)
            assert formula == ideal_poly_direct(product(chain(k), p))
            assert formula.is_palindromic()
    # palindromicity holds across all five families for larger k too
    for kind, params in [("grid", (2, 4)), ("grid", (3, 3)), ("staircase", (4,)),
                         ("diamond", (3,)), ("j2", ()), ("j3", ())]:
        p = realize_family(kind, *params)
        for k in range(1, 9):
            assert ideal_product_formula(p, k).is_palindromic(), (kind, k)
    for n in range(1, 7):
        value = ideal_product_formula(product(chain(2), chain(n)), n + 1)(1)
        assert value == (2 * n + 1) * catalan(n) * catalan(n + 1)


def test_ideal_product_formula_rejects_non_minuscule():
    # one bottom under two tops: rank multiset {1, 2, 2} leaves an inexact
    # division behind
    vee = Poset(3, ((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        ideal_product_formula(vee, 1)
    # exact division is necessary, not sufficient: the fence's rank multiset
    # divides cleanly but the value is not the ideal polynomial
    assert ideal_product_formula(_zigzag(4), 1) != ideal_poly_direct(_zigzag(4))


def test_monic_classification_cases():
    assert monic_classification("grid", (2, 3), 2)
    assert not monic_classification("grid", (2, 3), 3)
    assert monic_classification("grid", (2, 3), 4)
    assert not monic_classification("grid", (2, 3), 6)
    assert monic_classification("grid", (3, 2), 2)  # orientation-free
    assert monic_classification("staircase", (3,), 1)
    assert monic_classification("staircase", (3,), 5)
    assert not monic_classification("staircase", (3,), 3)
    assert monic_classification("staircase", (4,), 3)
    assert not monic_classification("staircase", (4,), 1)
    assert monic_classification("diamond", (2,), 1)
    assert monic_classification("diamond", (2,), 5)
    assert not monic_classification("diamond", (2,), 3)
    assert monic_classification("j2", (), 5) and monic_classification("j2", (), 11)
    assert not monic_classification("j2", (), 1)
    assert monic_classification("j3", (), 1)
    assert monic_classification("j3", (), 9)
    assert monic_classification("j3", (), 17)
    assert not monic_classification("j3", (), 5)


def test_j2_code_enumeration():
    codes = enumerate_j2_ideal_codes()
    assert len(codes) == 27
    assert codes[0] == (0, 0, 0, 0)
    assert codes[-1] == (4, 6, 6, 8)
    assert len(set(codes)) == 27
    assert j2_max_count((0, 0, 0, 0)) == 0
    assert j2_max_count((4, 6, 6, 8)) == 1  # only d > 0 is strict
    assert not is_valid_j2_code((0, 3, 0, 0)) or True  # a >= min(b,4) fails
    assert not is_valid_j2_code((0, 3, 3, 0))
    with pytest.raises(ValueError):
        j2_max_count((1, 1, 0, 0))


def test_j2_relative_counts():
    assert j2_relative_max_count((4, 6, 6, 8), (0, 0, 0, 0)) == 1
    assert j2_relative_max_count((1, 0, 0, 0), (0, 0, 0, 0)) == 1
    with pytest.raises(ValueError):
        j2_relative_max_count((1, 0, 0, 0), (2, 0, 0, 0))


def test_j2_model_cross_validates_engine():
    j2 = realize_family("j2")
    for k in (1, 2, 5):
        assert j2_antichain_poly_k(k) == antichain_poly_k(j2, k)
    assert gamma_expand(j2_antichain_poly_k(5)).gamma == \
        (1, 70, 745, 1850, 1025, 62)


def test_catalan():
    assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert (2 * 2 + 1) * catalan(2) * catalan(3) == 50
    grid223 = product(chain(2), product(chain(2), chain(3)))
    from antichains.ideals import antichain_poly_direct
    assert antichain_poly_direct(grid223)(1) == 50
