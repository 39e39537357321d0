"""Two-row weighted tableau model: DP, recursion, engine agreement."""

import pytest

from antichains.polynomials import IntPoly
from antichains.posets import chain, product
from antichains.tableaux import (count_fillings, f_direct, f_recursive,
                                 two_row_family)
from antichains.transfer import antichain_poly_k


def test_base_values():
    assert f_direct(2, 1, 1).coeffs == (1, 3, 1)
    for n in range(0, 4):
        for m in range(0, n + 1):
            assert f_direct(n, m, 0) == IntPoly.ONE
    for k in range(0, 5):
        assert f_direct(1, 0, k).coeffs == ((1,) if k == 0 else (1, k))
    assert f_direct(0, 0, 3) == IntPoly.ONE


def test_validation():
    with pytest.raises(ValueError):
        f_direct(2, 3, 1)
    with pytest.raises(ValueError):
        f_direct(2, 1, -1)


def test_weights_sum_to_filling_counts():
    for n, m, k in [(2, 1, 1), (2, 2, 2), (3, 1, 2), (3, 2, 2), (3, 3, 3),
                    (4, 2, 2), (3, 0, 3), (4, 4, 2)]:
        assert f_direct(n, m, k)(1) == count_fillings(n, m, k)


def test_recursion_agrees_with_direct():
    for n in range(0, 5):
        for k in range(0, 6):
            assert f_recursive(n, k) == f_direct(n, n, k), (n, k)


def test_diagonal_matches_engine():
    for n in range(1, 6):
        grid = product(chain(2), chain(n))
        assert f_direct(n, n, n + 1) == antichain_poly_k(grid, n + 1)
    assert f_direct(1, 1, 2).coeffs == (1, 4, 1)


def test_two_row_family_properties():
    for n in (2, 3, 4):
        poly, expansion = two_row_family(n)
        assert poly == antichain_poly_k(product(chain(2), chain(n)), n + 1)
        assert poly.degree == 2 * n
        assert poly.is_monic()
        assert poly.is_palindromic()
        assert expansion.is_exact and all(g > 0 for g in expansion.gamma)
    assert two_row_family(2)[1].gamma == (1, 8, 2)
    assert two_row_family(7)[1].gamma == (1, 98, 2037, 14350, 37730, 35700,
                                          9625, 350)
    assert two_row_family(10)[1].gamma[-3:] == (4948020, 635040, 10584)
    with pytest.raises(ValueError):
        two_row_family(0)
