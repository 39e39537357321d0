"""Transfer engine: matrix structure, iteration, oracle agreement."""

import pytest

from antichains.checks import (GRID23_K4_POLY, GRID23_MATRIX, GRID23_TUPLES,
                               GRID23_V1, GRID23_V4, _grid23_reference_family)
from antichains.ideals import antichain_poly_direct, enumerate_ideals
from antichains.polynomials import IntPoly
from antichains.posets import chain, product, shifted_staircase
from antichains.sperner import max_antichain_size
from antichains.transfer import (antichain_poly_k, build_transfer,
                                 initial_vector, interleaving_relation_pair,
                                 iter_antichain_polys, per_ideal_polys, step,
                                 two_row_ideal_polys)

GRID23 = product(chain(2), chain(3))


def test_worked_example_under_reference_order():
    family, tuples = _grid23_reference_family()
    assert tuples == GRID23_TUPLES
    matrix = build_transfer(family)
    got = tuple(tuple(matrix.exponent(i, j) for j in range(10))
                for i in range(10))
    assert got == GRID23_MATRIX
    vector = initial_vector(family)
    assert tuple(e.coeffs for e in vector.entries) == GRID23_V1
    for _ in range(3):
        vector = step(matrix, vector)
    assert tuple(e.coeffs for e in vector.entries) == GRID23_V4
    assert vector.total().coeffs == GRID23_K4_POLY


def test_matrix_shape_invariants():
    for p in (GRID23, chain(3), shifted_staircase(3)):
        family = enumerate_ideals(p)
        matrix = build_transfer(family)
        for i, row in enumerate(matrix.rows):
            columns = [j for j, _ in row]
            assert columns == sorted(columns)
            assert all(j <= i for j in columns)
            assert matrix.exponent(i, i) == 0
            # row of the empty ideal is the lone diagonal 1
            assert matrix.rows[0] == ((0, 0),)
            # the empty-ideal column records #max of each ideal
            e0 = matrix.exponent(i, 0)
            assert e0 == family.max_of[i].bit_count()
            for j, e in row:
                assert e <= family.max_of[i].bit_count()


def test_chain2_matrix():
    family = enumerate_ideals(chain(2))
    matrix = build_transfer(family)
    assert [[matrix.exponent(i, j) for j in range(i + 1)] for i in range(3)] \
        == [[0], [1, 0], [1, 1, 0]]


def test_initial_vector_sums_to_direct_poly():
    for p in (GRID23, chain(4), shifted_staircase(3)):
        family = enumerate_ideals(p)
        assert initial_vector(family).total() == antichain_poly_direct(p)


def test_step_keeps_empty_ideal_constant():
    family = enumerate_ideals(GRID23)
    matrix = build_transfer(family)
    vector = initial_vector(family)
    for _ in range(5):
        vector = step(matrix, vector)
        assert vector.entries[0] == IntPoly.ONE
        assert all(c >= 0 for e in vector.entries for c in e.coeffs)


def test_k_validation():
    with pytest.raises(ValueError):
        antichain_poly_k(GRID23, 0)
    with pytest.raises(ValueError):
        list(iter_antichain_polys(GRID23, 0))


def test_oracle_agreement_spot():
    for p, k in [(GRID23, 2), (GRID23, 3), (chain(3), 4),
                 (shifted_staircase(3), 2), (product(chain(2), chain(2)), 3)]:
        assert antichain_poly_k(p, k) == \
            antichain_poly_direct(product(chain(k), p))


def test_grid_symmetry_in_chain_lengths():
    for m in range(1, 5):
        for k in range(1, 5):
            assert antichain_poly_k(chain(m), k) == antichain_poly_k(chain(k), m)


def test_linear_coefficient_counts_singletons():
    for p, k in [(GRID23, 3), (shifted_staircase(3), 4), (chain(5), 2)]:
        assert antichain_poly_k(p, k).coefficient(1) == k * p.n


def test_degree_is_product_width():
    for p, k in [(GRID23, 2), (GRID23, 4), (chain(4), 3),
                 (shifted_staircase(3), 2)]:
        assert antichain_poly_k(p, k).degree == \
            max_antichain_size(product(chain(k), p))


def test_iter_matches_single_shots():
    polys = dict(iter_antichain_polys(GRID23, 5))
    for k in range(1, 6):
        assert polys[k] == antichain_poly_k(GRID23, k)


def test_per_ideal_polys():
    family = enumerate_ideals(GRID23)
    pairs = per_ideal_polys(GRID23, 1)
    assert [mask for mask, _ in pairs] == list(family.ideals)
    for (mask, poly), image in zip(pairs, family.max_of):
        assert poly == IntPoly.monomial(image.bit_count())
    pairs4 = per_ideal_polys(GRID23, 4)
    total = IntPoly()
    for _, poly in pairs4:
        total = total + poly
    assert total.coeffs == GRID23_K4_POLY


def test_two_row_ideal_polys():
    polys = two_row_ideal_polys(3, 1)
    assert set(polys) == {(a, b) for a in range(4) for b in range(a, 4)}
    assert polys[(0, 0)] == IntPoly.ONE
    assert polys[(1, 2)] == IntPoly.monomial(2)
    assert polys[(3, 3)] == IntPoly.monomial(1)
    total = IntPoly()
    for poly in polys.values():
        total = total + poly
    assert total.coeffs == (1, 6, 3)


def test_relation_pair_sums():
    polys = two_row_ideal_polys(3, 4)
    first, second = interleaving_relation_pair(polys, 3, 2)
    grand = IntPoly()
    for poly in polys.values():
        grand = grand + poly
    assert first + second == grand
    with pytest.raises(ValueError):
        interleaving_relation_pair(polys, 3, 3)


def test_reordering_must_extend_containment():
    family = enumerate_ideals(GRID23)
    backwards = family.reordered(list(reversed(family.ideals)))
    with pytest.raises(ValueError):
        build_transfer(backwards)
