"""Built-in verification vectors.

Each vector freezes an exact reference value (worked-example matrices and
state vectors, closed forms, gamma tables, exceptional coefficients, tableau
and interlacing facts) and recomputes it from scratch through the public API.
The CLI 'check' command runs the suite and reports one pass/fail line per
vector; the test suite drives the same registry.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

from .catalog import (catalan, diamond_antichain_poly, enumerate_j2_ideal_codes,
                      ideal_product_formula, j2_antichain_poly_k,
                      j3_antichain_poly, monic_classification, narayana_b,
                      narayana_d, realize_family, square_grid_antichain_poly,
                      staircase_antichain_poly)
from .ideals import antichain_poly_direct, enumerate_ideals
from .polynomials import (IntPoly, even_index_extraction, gamma_expand,
                          one_plus_x_power)
from .posets import chain, double_tailed_diamond, product, shifted_staircase
from .roots import InterlaceVerdict, interlaces, is_real_rooted, obreschkoff_combination_test
from .sperner import is_peck
from .tableaux import f_direct
from .transfer import (antichain_poly_k, build_transfer, initial_vector,
                       iter_antichain_polys, step, two_row_ideal_polys)


@dataclass(frozen=True)
class CheckVector:
    name: str
    compute: Callable[[], Any]
    expected: Any


@dataclass(frozen=True)
class VectorResult:
    name: str
    ok: bool
    seconds: float
    expected: Any
    actual: Any


def run_vector(vector: CheckVector) -> VectorResult:
    start = time.perf_counter()
    actual = vector.compute()
    elapsed = time.perf_counter() - start
    return VectorResult(vector.name, actual == vector.expected, elapsed,
                        vector.expected, actual)


# -- shared computations -------------------------------------------------------

GRID23_TUPLES = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1),
                 (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))

# exponent of the monomial entry; None marks a zero entry
GRID23_MATRIX = (
    (0, None, None, None, None, None, None, None, None, None),
    (1, 0, None, None, None, None, None, None, None, None),
    (1, 1, 0, None, None, None, None, None, None, None),
    (1, 1, 1, 0, None, None, None, None, None, None),
    (1, 1, None, None, 0, None, None, None, None, None),
    (2, 2, 1, None, 1, 0, None, None, None, None),
    (2, 2, 2, 1, 1, 1, 0, None, None, None),
    (1, 1, 1, None, 1, 1, None, 0, None, None),
    (2, 2, 2, 1, 2, 2, 1, 1, 0, None),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 0),
)

GRID23_V1 = ((1,), (0, 1), (0, 1), (0, 1), (0, 1),
             (0, 0, 1), (0, 0, 1), (0, 1), (0, 0, 1), (0, 1))

GRID23_V4 = ((1,), (0, 4), (0, 4, 6), (0, 4, 12, 4), (0, 4, 6),
             (0, 0, 16, 14), (0, 0, 16, 38, 11), (0, 4, 18, 22, 6),
             (0, 0, 16, 52, 48, 9), (0, 4, 30, 70, 55, 15, 1))

GRID23_K4_POLY = (1, 24, 120, 200, 120, 24, 1)

GAMMA_TABLE = {
    1: (1, 2),
    2: (1, 8, 2),
    3: (1, 18, 33, 6),
    4: (1, 32, 150, 144, 12),
    5: (1, 50, 440, 1040, 580, 40),
    6: (1, 72, 1020, 4480, 6300, 2400, 100),
    7: (1, 98, 2037, 14350, 37730, 35700, 9625, 350),
    8: (1, 128, 3668, 37856, 160020, 282240, 191100, 39200, 980),
    9: (1, 162, 6120, 87024, 539532, 1528632, 1933344, 987840, 156996, 3528),
    10: (1, 200, 9630, 180480, 1542660, 6408864, 13028400, 12418560,
         4948020, 635040, 10584),
}

J2_K5_GAMMA = (1, 70, 745, 1850, 1025, 62)
J2_K11_GAMMA = (1, 160, 4900, 49280, 194810, 314720, 193760, 35840, 860)

J3_K17_SPOTS = {
    "degree": 27,
    "low": (1, 459, 51867),
    "mid": (20564929719672, 26728302338920, 26743721449352, 20605116728504),
    "top": (55461, 483, 1),
}

EXAMPLE_BATTERY = {
    # full coefficient lists where the reference data is complete, spot values otherwise
    "a-[3]x[3]x[3]": ("C(3) x C(3)", 3,
                      {"coeffs": (1, 27, 162, 350, 310, 114, 15, 1)}),
    "b-[3]x[3]x[5]": ("C(3) x C(5)", 3,
                      {"coeffs": (1, 45, 495, 2155, 4360, 4360, 2141, 505, 49, 1)}),
    "c-[4]x[3]x[4]": ("C(3) x C(4)", 4,
                      {"coeffs": (1, 48, 576, 2800, 6525, 7848, 4957, 1644, 274, 22, 1)}),
    "d-[4]x[3]x[6]": ("C(3) x C(6)", 4,
                      {"degree": 12, "spots": {0: 1, 1: 72, 2: 1368, 5: 103200,
                                               6: 134806, 7: 102912, 10: 1510,
                                               11: 86, 12: 1}}),
    "e-[5]x[3]x[7]": ("C(3) x C(7)", 5,
                      {"degree": 15, "spots": {0: 1, 1: 105, 2: 3045, 7: 4080285,
                                               8: 4078275, 13: 3692, 14: 137, 15: 1}}),
    "f-[3]xH6": ("H(6)", 3,
                 {"coeffs": (1, 63, 840, 4088, 8736, 8736, 4060, 862, 69, 1)}),
    "g-[9]xH5": ("H(5)", 9,
                 {"degree": 15, "spots": {0: 1, 1: 135, 2: 4455, 7: 7209048,
                                          8: 7206012, 13: 4745, 14: 145, 15: 1}}),
}


@lru_cache(maxsize=None)
def _grid23_reference_family():
    q = product(chain(2), chain(3))
    family = enumerate_ideals(q)

    def code(mask: int) -> tuple[int, int]:
        bottom = sum(1 for j in range(3) if mask >> j & 1)
        top = sum(1 for j in range(3) if mask >> (3 + j) & 1)
        return (top, bottom)

    ordered = sorted(family.ideals, key=code)
    return family.reordered(ordered), tuple(code(m) for m in ordered)


@lru_cache(maxsize=None)
def _family_poly(expr_kind: str, param: int, k: int) -> IntPoly:
    if expr_kind == "grid2":
        base = product(chain(2), chain(param))
    elif expr_kind == "j":
        base = realize_family(f"j{param}")
    else:
        raise ValueError(expr_kind)
    return antichain_poly_k(base, k)


# -- vector definitions ----------------------------------------------------------


def _grid23_matrix_actual():
    family, _ = _grid23_reference_family()
    matrix = build_transfer(family)
    return tuple(tuple(matrix.exponent(i, j) for j in range(10)) for i in range(10))


def _grid23_v1_actual():
    family, _ = _grid23_reference_family()
    return tuple(e.coeffs for e in initial_vector(family).entries)


def _grid23_v4_actual():
    family, _ = _grid23_reference_family()
    matrix = build_transfer(family)
    vector = initial_vector(family)
    for _ in range(3):
        vector = step(matrix, vector)
    return tuple(e.coeffs for e in vector.entries)


def _gamma_table_actual():
    return {n: gamma_expand(_family_poly("grid2", n, n + 1)).gamma
            for n in range(1, 11)}


def _j3_k17_actual():
    poly = _family_poly("j", 3, 17)
    return {
        "degree": poly.degree,
        "low": poly.coeffs[:3],
        "mid": poly.coeffs[12:16],
        "top": poly.coeffs[25:],
    }


def _example_battery_actual():
    from .expressions import build_text
    out = {}
    for name, (expr, k, want) in EXAMPLE_BATTERY.items():
        poly = antichain_poly_k(build_text(expr), k)
        entry: dict[str, Any] = {
            "palindromic": poly.is_palindromic(),
            "log_concave": poly.is_log_concave(),
        }
        if "coeffs" in want:
            entry["coeffs"] = poly.coeffs
        if "degree" in want:
            entry["degree"] = poly.degree
        if "spots" in want:
            entry["spots"] = {i: poly.coefficient(i) for i in want["spots"]}
        out[name] = entry
    return out


def _example_battery_expected():
    out = {}
    for name, (_expr, _k, want) in EXAMPLE_BATTERY.items():
        entry: dict[str, Any] = {"palindromic": False, "log_concave": True}
        entry.update(want)
        out[name] = entry
    return out


def _interlacing_relations_actual():
    polys = two_row_ideal_polys(3, 4)
    relations = [
        (polys[(0, 0)] + polys[(0, 1)], polys[(0, 2)]),
        (polys[(0, 0)] + polys[(0, 1)] + polys[(0, 2)], polys[(0, 3)]),
        (polys[(1, 1)] + polys[(1, 2)], polys[(1, 3)]),
        (sum((polys[(0, j)] for j in range(4)), IntPoly()),
         sum((polys[(1, j)] for j in range(1, 4)), IntPoly())),
        (sum((polys[(i, j)] for i in range(3) for j in range(i, 4)), IntPoly()),
         polys[(3, 3)]),
    ]
    battery = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 5), (1, -1), (-2, 3)]
    return [
        (interlaces(f, g) is InterlaceVerdict.INTERLACES,
         obreschkoff_combination_test(f, g, battery))
        for f, g in relations
    ]


def _monic_sweep_actual():
    bad: list[str] = []
    for m in range(1, 5):
        for n in range(m, 10 - m):
            grid = product(chain(m), chain(n))
            for k, poly in iter_antichain_polys(grid, m + n):
                if poly.is_monic() != monic_classification("grid", (m, n), k):
                    bad.append(f"grid({m},{n}) k={k}")
    for n in range(1, 6):
        for k, poly in iter_antichain_polys(shifted_staircase(n), max(2 * n - 1, 1)):
            if poly.is_monic() != monic_classification("staircase", (n,), k):
                bad.append(f"staircase({n}) k={k}")
    for n in range(1, 4):
        for k, poly in iter_antichain_polys(double_tailed_diamond(n), 2 * n + 1):
            if poly.is_monic() != monic_classification("diamond", (n,), k):
                bad.append(f"diamond({n}) k={k}")
    for kind, k_max in (("j2", 11), ("j3", 17)):
        for k, poly in iter_antichain_polys(realize_family(kind), k_max):
            if poly.is_monic() != monic_classification(kind, (), k):
                bad.append(f"{kind} k={k}")
    return bad


def _log_concavity_sweeps_actual():
    j2_ok = all(poly.is_log_concave()
                for _k, poly in iter_antichain_polys(realize_family("j2"), 11))
    j3_ok = all(poly.is_log_concave()
                for _k, poly in iter_antichain_polys(realize_family("j3"), 17))
    return (j2_ok, j3_ok)


def _real_rooted_grid_actual():
    out = []
    for n in range(1, 6):
        grid = product(chain(2), chain(n))
        for k, poly in iter_antichain_polys(grid, 7):
            if not is_real_rooted(poly):
                out.append((n, k))
    return out


def _ideal_count_identity_actual():
    return [ideal_product_formula(product(chain(2), chain(n)), n + 1)(1)
            == (2 * n + 1) * catalan(n) * catalan(n + 1)
            for n in range(1, 7)]


def _peck_minuscule_actual():
    families = ([("grid", (m, n)) for m in range(1, 4) for n in range(m, 5)]
                + [("staircase", (n,)) for n in range(1, 5)]
                + [("diamond", (n,)) for n in range(1, 4)]
                + [("j2", ()), ("j3", ())])
    return [is_peck(realize_family(kind, *params)) for kind, params in families]


def _staircase_extraction_actual():
    return [even_index_extraction(one_plus_x_power(n + 1))
            == staircase_antichain_poly(n) for n in range(1, 9)]


def _unique_level_actual():
    from .posets import unique_largest_rank_level
    grid23 = product(chain(2), chain(3))
    facts = [unique_largest_rank_level(grid23, 2),
             not unique_largest_rank_level(grid23, 3),
             unique_largest_rank_level(grid23, 4)]
    for n in range(1, 4):
        diamond = double_tailed_diamond(n)
        facts.append(unique_largest_rank_level(diamond, 1))
        facts.append(unique_largest_rank_level(diamond, 2 * n + 1))
        facts.append(not unique_largest_rank_level(diamond, 2 * n + 2))
    return facts


def builtin_vectors() -> list[CheckVector]:
    """The full registry of reference vectors."""
    grid23 = product(chain(2), chain(3))
    return [
        CheckVector("grid23-ideal-count",
                    lambda: len(enumerate_ideals(grid23)), 10),
        CheckVector("grid23-antichain-poly",
                    lambda: antichain_poly_direct(grid23).coeffs, (1, 6, 3)),
        CheckVector("grid23-tuple-order",
                    lambda: _grid23_reference_family()[1], GRID23_TUPLES),
        CheckVector("grid23-transfer-matrix", _grid23_matrix_actual, GRID23_MATRIX),
        CheckVector("grid23-initial-vector", _grid23_v1_actual, GRID23_V1),
        CheckVector("grid23-state-k4", _grid23_v4_actual, GRID23_V4),
        CheckVector("grid23-k4-poly",
                    lambda: antichain_poly_k(grid23, 4).coeffs, GRID23_K4_POLY),
        CheckVector("square-grid-closed-form",
                    lambda: [antichain_poly_k(chain(n), n)
                             == square_grid_antichain_poly(n)
                             for n in range(1, 9)], [True] * 8),
        CheckVector("square-grid-narayana-b",
                    lambda: [square_grid_antichain_poly(n) == narayana_b(n)
                             for n in range(1, 9)], [True] * 8),
        CheckVector("staircase-closed-form",
                    lambda: [antichain_poly_k(shifted_staircase(n), 1)
                             == staircase_antichain_poly(n)
                             for n in range(1, 9)], [True] * 8),
        CheckVector("staircase-even-extraction", _staircase_extraction_actual,
                    [True] * 8),
        CheckVector("diamond-closed-form",
                    lambda: [antichain_poly_k(double_tailed_diamond(n), 1)
                             == diamond_antichain_poly(n)
                             for n in range(1, 7)], [True] * 6),
        CheckVector("diamond-gamma",
                    lambda: [gamma_expand(diamond_antichain_poly(n)).gamma
                             for n in range(1, 7)],
                    [(1, 2 * n) for n in range(1, 7)]),
        CheckVector("diamond-narayana-d",
                    lambda: [antichain_poly_k(double_tailed_diamond(n), 2 * n + 1)
                             == narayana_d(2 * n + 2) for n in range(1, 4)],
                    [True] * 3),
        CheckVector("j-tower-sizes",
                    lambda: (realize_family("j2").n, realize_family("j3").n,
                             len(enumerate_ideals(realize_family("j3")))),
                    (16, 27, 56)),
        CheckVector("j3-closed-form",
                    lambda: antichain_poly_k(realize_family("j3"), 1).coeffs,
                    (1, 27, 27, 1)),
        CheckVector("j3-gamma",
                    lambda: gamma_expand(j3_antichain_poly()).gamma, (1, 24)),
        CheckVector("j2-k5-gamma",
                    lambda: gamma_expand(_family_poly("j", 2, 5)).gamma,
                    J2_K5_GAMMA),
        CheckVector("j2-k11-gamma",
                    lambda: gamma_expand(_family_poly("j", 2, 11)).gamma,
                    J2_K11_GAMMA),
        CheckVector("j2-code-model",
                    lambda: (len(enumerate_j2_ideal_codes()),
                             j2_antichain_poly_k(5) == _family_poly("j", 2, 5)),
                    (27, True)),
        CheckVector("j3-k17-coefficients", _j3_k17_actual, J3_K17_SPOTS),
        CheckVector("example-battery", _example_battery_actual,
                    _example_battery_expected()),
        CheckVector("gamma-table", _gamma_table_actual, GAMMA_TABLE),
        CheckVector("tableau-f21",
                    lambda: f_direct(2, 1, 1).coeffs, (1, 3, 1)),
        CheckVector("tableau-engine-agreement",
                    lambda: [f_direct(n, n, n + 1) == _family_poly("grid2", n, n + 1)
                             for n in range(1, 6)], [True] * 5),
        CheckVector("ideal-count-catalan", _ideal_count_identity_actual,
                    [True] * 6),
        CheckVector("interlacing-relations", _interlacing_relations_actual,
                    [(True, True)] * 5),
        CheckVector("not-real-rooted-333",
                    lambda: (is_real_rooted(_333_poly()), _333_poly().is_palindromic()),
                    (False, False)),
        CheckVector("real-rooted-two-row-grids", _real_rooted_grid_actual, []),
        CheckVector("monic-classification", _monic_sweep_actual, []),
        CheckVector("log-concavity-exceptional", _log_concavity_sweeps_actual,
                    (True, True)),
        CheckVector("peck-minuscule", _peck_minuscule_actual, [True] * 18),
        CheckVector("unique-largest-level-lemma", _unique_level_actual,
                    [True] * 12),
        CheckVector("two-row-family-surface",
                    lambda: _two_row_family_summary(), (True, True, True)),
    ]


def _two_row_family_summary():
    from .tableaux import two_row_family
    poly, expansion = two_row_family(4)
    return (poly.degree == 8 and poly.is_monic(),
            expansion.is_exact,
            expansion.gamma == GAMMA_TABLE[4])


@lru_cache(maxsize=None)
def _333_poly() -> IntPoly:
    return antichain_poly_k(product(chain(3), chain(3)), 3)


def run_all(vectors: list[CheckVector] | None = None) -> list[VectorResult]:
    return [run_vector(v) for v in (builtin_vectors() if vectors is None else vectors)]
