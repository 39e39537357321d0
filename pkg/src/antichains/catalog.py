"""Closed forms and classification data for the five minuscule families.

Families are tagged grid (product of two chains), staircase (symmetric square
of a chain), diamond (double-tailed diamond), j2 and j3 (second and third
ideal lattices of the 2-by-3 grid).  Alongside the closed-form antichain
polynomials this module holds the type-B and type-D Narayana polynomials, the
product formula for ideal generating polynomials of chain products, the
monicity classification, and the independent 4-tuple parameterization of the
ideals of j2 used to cross-validate the generic ideal machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .ideals import DEFAULT_MAX_IDEALS, ideals_poset
from .polynomials import IntPoly, one_plus_x_power
from .posets import (Poset, chain, double_tailed_diamond, product,
                     shifted_staircase)

MINUSCULE_KINDS = ("grid", "staircase", "diamond", "j2", "j3")


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def realize_family(kind: str, *params: int) -> Poset:
    """Build the poset of a minuscule family tag."""
    if kind == "grid":
        m, n = params
        return product(chain(m), chain(n))
    if kind == "staircase":
        return shifted_staircase(params[0])
    if kind == "diamond":
        return double_tailed_diamond(params[0])
    if kind == "j2":
        return _j_tower(2)
    if kind == "j3":
        return _j_tower(3)
    raise ValueError(f"unknown family kind {kind!r}")


@lru_cache(maxsize=None)
def _j_tower(depth: int) -> Poset:
    p = product(chain(2), chain(3))
    for _ in range(depth):
        p = ideals_poset(p)
    return p


# -- closed-form antichain polynomials ---------------------------------------


def square_grid_antichain_poly(n: int) -> IntPoly:
    """Antichain polynomial of the n-by-n grid: sum of C(n,i)^2 x^i."""
    return IntPoly([comb(n, i) ** 2 for i in range(n + 1)])


def staircase_antichain_poly(n: int) -> IntPoly:
    """Antichain polynomial of the staircase: sum of C(n+1, 2i) x^i."""
    return IntPoly([comb(n + 1, 2 * i) for i in range(n // 2 + 2)])


def diamond_antichain_poly(n: int) -> IntPoly:
    return IntPoly([1, 2 * n + 2, 1])


def j3_antichain_poly() -> IntPoly:
    return IntPoly([1, 27, 27, 1])


def closed_form_antichain_poly(kind: str, *params: int) -> IntPoly:
    if kind == "grid":
        m, n = params
        if m != n:
            raise ValueError("closed form available for square grids only")
        return square_grid_antichain_poly(n)
    if kind == "staircase":
        return staircase_antichain_poly(params[0])
    if kind == "diamond":
        return diamond_antichain_poly(params[0])
    if kind == "j3":
        return j3_antichain_poly()
    raise ValueError(f"no closed-form antichain polynomial for {kind!r}")


# -- Narayana polynomials ------------------------------------------------------


def _multinomial(n: int, a: int, b: int, c: int) -> int:
    if a + b + c != n:
        raise ValueError("parts must sum to n")
    return comb(n, a) * comb(n - a, b)


def narayana_b(n: int) -> IntPoly:
    """Type-B Narayana polynomial, expanded from its gamma basis form."""
    if n < 1:
        raise ValueError("n must be positive")
    acc = IntPoly()
    for i in range(n // 2 + 1):
        coeff = _multinomial(n, i, i, n - 2 * i)
        acc = acc + one_plus_x_power(n - 2 * i).shift(i).scale(coeff)
    return acc


def narayana_d(m: int) -> IntPoly:
    """Type-D Narayana polynomial for even rank m >= 4.  Each gamma-basis
    coefficient (m-1-i)/(m-1) * multinomial(m; i, i, m-2i) must be an integer;
    a fractional value signals a bad parameter."""
    if m < 4 or m % 2:
        raise ValueError("rank must be an even integer >= 4")
    n = (m - 2) // 2
    acc = IntPoly()
    for i in range(n + 2):
        coeff = Fraction(2 * n + 1 - i, 2 * n + 1) * _multinomial(
            2 * n + 2, i, i, 2 * n + 2 - 2 * i)
        if coeff.denominator != 1:
            raise ValueError(f"non-integer gamma coefficient at i={i}")
        acc = acc + one_plus_x_power(2 * n + 2 - 2 * i).shift(i).scale(int(coeff))
    return acc


# -- ideal generating polynomial via the rank product formula -------------------


def _divide_by_one_minus_x_power(coeffs: list[int], e: int) -> list[int]:
    """Exact division by (1 - x^e); raises on a nonzero remainder."""
    out_len = len(coeffs) - e
    q = [0] * max(out_len, 0)
    for i in range(len(coeffs)):
        val = coeffs[i] + (q[i - e] if i >= e else 0)
        if i < out_len:
            q[i] = val
        elif val:
            raise ValueError("inexact division: poset is not minuscule-like")
    return q


def ideal_product_formula(p: Poset, k: int,
                          max_ideals: int = DEFAULT_MAX_IDEALS) -> IntPoly:
    """Ideal generating polynomial of the product of a k-chain with p, as the
    rank-indexed product of (1 - x^(r+k)) / (1 - x^r) factors.

    Valid for the minuscule families; on other graded posets the final exact
    division fails and a ValueError is raised.  k = 0 degenerates to 1.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    ranks = sorted(p.ranks())
    numerator: dict[int, int] = {}
    denominator: dict[int, int] = {}
    for r in ranks:
        numerator[r + k] = numerator.get(r + k, 0) + 1
        denominator[r] = denominator.get(r, 0) + 1
    for e in list(numerator):
        common = min(numerator[e], denominator.get(e, 0))
        if common:
            numerator[e] -= common
            denominator[e] -= common
    coeffs = [1]
    for e, mult in sorted(numerator.items()):
        for _ in range(mult):
            length = len(coeffs)
            out = coeffs + [0] * e
            for i in range(length):
                out[i + e] -= coeffs[i]
            coeffs = out
    for e, mult in sorted(denominator.items()):
        for _ in range(mult):
            coeffs = _divide_by_one_minus_x_power(coeffs, e)
    return IntPoly(coeffs)


# -- monicity classification -----------------------------------------------------


def monic_classification(kind: str, params: tuple[int, ...], k: int) -> bool:
    """Whether the antichain polynomial of the product of a k-chain with the
    tagged family member is monic, by the case list of the classification."""
    if k < 1:
        raise ValueError("k must be positive")
    if kind == "grid":
        m, n = min(params), max(params)
        return n - m + 1 <= k <= n + m - 1 and (k - (n - m + 1)) % 2 == 0
    if kind == "staircase":
        n = params[0]
        if k > 2 * n - 1:
            return False
        return k % 4 == (1 if n % 2 else 3)
    if kind == "diamond":
        n = params[0]
        return k in (1, 2 * n + 1)
    if kind == "j2":
        return k in (5, 11)
    if kind == "j3":
        return k in (1, 9, 17)
    raise ValueError(f"unknown family kind {kind!r}")


# -- independent 4-tuple model of the ideals of j2 ---------------------------------

_J2_RANGES = (
    tuple(range(5)),
    (0, 3, 4, 5, 6),
    (0, 3, 4, 5, 6),
    (0, 5, 6, 7, 8),
)

J2Code = tuple[int, int, int, int]


def _j2_slack(code: J2Code) -> tuple[int, int, int, int]:
    a, b, c, d = code
    return (a - min(b, 4), b - c, c - min(6, d), d)


def is_valid_j2_code(code: J2Code) -> bool:
    return (all(x in r for x, r in zip(code, _J2_RANGES))
            and all(s >= 0 for s in _j2_slack(code)))


def enumerate_j2_ideal_codes() -> list[J2Code]:
    """All valid 4-tuples, lexicographically (a linear extension of the
    componentwise order)."""
    out = [
        (a, b, c, d)
        for a in _J2_RANGES[0]
        for b in _J2_RANGES[1]
        for c in _J2_RANGES[2]
        for d in _J2_RANGES[3]
        if is_valid_j2_code((a, b, c, d))
    ]
    out.sort()
    return out


def j2_max_count(code: J2Code) -> int:
    """Number of maximal elements of the coded ideal: the count of strict
    inequalities among the code constraints."""
    if not is_valid_j2_code(code):
        raise ValueError(f"invalid code {code!r}")
    return sum(1 for s in _j2_slack(code) if s > 0)


def j2_relative_max_count(code_i: J2Code, code_j: J2Code) -> int:
    """Number of maximal elements of ideal I outside the sub-ideal J: the
    count of nonzero products (coordinate drop) * (constraint slack)."""
    for code in (code_i, code_j):
        if not is_valid_j2_code(code):
            raise ValueError(f"invalid code {code!r}")
    if any(x < y for x, y in zip(code_i, code_j)):
        raise ValueError("second code must be componentwise below the first")
    slack = _j2_slack(code_i)
    drops = tuple(x - y for x, y in zip(code_i, code_j))
    return sum(1 for dr, sl in zip(drops, slack) if dr * sl != 0)


def j2_antichain_poly_k(k: int) -> IntPoly:
    """Antichain polynomial of the product of a k-chain with j2, computed
    entirely from the 4-tuple model (for cross-validation of the generic
    transfer engine)."""
    if k < 1:
        raise ValueError("k must be positive")
    codes = enumerate_j2_ideal_codes()
    rows = []
    for i, upper in enumerate(codes):
        row = []
        for j, lower in enumerate(codes[:i + 1]):
            if all(x >= y for x, y in zip(upper, lower)):
                row.append((j, j2_relative_max_count(upper, lower)))
        rows.append(row)
    vec = [IntPoly.monomial(j2_max_count(code)) for code in codes]
    for _ in range(k - 1):
        new = []
        for row in rows:
            acc: list[int] = []
            for j, e in row:
                coeffs = vec[j].coeffs
                need = e + len(coeffs)
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for idx, val in enumerate(coeffs):
                    acc[e + idx] += val
            new.append(IntPoly(acc))
        vec = new
    total = IntPoly()
    for entry in vec:
        total = total + entry
    return total
