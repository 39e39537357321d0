"""Exact real-root decisions: Sturm counts, isolation, interlacing."""

import random
from fractions import Fraction

import pytest

from antichains.errors import ZeroPolynomialError
from antichains.polynomials import IntPoly, one_plus_x_power
from antichains.roots import (InterlaceVerdict,
                              InterleaverStatus, common_interleaver_check,
                              interlaces, is_real_rooted, isolate_roots,
                              obreschkoff_combination_test, refine_root)


def poly_from_roots(roots, lead=1):
    poly = IntPoly([lead])
    for r in roots:
        poly = poly * IntPoly([-r, 1])
    return poly


def test_real_rooted_basics():
    assert is_real_rooted(IntPoly([1, 4, 1]))  # discriminant 12 > 0
    assert not is_real_rooted(IntPoly([1, 0, 1]))
    assert is_real_rooted(one_plus_x_power(9))
    assert is_real_rooted(IntPoly([5]))
    assert is_real_rooted(IntPoly([3, 7]))
    with pytest.raises(ZeroPolynomialError):
        is_real_rooted(IntPoly.ZERO)


def test_real_rooted_on_seeded_factorizations():
    rng = random.Random(19)
    for _ in range(60):
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 6))]
        assert is_real_rooted(poly_from_roots(roots, lead=rng.choice([1, 2, -3])))
    for _ in range(30):
        roots = [rng.randint(-4, 4) for _ in range(rng.randint(0, 4))]
        tainted = poly_from_roots(roots) * IntPoly([1, 0, 1])
        assert not is_real_rooted(tainted)


def test_isolation_simple():
    iso = isolate_roots(IntPoly([-2, 0, 1]))  # x^2 - 2
    assert iso.distinct_root_count == 2
    assert iso.real_root_count == 2
    lo_iv, hi_iv = iso.intervals
    assert lo_iv.hi <= hi_iv.lo


def test_isolation_refinement_brackets_roots():
    poly = IntPoly([1, 4, 1])  # roots -2-sqrt(3), -2+sqrt(3)
    iso = isolate_roots(poly)
    refined = [refine_root(poly, iv, Fraction(1, 1000)) for iv in iso.intervals]
    assert all(Fraction(-4) < iv.lo and iv.hi < 0 for iv in refined)
    widths = [iv.hi - iv.lo for iv in refined]
    assert all(w <= Fraction(1, 1000) for w in widths)


def test_isolation_multiplicities():
    iso = isolate_roots(one_plus_x_power(3))
    assert iso.distinct_root_count == 1
    assert iso.intervals[0].multiplicity == 3
    mixed = IntPoly([0, 0, 1]) * one_plus_x_power(2) * IntPoly([-2, 1])
    iso = isolate_roots(mixed)
    assert [iv.multiplicity for iv in iso.intervals] == [2, 2, 1]
    assert iso.real_root_count == 5


def test_isolation_counts_match_seeded_factorizations():
    rng = random.Random(23)
    for _ in range(40):
        roots = sorted(rng.sample(range(-8, 9), rng.randint(1, 4)))
        mults = [rng.randint(1, 3) for _ in roots]
        poly = IntPoly([1])
        for r, m in zip(roots, mults):
            for _ in range(m):
                poly = poly * IntPoly([-r, 1])
        iso = isolate_roots(poly)
        assert iso.distinct_root_count == len(roots)
        assert [iv.multiplicity for iv in iso.intervals] == mults
        for (lo, hi), r in zip(((iv.lo, iv.hi) for iv in iso.intervals), roots):
            assert lo <= r <= hi


def test_isolation_rejects_zero():
    with pytest.raises(ZeroPolynomialError):
        isolate_roots(IntPoly.ZERO)


def test_sturm_verdict_matches_isolation_count():
    # dual route: the Sturm-based decision agrees with counting isolated
    # roots (with multiplicity) against the degree
    rng = random.Random(41)
    polys = [IntPoly([1, 4, 1]), IntPoly([1, 0, 1]), one_plus_x_power(5),
             IntPoly([2, 0, 0, 1]), IntPoly([-1, 0, 0, 0, 1])]
    for _ in range(40):
        polys.append(IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 7))]))
    for poly in polys:
        if not poly or poly.degree < 1:
            continue
        assert is_real_rooted(poly) == \
            (isolate_roots(poly).real_root_count == poly.degree), poly.coeffs


def test_interlaces_examples():
    assert interlaces(IntPoly([1, 1]), IntPoly([1, 3, 1])) \
        is InterlaceVerdict.INTERLACES
    assert interlaces(IntPoly([1, 3, 1]), IntPoly([1, 1])) \
        is InterlaceVerdict.DEGREE_MISMATCH
    assert interlaces(IntPoly([1, 1]), IntPoly([2, 1])) \
        is InterlaceVerdict.DOES_NOT_INTERLACE
    assert interlaces(IntPoly([2, 1]), IntPoly([1, 1])) \
        is InterlaceVerdict.INTERLACES
    # degree gate fires before the real-rootedness gate
    assert interlaces(IntPoly([1, 0, 1]), IntPoly([0, 1])) \
        is InterlaceVerdict.DEGREE_MISMATCH
    assert interlaces(IntPoly([1, 0, 1]), IntPoly([1, 3, 1])) \
        is InterlaceVerdict.DOES_NOT_INTERLACE


def test_interlaces_allows_ties():
    poly = IntPoly([1, 3, 1])
    assert interlaces(poly, poly) is InterlaceVerdict.INTERLACES
    shared = IntPoly([2, 3, 1])  # roots -2, -1
    f = IntPoly([1, 1]) * IntPoly([1, 1])  # double root -1
    assert interlaces(f, shared) is InterlaceVerdict.DOES_NOT_INTERLACE
    assert interlaces(IntPoly([1, 1]), IntPoly([1, 2, 1])) \
        is InterlaceVerdict.INTERLACES


def test_interlaces_on_seeded_interleaved_roots():
    # alternating values g_0 < f_0 < g_1 < f_1 < ... put f's roots weakly
    # above g's at every index, so g interlaces f (equal degrees)
    rng = random.Random(31)
    for _ in range(40):
        m = rng.randint(1, 5)
        values = sorted(rng.sample(range(-20, 21), 2 * m))
        g = poly_from_roots(values[0::2])
        f = poly_from_roots(values[1::2])
        assert interlaces(g, f) is InterlaceVerdict.INTERLACES
        if m > 1:
            assert interlaces(f, g) is InterlaceVerdict.DOES_NOT_INTERLACE


def test_obreschkoff_battery():
    f, g = IntPoly([1, 1]), IntPoly([1, 2])
    assert obreschkoff_combination_test(f, g, [(1, 1), (1, -1), (2, 3)])
    assert not obreschkoff_combination_test(
        IntPoly([1, 0, 1]), IntPoly([0, 1]), [(1, 0)])
    assert obreschkoff_combination_test(f, f, [(1, -1)])  # zero combination


def test_obreschkoff_forward_direction():
    rng = random.Random(37)
    battery = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (1, -1), (-3, 2),
               (Fraction(1, 2), Fraction(1, 3))]
    for _ in range(25):
        m = rng.randint(1, 4)
        values = sorted(rng.sample(range(-15, 16), 2 * m + 1))
        g_roots = values[1::2]
        f_roots = values[0::2]
        f, g = poly_from_roots(f_roots), poly_from_roots(g_roots)
        assert interlaces(g, f) is InterlaceVerdict.INTERLACES
        assert obreschkoff_combination_test(g, f, battery)


def test_common_interleaver_trivial_certificates():
    f, g = IntPoly([1, 4]), IntPoly([0, 4, 6])
    result = common_interleaver_check(f, g)
    assert result.status is InterleaverStatus.CERTIFIED
    assert result.interleaver == g
    swapped = common_interleaver_check(g, f)
    assert swapped.status is InterleaverStatus.CERTIFIED
    assert swapped.interleaver == g


def test_common_interleaver_candidate_path():
    f = poly_from_roots([-2, -1])
    g = IntPoly([3, 7, 2])  # roots -3, -1/2: neither interlaces the other
    assert interlaces(f, g) is InterlaceVerdict.DOES_NOT_INTERLACE
    assert interlaces(g, f) is InterlaceVerdict.DOES_NOT_INTERLACE
    result = common_interleaver_check(f, g)
    assert result.status is InterleaverStatus.CERTIFIED
    h = result.interleaver
    assert interlaces(f, h) is InterlaceVerdict.INTERLACES
    assert interlaces(g, h) is InterlaceVerdict.INTERLACES


def test_common_interleaver_refutation():
    f = poly_from_roots([-5, -6])
    g = poly_from_roots([0, -1])
    result = common_interleaver_check(f, g)
    assert result.status is InterleaverStatus.REFUTED
    c1, c2 = result.refuted_at
    assert c1 >= 0 and c2 >= 0
    combo = f.scale(c1.numerator * c2.denominator) + \
        g.scale(c2.numerator * c1.denominator)
    assert not is_real_rooted(combo)


def test_common_interleaver_precondition():
    with pytest.raises(ValueError):
        common_interleaver_check(IntPoly([1, 0, 1]), IntPoly([1, 1]))
    with pytest.raises(ValueError):
        common_interleaver_check(IntPoly([1, 1]), IntPoly([-1, -1]))


def test_interlaces_shared_root_at_zero():
    f = IntPoly((0, 4, 22, 14))
    g = IntPoly((0, 0, 16, 38, 11))
    assert is_real_rooted(f) and is_real_rooted(g)
    assert interlaces(f, g) is InterlaceVerdict.INTERLACES


def test_interlaces_shared_irrational_roots():
    # both polynomials vanish at the two square roots of 2
    base = IntPoly([-2, 0, 1])
    f = base * IntPoly([1, 1])   # roots -sqrt2, -1, sqrt2
    g = base * IntPoly([3, 1])   # roots -3, -sqrt2, sqrt2
    assert is_real_rooted(f) and is_real_rooted(g)
    # descending chains tie at +-sqrt2: f needs its middle root above g's
    assert interlaces(g, f) is InterlaceVerdict.INTERLACES
    assert interlaces(f, g) is InterlaceVerdict.DOES_NOT_INTERLACE
    wide = base * IntPoly([-5, 1])  # roots -sqrt2, sqrt2, 5
    assert interlaces(f, wide) is InterlaceVerdict.INTERLACES


def test_common_interleaver_with_forced_rational_tie():
    # identical top roots at 0 force the candidate through the shared point
    f = IntPoly([0, 2, 1])   # roots -2, 0
    g = IntPoly([0, 4, 1])   # roots -4, 0
    result = common_interleaver_check(f, g)
    assert result.status is InterleaverStatus.CERTIFIED
    h = result.interleaver
    assert interlaces(f, h) is InterlaceVerdict.INTERLACES
    assert interlaces(g, h) is InterlaceVerdict.INTERLACES


def test_common_interleaver_forced_irrational_tie_is_unknown_or_certified():
    # shared irrational双 roots can make a rational certificate impossible;
    # the search must stay sound: never a bogus refutation of an
    # actually-interleaving configuration
    base = IntPoly([-2, 0, 1])
    f = base * IntPoly([1, 1])
    g = base * IntPoly([2, 1])
    result = common_interleaver_check(f, g)
    assert result.status in (InterleaverStatus.CERTIFIED,
                             InterleaverStatus.UNKNOWN)
