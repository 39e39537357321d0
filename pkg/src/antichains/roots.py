"""Exact real-root analysis of integer polynomials.

Every verdict here is decided over the rationals: square-free decomposition
(Yun), Sturm chains, bisection-based root isolation, and exact sign
evaluations at rational points.  Floating point never enters a decision.

Conventions.  Internal polynomials are plain coefficient lists (constant term
first).  Isolating intervals are half-open (lo, hi] with the root strictly
interior, or degenerate points [m, m] when the root is the rational m itself.
Interlacing is weak: shared roots are allowed, matching root chains compared
with <= throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd as int_gcd

from .errors import ZeroPolynomialError
from .polynomials import IntPoly

Coeffs = list[int]


# -- integer/rational polynomial helpers -------------------------------------


def _trim(p: Coeffs) -> Coeffs:
    while p and p[-1] == 0:
        p.pop()
    return p


def _degree(p: Coeffs) -> int:
    return len(p) - 1


def _derivative(p: Coeffs) -> Coeffs:
    return [i * c for i, c in enumerate(p)][1:]


def _content(p: Coeffs) -> int:
    g = 0
    for c in p:
        g = int_gcd(g, abs(c))
    return g or 1


def _primitive(p: Coeffs) -> Coeffs:
    """Divide by the content; the sign of every coefficient is preserved."""
    g = _content(p)
    return [c // g for c in p]


def _from_fractions(p: list[Fraction]) -> Coeffs:
    """Clear denominators with a positive multiplier and take the primitive part."""
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    if not p:
        return []
    lcm = 1
    for c in p:
        d = c.denominator
        lcm = lcm // int_gcd(lcm, d) * d
    return _primitive([int(c * lcm) for c in p])


def _qq_rem(a: Coeffs, b: Coeffs) -> list[Fraction]:
    """Remainder of a modulo b over the rationals."""
    r = [Fraction(c) for c in a]
    db = _degree(b)
    lb = Fraction(b[-1])
    while r and len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            continue
        factor = r[-1] / lb
        offset = len(r) - 1 - db
        for i in range(db):
            r[offset + i] -= factor * b[i]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _div_fractions(a: Coeffs, b: Coeffs) -> list[Fraction]:
    """Exact quotient a / b over the rationals; raises on a remainder."""
    r = [Fraction(c) for c in a]
    db = _degree(b)
    lb = Fraction(b[-1])
    q: list[Fraction] = [Fraction(0)] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            continue
        factor = r[-1] / lb
        offset = len(r) - 1 - db
        q[offset] = factor
        for i in range(db):
            r[offset + i] -= factor * b[i]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _qq_div_exact(a: Coeffs, b: Coeffs) -> Coeffs:
    """Exact quotient a / b, as a primitive integer polynomial."""
    return _from_fractions(_div_fractions(a, b))


def _div_exact(a: Coeffs, b: Coeffs) -> Coeffs:
    """Exact quotient a / b with no content normalization; the result must be
    integral (true throughout Yun's recurrence on integer inputs)."""
    q = _div_fractions(a, b)
    if any(c.denominator != 1 for c in q):
        raise ArithmeticError("quotient is not an integer polynomial")
    return [int(c) for c in q]


def _poly_gcd(a: Coeffs, b: Coeffs) -> Coeffs:
    """Primitive gcd with positive leading coefficient; [1] for coprime inputs."""
    a = _primitive(_trim(list(a)))
    b = _primitive(_trim(list(b)))
    if not a:
        a, b = b, a
    while b:
        a, b = b, _from_fractions(_qq_rem(a, b))
    if not a:
        return [1]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _squarefree_part(p: Coeffs) -> Coeffs:
    g = _poly_gcd(p, _derivative(p))
    if _degree(g) == 0:
        sq = _primitive(list(p))
    else:
        sq = _qq_div_exact(p, g)
    if sq[-1] < 0:
        sq = [-c for c in sq]
    return sq


def _yun_factors(p: Coeffs) -> list[tuple[Coeffs, int]]:
    """Square-free decomposition: [(factor, multiplicity)], factors monic-signed."""
    p = _primitive(_trim(list(p)))
    if p[-1] < 0:
        p = [-c for c in p]
    if _degree(p) < 1:
        return []
    d = _derivative(p)
    g = _poly_gcd(p, d)
    w = _div_exact(p, g) if _degree(g) > 0 else p
    y = _div_exact(d, g) if _degree(g) > 0 else d
    z = [yi - wi for yi, wi in _pad(y, _derivative(w))]
    _trim(z)
    factors: list[tuple[Coeffs, int]] = []
    i = 1
    while _degree(w) > 0:
        a = _poly_gcd(w, z)
        if _degree(a) > 0:
            factors.append((_positive_primitive(a), i))
        w = _div_exact(w, a) if _degree(a) > 0 else w
        y = _div_exact(z, a) if _degree(a) > 0 else z
        z = [yi - wi for yi, wi in _pad(y, _derivative(w))]
        _trim(z)
        i += 1
    return factors


def _positive_primitive(p: Coeffs) -> Coeffs:
    p = _primitive(p)
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def _pad(a: Coeffs, b: Coeffs) -> list[tuple[int, int]]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


# -- Sturm chains -------------------------------------------------------------


def _sturm_chain(sq: Coeffs) -> list[Coeffs]:
    """Sturm chain of a square-free polynomial."""
    chain = [list(sq)]
    d = _derivative(sq)
    if d:
        chain.append(d)
    while _degree(chain[-1]) > 0:
        r = _from_fractions([-c for c in _qq_rem(chain[-2], chain[-1])])
        if not r:
            break
        chain.append(r)
    return chain


def _sign_at(p: Coeffs, x: Fraction) -> int:
    """Sign of p(x) via integer Horner (numerator/denominator powers)."""
    num, den = x.numerator, x.denominator
    acc = 0
    power = 1
    for c in reversed(p):
        acc = acc * num + c * power
        power *= den
    return (acc > 0) - (acc < 0)


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain: list[Coeffs], x: Fraction) -> int:
    return _variations([_sign_at(p, x) for p in chain])


def _variations_at_pos_inf(chain: list[Coeffs]) -> int:
    return _variations([(1 if p[-1] > 0 else -1) for p in chain])


def _variations_at_neg_inf(chain: list[Coeffs]) -> int:
    return _variations(
        [(1 if p[-1] > 0 else -1) * (-1 if _degree(p) % 2 else 1) for p in chain]
    )


def _count_in(chain: list[Coeffs], lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in the half-open interval (lo, hi]."""
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def _root_bound(p: Coeffs) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p[-1])
    biggest = max((abs(c) for c in p[:-1]), default=0)
    return 1 + Fraction(biggest, lead)


# -- isolation ----------------------------------------------------------------


@dataclass(frozen=True)
class RootInterval:
    """One distinct real root: lo == hi pins a rational root exactly,
    otherwise the root lies strictly inside (lo, hi]."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class RootIsolation:
    """Pairwise-disjoint isolating intervals, ascending, one per distinct root."""

    intervals: tuple[RootInterval, ...]

    @property
    def real_root_count(self) -> int:
        return sum(iv.multiplicity for iv in self.intervals)

    @property
    def distinct_root_count(self) -> int:
        return len(self.intervals)


def _isolate_squarefree(sq: Coeffs) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots of a square-free poly."""
    if _degree(sq) < 1:
        return []
    chain = _sturm_chain(sq)
    bound = _root_bound(sq)
    total = _count_in(chain, -bound, bound)
    out: list[tuple[Fraction, Fraction]] = []
    stack: list[tuple[Fraction, Fraction, int]] = []
    if total:
        stack.append((-bound, bound, total))
    while stack:
        lo, hi, count = stack.pop()
        if count == 1:
            if _sign_at(sq, hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count_in(chain, lo, mid)
        if left:
            stack.append((lo, mid, left))
        if count - left:
            stack.append((mid, hi, count - left))
    out.sort()
    return out


def _roots_in_interval(factor_chains: list[list[Coeffs]], lo: Fraction, hi: Fraction,
                       factors: list[tuple[Coeffs, int]]) -> int:
    """Total multiplicity contributed by the square-free factors on (lo, hi]."""
    total = 0
    for (factor, mult), chain in zip(factors, factor_chains):
        if lo == hi:
            if _sign_at(factor, lo) == 0:
                total += mult
        elif _count_in(chain, lo, hi):
            total += mult
    return total


def isolate_roots(f: IntPoly) -> RootIsolation:
    """Isolate the distinct real roots of f with multiplicities."""
    if not f:
        raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
    p = list(f.coeffs)
    if _degree(p) < 1:
        return RootIsolation(())
    sq = _squarefree_part(p)
    factors = _yun_factors(p)
    factor_chains = [_sturm_chain(fac) for fac, _ in factors]
    intervals = []
    for lo, hi in _isolate_squarefree(sq):
        mult = _roots_in_interval(factor_chains, lo, hi, factors)
        intervals.append(RootInterval(lo, hi, mult))
    return RootIsolation(tuple(intervals))


def refine_root(f: IntPoly, interval: RootInterval, width: Fraction) -> RootInterval:
    """Shrink an isolating interval of f below the requested width."""
    if interval.is_point:
        return interval
    sq = _squarefree_part(list(f.coeffs))
    chain = _sturm_chain(sq)
    lo, hi = interval.lo, interval.hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _sign_at(sq, mid) == 0:
            return RootInterval(mid, mid, interval.multiplicity)
        if _count_in(chain, lo, mid):
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi, interval.multiplicity)


def is_real_rooted(f: IntPoly) -> bool:
    """True iff every complex root of f is real (constants vacuously so)."""
    if not f:
        raise ZeroPolynomialError("the zero polynomial has no root multiset")
    p = list(f.coeffs)
    if _degree(p) < 1:
        return True
    sq = _squarefree_part(p)
    chain = _sturm_chain(sq)
    distinct = _variations_at_neg_inf(chain) - _variations_at_pos_inf(chain)
    return distinct == _degree(sq)


# -- interlacing ----------------------------------------------------------------


class InterlaceVerdict(Enum):
    INTERLACES = "interlaces"
    DOES_NOT_INTERLACE = "does-not-interlace"
    DEGREE_MISMATCH = "degree-mismatch"


def _merged_profile(f: IntPoly, g: IntPoly):
    """Shared isolation of the roots of f and g.

    Returns (intervals, mf, mg): the distinct roots of f*g as a sorted list of
    intervals, with the multiplicity each root carries in f and in g.
    """
    pf, pg = list(f.coeffs), list(g.coeffs)
    sqf, sqg = _squarefree_part(pf), _squarefree_part(pg)
    common = _poly_gcd(sqf, sqg)
    w = _qq_div_exact(_mul(sqf, sqg), common) if _degree(common) > 0 else _mul(sqf, sqg)
    w = _squarefree_part(w)  # normalizes sign; already square-free
    yf, yg = _yun_factors(pf), _yun_factors(pg)
    cf = [_sturm_chain(fac) for fac, _ in yf]
    cg = [_sturm_chain(fac) for fac, _ in yg]
    intervals = _isolate_squarefree(w)
    mf = [_roots_in_interval(cf, lo, hi, yf) for lo, hi in intervals]
    mg = [_roots_in_interval(cg, lo, hi, yg) for lo, hi in intervals]
    return intervals, mf, mg


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _descending_ids(mults: list[int]) -> list[int]:
    """Root ids (ascending index = ascending value) repeated by multiplicity,
    listed from the largest root down."""
    out: list[int] = []
    for idx in range(len(mults) - 1, -1, -1):
        out.extend([idx] * mults[idx])
    return out


def interlaces(f: IntPoly, g: IntPoly) -> InterlaceVerdict:
    """Decide whether f interlaces g: the (weakly) alternating root chain
    ... <= x_2 <= xi_2 <= x_1 <= xi_1 with x the roots of f, xi those of g."""
    if not f or not g:
        return InterlaceVerdict.DOES_NOT_INTERLACE
    if not (f.degree <= g.degree <= f.degree + 1):
        return InterlaceVerdict.DEGREE_MISMATCH
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return InterlaceVerdict.DOES_NOT_INTERLACE
    _, mf, mg = _merged_profile(f, g)
    F = _descending_ids(mf)
    G = _descending_ids(mg)
    for i in range(len(F)):
        if F[i] > G[i]:
            return InterlaceVerdict.DOES_NOT_INTERLACE
        if i + 1 < len(G) and F[i] < G[i + 1]:
            return InterlaceVerdict.DOES_NOT_INTERLACE
    return InterlaceVerdict.INTERLACES


def _combine(f: IntPoly, g: IntPoly, c1: Fraction, c2: Fraction) -> IntPoly:
    n = max(len(f.coeffs), len(g.coeffs))
    mixed = [c1 * f.coefficient(i) + c2 * g.coefficient(i) for i in range(n)]
    return IntPoly(_from_fractions(mixed))


def obreschkoff_combination_test(f: IntPoly, g: IntPoly,
                                 combinations: list[tuple]) -> bool:
    """Necessary-condition battery for interlacing: every listed combination
    c1*f + c2*g must be real-rooted (zero and constant combinations pass
    vacuously)."""
    for c1, c2 in combinations:
        h = _combine(f, g, Fraction(c1), Fraction(c2))
        if not h:
            continue
        if not is_real_rooted(h):
            return False
    return True


class InterleaverStatus(Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CommonInterleaverResult:
    status: InterleaverStatus
    interleaver: IntPoly | None = None
    refuted_at: tuple[Fraction, Fraction] | None = None


def _pick_between(lower, upper) -> Fraction | None:
    """A rational >= the root in `lower` and <= the root in `upper` (either
    may be None for an unbounded side).  Intervals must be distinct roots."""
    if lower is None and upper is None:
        return Fraction(0)
    if lower is None:
        return upper[0]  # at or below the root (equality only for a point)
    if upper is None:
        return lower[1]
    a_hi, b_lo = lower[1], upper[0]
    if a_hi <= b_lo:
        return (a_hi + b_lo) / 2 if a_hi < b_lo else a_hi
    return None


def _candidate_interleaver(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Build a rational-rooted h with f <= h and g <= h in the interlacing
    order, by threading rationals through the merged root isolation.  Returns
    None when the construction would need an irrational (forced shared root)
    or no degree works."""
    intervals, mf, mg = _merged_profile(f, g)
    F = _descending_ids(mf)
    G = _descending_ids(mg)
    if f.degree == g.degree:
        degree_choices = [f.degree, f.degree + 1]
    elif abs(f.degree - g.degree) == 1:
        degree_choices = [max(f.degree, g.degree)]
    else:
        return None

    for d in degree_choices:
        roots: list[Fraction] = []
        ok = True
        for i in range(1, d + 1):
            lows = [seq[i - 1] for seq in (F, G) if i - 1 < len(seq)]
            ups = [seq[i - 2] for seq in (F, G) if 0 <= i - 2 < len(seq)]
            lb = max(lows) if lows else None
            ub = min(ups) if ups else None
            if lb is not None and ub is not None:
                if lb > ub:
                    ok = False
                    break
                if lb == ub:
                    iv = intervals[lb]
                    if iv[0] != iv[1]:
                        ok = False  # forced exact root is irrational
                        break
                    roots.append(iv[0])
                    continue
            pick = _pick_between(
                intervals[lb] if lb is not None else None,
                intervals[ub] if ub is not None else None,
            )
            if pick is None:
                ok = False
                break
            roots.append(pick)
        if not ok:
            continue
        h = IntPoly([1])
        for r in roots:
            h = h * IntPoly(_from_fractions([-r, Fraction(1)]))
        if (interlaces(f, h) is InterlaceVerdict.INTERLACES
                and interlaces(g, h) is InterlaceVerdict.INTERLACES):
            return h
    return None


def common_interleaver_check(f: IntPoly, g: IntPoly,
                             grid: int = 16) -> CommonInterleaverResult:
    """Three-valued search for a common interleaver of f and g.

    Certification: g (or f) when one interlaces the other, else a candidate
    threaded through the merged root isolation.  Refutation: a nonnegative
    combination c1*f + c2*g that is not real-rooted (such combinations are
    real-rooted whenever a common interleaver exists).  Otherwise Unknown.
    """
    for name, p in (("f", f), ("g", g)):
        if not p or not is_real_rooted(p) or p.leading_coefficient <= 0:
            raise ValueError(
                f"{name} must be real-rooted with a positive leading coefficient")
    if interlaces(f, g) is InterlaceVerdict.INTERLACES:
        return CommonInterleaverResult(InterleaverStatus.CERTIFIED, interleaver=g)
    if interlaces(g, f) is InterlaceVerdict.INTERLACES:
        return CommonInterleaverResult(InterleaverStatus.CERTIFIED, interleaver=f)
    candidate = _candidate_interleaver(f, g)
    if candidate is not None:
        return CommonInterleaverResult(InterleaverStatus.CERTIFIED, interleaver=candidate)

    combos = {(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))}
    for i in range(grid + 1):
        for j in range(grid + 1):
            if i + j:
                combos.add((Fraction(i, i + j), Fraction(j, i + j)))
    for c1, c2 in sorted(combos):
        h = _combine(f, g, c1, c2)
        if h and not is_real_rooted(h):
            return CommonInterleaverResult(
                InterleaverStatus.REFUTED, refuted_at=(c1, c2))
    return CommonInterleaverResult(InterleaverStatus.UNKNOWN)
