"""Dense univariate polynomials with arbitrary-precision integer coefficients.

IntPoly is immutable.  Coefficients are stored constant term first with no
trailing zeros; the zero polynomial has an empty coefficient tuple and reports
degree -1 (the sentinel for "minus infinity").

Besides arithmetic, this module houses the coefficient-level structure tests
(palindromic, monic, unimodal, log-concave), the gamma expansion in the basis
x^i (1+x)^(n-2i), and the even-index extraction operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class IntPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self._c) - 1

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    @property
    def leading_coefficient(self) -> int:
        if not self._c:
            return 0
        return self._c[-1]

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "IntPoly":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return IntPoly([0] * exponent + [coefficient])

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-x for x in self._c])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self._c, other._c
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly([c * x for x in self._c])

    def shift(self, e: int) -> "IntPoly":
        """Multiply by x^e."""
        if e < 0:
            raise ValueError("shift must be nonnegative")
        if not self._c:
            return self
        return IntPoly((0,) * e + self._c)

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self._c)][1:])

    # -- structure tests ----------------------------------------------------

    def is_palindromic(self) -> bool:
        """a_i == a_(n-i) for all i; False for the zero polynomial."""
        if not self._c:
            return False
        return self._c == self._c[::-1]

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def is_unimodal(self) -> bool:
        """Coefficients rise to a peak and then fall (plateaus allowed)."""
        if not self._c:
            return False
        i = 0
        while i + 1 < len(self._c) and self._c[i] <= self._c[i + 1]:
            i += 1
        while i + 1 < len(self._c) and self._c[i] >= self._c[i + 1]:
            i += 1
        return i == len(self._c) - 1

    def is_log_concave(self) -> bool:
        """a_i^2 >= a_(i-1) a_(i+1) at every internal index."""
        c = self._c
        return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))

    # -- text I/O -----------------------------------------------------------

    def pretty(self) -> str:
        """Human-readable form, e.g. '1 + 6x + 3x^2'."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "x" if mag == 1 else f"{mag}x"
            else:
                term = f"x^{i}" if mag == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def coeff_csv(self) -> str:
        """Comma-separated coefficients, constant term first."""
        if not self._c:
            return "0"
        return ",".join(str(c) for c in self._c)

    @classmethod
    def from_csv(cls, text: str) -> "IntPoly":
        return cls(int(part.strip()) for part in text.split(","))

    def __repr__(self) -> str:
        return f"IntPoly({list(self._c)!r})"

    def __str__(self) -> str:
        return self.pretty()


IntPoly.ZERO = IntPoly()
IntPoly.ONE = IntPoly([1])
IntPoly.X = IntPoly([0, 1])


def one_plus_x_power(n: int) -> IntPoly:
    """(1+x)^n by binomial coefficients."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    from math import comb

    return IntPoly([comb(n, i) for i in range(n + 1)])


class GammaStatus(Enum):
    EXACT = "exact"
    NOT_PALINDROMIC = "not-palindromic"


@dataclass(frozen=True)
class GammaExpansion:
    """Result of expanding f in the basis x^i (1+x)^(n-2i).

    ``gamma`` is None unless the status is EXACT, in which case
    sum(gamma[i] * x^i * (1+x)^(n-2i)) reconstructs f exactly.
    """

    status: GammaStatus
    gamma: tuple[int, ...] | None = None

    @property
    def is_exact(self) -> bool:
        return self.status is GammaStatus.EXACT


def gamma_expand(f: IntPoly) -> GammaExpansion:
    """Expand a palindromic integer polynomial in the gamma basis.

    The expansion is obtained by peeling from the lowest coefficient: the
    residual's coefficient of x^i is gamma_i.  Palindromy guarantees the
    residual vanishes after floor(n/2)+1 steps, and integer coefficients stay
    integers throughout.
    """
    if not f.is_palindromic():
        return GammaExpansion(GammaStatus.NOT_PALINDROMIC)
    n = f.degree
    residual = f
    gamma: list[int] = []
    for i in range(n // 2 + 1):
        g = residual.coefficient(i)
        gamma.append(g)
        if g:
            residual = residual - one_plus_x_power(n - 2 * i).shift(i).scale(g)
    if residual:
        # unreachable for palindromic input; guards the peeling logic
        return GammaExpansion(GammaStatus.NOT_PALINDROMIC)
    return GammaExpansion(GammaStatus.EXACT, tuple(gamma))


def is_gamma_positive(f: IntPoly) -> bool:
    """Strict sense: an exact expansion with every gamma_i > 0."""
    e = gamma_expand(f)
    return e.is_exact and all(g > 0 for g in e.gamma)


def is_gamma_nonnegative(f: IntPoly) -> bool:
    """Weak sense: an exact expansion with every gamma_i >= 0."""
    e = gamma_expand(f)
    return e.is_exact and all(g >= 0 for g in e.gamma)


def even_index_extraction(f: IntPoly) -> IntPoly:
    """Keep even-exponent coefficients, halving the exponents."""
    return IntPoly(f.coeffs[0::2])
