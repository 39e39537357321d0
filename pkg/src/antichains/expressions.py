"""Poset expression language.

Grammar:  C(n), H(n), K(n), J(e), e x e (product), e + e (ordinal sum),
e | e (disjoint union), parentheses; 'x' binds tighter than '+' and '|',
which share a precedence level and associate left.

C(n) is the n-chain, H(n) the shifted staircase, K(n) the double-tailed
diamond, and J(e) the lattice of ideals of e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PosetParseError
from .ideals import DEFAULT_MAX_IDEALS, ideals_poset
from .posets import (Poset, chain, disjoint_union, double_tailed_diamond,
                     ordinal_sum, product, shifted_staircase)


@dataclass(frozen=True)
class Chain:
    n: int


@dataclass(frozen=True)
class Staircase:
    n: int


@dataclass(frozen=True)
class Diamond:
    n: int


@dataclass(frozen=True)
class IdealsOf:
    inner: "PosetExpr"


@dataclass(frozen=True)
class Product:
    left: "PosetExpr"
    right: "PosetExpr"


@dataclass(frozen=True)
class OrdinalSum:
    left: "PosetExpr"
    right: "PosetExpr"


@dataclass(frozen=True)
class DisjointUnion:
    left: "PosetExpr"
    right: "PosetExpr"


PosetExpr = Chain | Staircase | Diamond | IdealsOf | Product | OrdinalSum | DisjointUnion


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise PosetParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, expected: str):
        if self.peek() != expected:
            self.error(f"expected {expected!r}")
        self.pos += 1

    def number(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a positive integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.pos = start
            self.error("size must be at least 1")
        return value

    def atom(self) -> PosetExpr:
        c = self.peek()
        if c == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        if c and c in "CHK":
            self.pos += 1
            self.take("(")
            n = self.number()
            self.take(")")
            return {"C": Chain, "H": Staircase, "K": Diamond}[c](n)
        if c == "J":
            self.pos += 1
            self.take("(")
            e = self.expr()
            self.take(")")
            return IdealsOf(e)
        self.error("expected C(n), H(n), K(n), J(e) or '('")

    def term(self) -> PosetExpr:
        e = self.atom()
        while self.peek() == "x":
            self.pos += 1
            e = Product(e, self.atom())
        return e

    def expr(self) -> PosetExpr:
        e = self.term()
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                e = OrdinalSum(e, self.term())
            elif c == "|":
                self.pos += 1
                e = DisjointUnion(e, self.term())
            else:
                return e


def parse_poset_expr(text: str) -> PosetExpr:
    parser = _Parser(text)
    e = parser.expr()
    if parser.peek():
        parser.error("unexpected trailing input")
    return e


def build(expr: PosetExpr, max_ideals: int = DEFAULT_MAX_IDEALS) -> Poset:
    if isinstance(expr, Chain):
        return chain(expr.n)
    if isinstance(expr, Staircase):
        return shifted_staircase(expr.n)
    if isinstance(expr, Diamond):
        return double_tailed_diamond(expr.n)
    if isinstance(expr, IdealsOf):
        return ideals_poset(build(expr.inner, max_ideals), max_ideals)
    if isinstance(expr, Product):
        return product(build(expr.left, max_ideals), build(expr.right, max_ideals))
    if isinstance(expr, OrdinalSum):
        return ordinal_sum(build(expr.left, max_ideals), build(expr.right, max_ideals))
    if isinstance(expr, DisjointUnion):
        return disjoint_union(build(expr.left, max_ideals), build(expr.right, max_ideals))
    raise TypeError(f"not a poset expression: {expr!r}")


def build_text(text: str, max_ideals: int = DEFAULT_MAX_IDEALS) -> Poset:
    return build(parse_poset_expr(text), max_ideals)


def format_expr(expr: PosetExpr) -> str:
    if isinstance(expr, Chain):
        return f"C({expr.n})"
    if isinstance(expr, Staircase):
        return f"H({expr.n})"
    if isinstance(expr, Diamond):
        return f"K({expr.n})"
    if isinstance(expr, IdealsOf):
        return f"J({format_expr(expr.inner)})"
    if isinstance(expr, Product):
        return f"{_wrap(expr.left)} x {_wrap(expr.right)}"
    if isinstance(expr, OrdinalSum):
        return f"{format_expr(expr.left)} + {format_expr(expr.right)}"
    if isinstance(expr, DisjointUnion):
        return f"{format_expr(expr.left)} | {format_expr(expr.right)}"
    raise TypeError(f"not a poset expression: {expr!r}")


def _wrap(expr: PosetExpr) -> str:
    text = format_expr(expr)
    if isinstance(expr, (OrdinalSum, DisjointUnion)):
        return f"({text})"
    return text


@dataclass(frozen=True)
class MinusculeMatch:
    """Recognized minuscule family: kind is one of grid, staircase, diamond,
    j2, j3; params carries the grid sides or the family parameter."""

    kind: str
    params: tuple[int, ...]


def _product_factors(expr: PosetExpr) -> list[PosetExpr] | None:
    if isinstance(expr, Product):
        left = _product_factors(expr.left)
        right = _product_factors(expr.right)
        if left is None or right is None:
            return None
        return left + right
    return [expr]


def recognize_minuscule(expr: PosetExpr) -> MinusculeMatch | None:
    """Best-effort structural recognition of the minuscule families.  Product
    factors equal to C(1) are dropped; association of products is ignored.
    A miss only means closed-form shortcuts are skipped."""
    if isinstance(expr, Staircase):
        return MinusculeMatch("staircase", (expr.n,))
    if isinstance(expr, Diamond):
        return MinusculeMatch("diamond", (expr.n,))
    if isinstance(expr, IdealsOf):
        depth = 0
        inner: PosetExpr = expr
        while isinstance(inner, IdealsOf):
            depth += 1
            inner = inner.inner
        base = recognize_minuscule(inner)
        if (base and base.kind == "grid" and sorted(base.params) == [2, 3]
                and depth in (2, 3)):
            return MinusculeMatch(f"j{depth}", ())
        return None
    factors = _product_factors(expr)
    if factors is None or not all(isinstance(f, Chain) for f in factors):
        return None
    sides = sorted(f.n for f in factors if f.n > 1)
    if len(sides) == 0:
        return MinusculeMatch("grid", (1, 1))
    if len(sides) == 1:
        return MinusculeMatch("grid", (1, sides[0]))
    if len(sides) == 2:
        return MinusculeMatch("grid", tuple(sides))
    return None
