"""Finite posets given by their Hasse diagrams.

Elements are dense integer indices 0..n-1.  The order relation is stored as
per-element downset bitmasks (Python ints), precomputed at construction, so
leq tests, ideal checks and antichain backtracking are single word-wise
operations.  Posets are immutable; every operation is pure.

Constructor numbering conventions (tests rely on these):
  chain(n)               0 < 1 < ... < n-1
  product(p, q)          (a, b) -> a*|q| + b
  ordinal_sum(p, q)      p keeps its indices, q is shifted by |p|
  disjoint_union(p, q)   same shift, no relations added
  shifted_staircase(n)   pairs (i, j), 1 <= i <= j <= n, in lex order
  double_tailed_diamond(n)  bottom chain 0..n-1, middle pair n, n+1, top chain
"""

from __future__ import annotations

from dataclasses import dataclass
from .errors import NotGradedError, NotRankUnimodalError


class Poset:
    __slots__ = ("n", "covers", "children", "parents", "down", "up", "_grading")

    def __init__(self, n: int, covers: tuple[tuple[int, int], ...]):
        if n < 1:
            raise ValueError("a poset needs at least one element")
        covers = tuple(sorted(set(covers)))
        children: list[list[int]] = [[] for _ in range(n)]  # covers above
        parents: list[list[int]] = [[] for _ in range(n)]   # covers below
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n) or lo == hi:
                raise ValueError(f"bad cover pair ({lo}, {hi})")
            children[lo].append(hi)
            parents[hi].append(lo)

        order = self._topological(n, children, parents)
        down = [0] * n
        for v in order:
            mask = 1 << v
            for u in parents[v]:
                mask |= down[u]
            down[v] = mask
        up = [0] * n
        for v in reversed(order):
            mask = 1 << v
            for w in children[v]:
                mask |= up[w]
            up[v] = mask
        for lo, hi in covers:
            if (down[hi] & up[lo]).bit_count() > 2:
                raise ValueError(
                    f"cover ({lo}, {hi}) is implied by transitivity; "
                    "input must be a Hasse diagram")

        self.n = n
        self.covers = covers
        self.children = tuple(tuple(c) for c in children)
        self.parents = tuple(tuple(p) for p in parents)
        self.down = tuple(down)
        self.up = tuple(up)
        self._grading: tuple[bool, tuple[int, ...] | None] | None = None

    @staticmethod
    def _topological(n, children, parents) -> list[int]:
        indeg = [len(p) for p in parents]
        queue = [v for v in range(n) if indeg[v] == 0]
        order: list[int] = []
        while queue:
            v = queue.pop()
            order.append(v)
            for w in children[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if len(order) != n:
            raise ValueError("cover relation contains a cycle")
        return order

    # -- the order relation ---------------------------------------------------

    def leq(self, u: int, v: int) -> bool:
        return bool(self.down[v] >> u & 1)

    def less(self, u: int, v: int) -> bool:
        return u != v and self.leq(u, v)

    def comparable_mask(self, v: int) -> int:
        """Everything comparable to v, excluding v itself."""
        return (self.down[v] | self.up[v]) & ~(1 << v)

    @property
    def minimal_mask(self) -> int:
        return sum(1 << v for v in range(self.n) if not self.parents[v])

    @property
    def maximal_mask(self) -> int:
        return sum(1 << v for v in range(self.n) if not self.children[v])

    def is_connected(self) -> bool:
        seen = 1
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in (*self.children[v], *self.parents[v]):
                if not seen >> w & 1:
                    seen |= 1 << w
                    frontier.append(w)
        return seen == (1 << self.n) - 1

    # -- rank structure ---------------------------------------------------------

    def _grade(self) -> tuple[bool, tuple[int, ...] | None]:
        if self._grading is None:
            rank = [0] * self.n
            graded = True
            for v in self._topological(self.n, self.children, self.parents):
                if not self.parents[v]:
                    rank[v] = 1
                    continue
                candidates = {rank[u] + 1 for u in self.parents[v]}
                if len(candidates) != 1:
                    graded = False
                    break
                rank[v] = candidates.pop()
            if graded:
                d = max(rank)
                graded = all(rank[v] == d
                             for v in range(self.n) if not self.children[v])
            self._grading = (graded, tuple(rank) if graded else None)
        return self._grading

    def is_graded(self) -> bool:
        return self._grade()[0]

    def rank(self, v: int) -> int:
        graded, ranks = self._grade()
        if not graded:
            raise NotGradedError("poset is not graded")
        return ranks[v]

    def ranks(self) -> tuple[int, ...]:
        graded, ranks = self._grade()
        if not graded:
            raise NotGradedError("poset is not graded")
        return ranks

    def rank_levels(self) -> list[int]:
        """Sizes |Q_1|, ..., |Q_d| of the rank levels."""
        ranks = self.ranks()
        d = max(ranks)
        levels = [0] * d
        for r in ranks:
            levels[r - 1] += 1
        return levels

    def height(self) -> int:
        """Length (number of elements) of a longest chain."""
        best = [1] * self.n
        for v in self._topological(self.n, self.children, self.parents):
            for u in self.parents[v]:
                best[v] = max(best[v], best[u] + 1)
        return max(best)

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers)})"


# -- constructors ----------------------------------------------------------------


def chain(n: int) -> Poset:
    if n < 1:
        raise ValueError("chain size must be positive")
    return Poset(n, tuple((i, i + 1) for i in range(n - 1)))


def product(p: Poset, q: Poset) -> Poset:
    """Componentwise order on pairs; (a, b) is numbered a*|q| + b."""
    m = q.n
    covers = []
    for a in range(p.n):
        for b, b2 in q.covers:
            covers.append((a * m + b, a * m + b2))
    for a, a2 in p.covers:
        for b in range(q.n):
            covers.append((a * m + b, a2 * m + b))
    return Poset(p.n * q.n, tuple(covers))


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """Every element of p below every element of q."""
    off = p.n
    covers = list(p.covers)
    covers += [(a + off, b + off) for a, b in q.covers]
    tops = [v for v in range(p.n) if not p.children[v]]
    bottoms = [v for v in range(q.n) if not q.parents[v]]
    covers += [(t, b + off) for t in tops for b in bottoms]
    return Poset(p.n + q.n, tuple(covers))


def disjoint_union(p: Poset, q: Poset) -> Poset:
    off = p.n
    covers = list(p.covers) + [(a + off, b + off) for a, b in q.covers]
    return Poset(p.n + q.n, tuple(covers))


def shifted_staircase(n: int) -> Poset:
    """The quotient of the n-by-n grid by coordinate swap: pairs (i, j) with
    1 <= i <= j <= n under the componentwise order."""
    if n < 1:
        raise ValueError("size must be positive")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    index = {pair: k for k, pair in enumerate(pairs)}
    covers = []
    for (i, j), k in index.items():
        if j + 1 <= n:
            covers.append((k, index[(i, j + 1)]))
        if i + 1 <= j:
            covers.append((k, index[(i + 1, j)]))
    return Poset(len(pairs), tuple(covers))


def double_tailed_diamond(n: int) -> Poset:
    """Chain of n, then an incomparable pair, then a chain of n on top."""
    if n < 1:
        raise ValueError("size must be positive")
    two = disjoint_union(chain(1), chain(1))
    return ordinal_sum(ordinal_sum(chain(n), two), chain(n))


# -- rank-window analysis -----------------------------------------------------------


def _levels_unimodal(levels: list[int]) -> bool:
    i = 0
    while i + 1 < len(levels) and levels[i] <= levels[i + 1]:
        i += 1
    while i + 1 < len(levels) and levels[i] >= levels[i + 1]:
        i += 1
    return i == len(levels) - 1


def unique_largest_rank_level(p: Poset, k: int) -> bool:
    """Whether the product of a k-chain with p has exactly one rank level of
    maximal size.  The level of rank i in the product collects k consecutive
    levels of p, so this reduces to uniqueness of the maximal k-window sum.
    Requires p graded and rank unimodal."""
    if k < 1:
        raise ValueError("k must be positive")
    levels = p.rank_levels()
    if not _levels_unimodal(levels):
        raise NotRankUnimodalError("rank level sizes are not unimodal")
    d = len(levels)
    sizes = [sum(levels[max(0, i - k):i] or [0]) for i in range(1, d + k)]
    top = max(sizes)
    return sizes.count(top) == 1


# -- external text formats -----------------------------------------------------------


def poset_from_hasse_text(text: str) -> Poset:
    """Parse the cover-per-line format: 'u < v' with integer labels; blank
    lines and '#' comments are ignored.  Labels are renumbered to 0..n-1 in
    sorted order."""
    raw: list[tuple[int, int]] = []
    labels: set[int] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split("<")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u < v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer label in {line!r}") from exc
        raw.append((u, v))
        labels.update((u, v))
    if not labels:
        raise ValueError("no cover pairs found")
    index = {lab: i for i, lab in enumerate(sorted(labels))}
    return Poset(len(labels), tuple((index[u], index[v]) for u, v in raw))


def to_dot(p: Poset, name: str = "hasse") -> str:
    """DOT rendering of the Hasse diagram, bottom-up, one rank per row when
    the poset is graded."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for v in range(p.n):
        lines.append(f"  {v};")
    if p.is_graded():
        levels: dict[int, list[int]] = {}
        for v, r in enumerate(p.ranks()):
            levels.setdefault(r, []).append(v)
        for r in sorted(levels):
            row = "; ".join(str(v) for v in levels[r])
            lines.append(f"  {{ rank=same; {row}; }}")
    for lo, hi in p.covers:
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LevelData:
    """Rank level sizes with the symmetry/unimodality verdicts."""

    levels: tuple[int, ...]

    @property
    def symmetric(self) -> bool:
        return self.levels == self.levels[::-1]

    @property
    def unimodal(self) -> bool:
        return _levels_unimodal(list(self.levels))
