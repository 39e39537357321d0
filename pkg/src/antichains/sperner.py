"""Sperner-type properties via Dilworth and Greene-Kleitman machinery.

The width comes from a minimum chain cover (maximum bipartite matching on the
strict order).  Unions of k chains are maximized by a unit-capacity min-cost
flow on the node-split comparability DAG; successive augmentations produce the
chain profile c_1 <= c_2 <= ..., whose increments form a partition.  The
antichain side is its conjugate (Greene-Kleitman duality).  A Mirsky-style
subset scan provides the independent brute-force oracle at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotGradedError
from .ideals import DEFAULT_MAX_IDEALS, antichain_poly_direct
from .polynomials import IntPoly
from .posets import Poset


def max_antichain_size(p: Poset) -> int:
    """Width of p: n minus a maximum matching on the strict order (Dilworth)."""
    n = p.n
    succ = [[v for v in range(n) if u != v and p.leq(u, v)] for u in range(n)]
    match_of: list[int] = [-1] * n  # right vertex -> left vertex

    def augment(u: int, visited: list[bool]) -> bool:
        for v in succ[u]:
            if not visited[v]:
                visited[v] = True
                if match_of[v] == -1 or augment(match_of[v], visited):
                    match_of[v] = u
                    return True
        return False

    matching = 0
    for u in range(n):
        if augment(u, [False] * n):
            matching += 1
    return n - matching


@dataclass(frozen=True)
class ChainProfile:
    """c_k = maximum number of elements covered by k chains, until saturation."""

    n_elements: int
    cumulative: tuple[int, ...]

    @property
    def partition(self) -> tuple[int, ...]:
        prev = 0
        parts = []
        for c in self.cumulative:
            parts.append(c - prev)
            prev = c
        return tuple(parts)

    @property
    def conjugate(self) -> tuple[int, ...]:
        parts = self.partition
        if not parts:
            return ()
        return tuple(sum(1 for q in parts if q >= i) for i in range(1, parts[0] + 1))

    def chains_value(self, k: int) -> int:
        if k <= 0:
            raise ValueError("k must be positive")
        if k <= len(self.cumulative):
            return self.cumulative[k - 1]
        return self.n_elements

    def antichains_value(self, k: int) -> int:
        if k <= 0:
            raise ValueError("k must be positive")
        return sum(self.conjugate[:k])


def chain_profile(p: Poset) -> ChainProfile:
    """Successive shortest augmenting paths on the node-split DAG; the k-th
    augmentation extends the cover to c_k elements."""
    n = p.n
    source, sink = 2 * n, 2 * n + 1
    node_count = 2 * n + 2
    to: list[int] = []
    cap: list[int] = []
    cost: list[int] = []
    head: list[list[int]] = [[] for _ in range(node_count)]

    def add(u: int, v: int, c: int, w: int):
        head[u].append(len(to))
        to.append(v)
        cap.append(c)
        cost.append(w)
        head[v].append(len(to))
        to.append(u)
        cap.append(0)
        cost.append(-w)

    for v in range(n):
        add(source, 2 * v, 1, 0)
        add(2 * v, 2 * v + 1, 1, -1)  # covering v pays -1
        add(2 * v + 1, sink, 1, 0)
    for u in range(n):
        for v in range(n):
            if u != v and p.leq(u, v):
                add(2 * u + 1, 2 * v, 1, 0)

    covered = 0
    cumulative: list[int] = []
    infinity = float("inf")
    while True:
        dist = [infinity] * node_count
        via = [-1] * node_count
        dist[source] = 0
        changed = True
        while changed:  # Bellman-Ford; deterministic by edge insertion order
            changed = False
            for u in range(node_count):
                du = dist[u]
                if du is infinity:
                    continue
                for e in head[u]:
                    if cap[e] and du + cost[e] < dist[to[e]]:
                        dist[to[e]] = du + cost[e]
                        via[to[e]] = e
                        changed = True
        if dist[sink] >= 0:
            break
        v = sink
        while v != source:
            e = via[v]
            cap[e] -= 1
            cap[e ^ 1] += 1
            v = to[e ^ 1]
        covered += -int(dist[sink])
        cumulative.append(covered)
        if covered == n:
            break
    return ChainProfile(n, tuple(cumulative))


def max_k_chains(p: Poset, k: int) -> int:
    return chain_profile(p).chains_value(k)


def max_k_antichains(p: Poset, k: int) -> int:
    return chain_profile(p).antichains_value(k)


def max_k_antichains_brute(p: Poset, k: int) -> int:
    """Independent oracle: the largest subset whose induced height is at most
    k (a subset splits into k antichains exactly when no chain in it is longer
    than k).  Exponential; intended for posets of about a dozen elements."""
    if k <= 0:
        raise ValueError("k must be positive")
    n = p.n
    order = sorted(range(n), key=lambda v: p.down[v].bit_count())
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        height = [0] * n
        ok = True
        for v in order:
            if not (mask >> v & 1):
                continue
            h = 1 + max((height[u] for u in range(n)
                         if (mask >> u & 1) and u != v and p.leq(u, v)),
                        default=0)
            height[v] = h
            if h > k:
                ok = False
                break
        if ok:
            best = size
    return best


# -- predicates ----------------------------------------------------------------


def is_rank_symmetric(p: Poset) -> bool:
    levels = p.rank_levels()
    return levels == levels[::-1]


def is_rank_unimodal(p: Poset) -> bool:
    levels = p.rank_levels()
    i = 0
    while i + 1 < len(levels) and levels[i] <= levels[i + 1]:
        i += 1
    while i + 1 < len(levels) and levels[i] >= levels[i + 1]:
        i += 1
    return i == len(levels) - 1


def is_sperner(p: Poset) -> bool:
    if not p.is_graded():
        raise NotGradedError("Sperner property needs a graded poset")
    return max_antichain_size(p) <= max(p.rank_levels())


def is_strongly_sperner(p: Poset) -> bool:
    if not p.is_graded():
        raise NotGradedError("strong Sperner property needs a graded poset")
    levels = sorted(p.rank_levels(), reverse=True)
    profile = chain_profile(p)
    for k in range(1, len(levels) + 1):
        if profile.antichains_value(k) > sum(levels[:k]):
            return False
    return True


def is_peck(p: Poset) -> bool:
    return is_rank_symmetric(p) and is_rank_unimodal(p) and is_strongly_sperner(p)


@dataclass(frozen=True)
class LogConcavityRow:
    """One poset's verdicts in a log-concavity scan over Peck posets."""

    name: str
    connected: bool
    peck: bool
    poly: IntPoly | None
    log_concave: bool | None

    @property
    def refuted(self) -> bool:
        return self.log_concave is False


def peck_log_concavity_scan(corpus: list[tuple[str, Poset]],
                            max_antichains: int = DEFAULT_MAX_IDEALS
                            ) -> list[LogConcavityRow]:
    """For each graded poset: Peck verdict, and for connected Peck posets the
    antichain polynomial with its log-concavity verdict.  A False verdict is
    a hard refutation of the expectation that those polynomials are
    log-concave."""
    rows = []
    for name, p in corpus:
        connected = p.is_connected()
        peck = p.is_graded() and is_peck(p)
        poly = None
        log_concave = None
        if peck and connected:
            poly = antichain_poly_direct(p, max_antichains)
            log_concave = poly.is_log_concave()
        rows.append(LogConcavityRow(name, connected, peck, poly, log_concave))
    return rows
