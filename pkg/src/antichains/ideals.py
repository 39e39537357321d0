"""Order ideals and antichains of a poset.

Ideals and antichains are bitmasks over the poset's element indices.  The
canonical enumeration of ideals sorts by cardinality and then lexicographically
by the sorted member tuple; that order is a linear extension of containment,
which the transfer engine relies on.

The antichain enumerator is a deliberately independent algorithm (backtracking
over the comparability graph), so ideal-based and direct counts cross-validate
each other.
"""

from __future__ import annotations

from .errors import ExplosionError, NotAnIdealError
from .polynomials import IntPoly
from .posets import Poset

DEFAULT_MAX_IDEALS = 10**6


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def canonical_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), _members(mask))


def is_ideal(p: Poset, mask: int) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if p.down[v] & ~mask:
            return False
        m ^= low
    return True


def max_elements(p: Poset, mask: int) -> int:
    """The antichain of maximal elements of an ideal."""
    if not is_ideal(p, mask):
        raise NotAnIdealError(f"{_members(mask)} is not downward closed")
    return _max_of(p, mask)


def _max_of(p: Poset, mask: int) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if not (p.up[v] & mask & ~low):
            out |= low
        m ^= low
    return out


class IdealFamily:
    """All ideals of a poset in a containment-respecting enumeration."""

    __slots__ = ("poset", "ideals", "max_of", "index")

    def __init__(self, poset: Poset, ideals_in_order: list[int]):
        self.poset = poset
        self.ideals = tuple(ideals_in_order)
        self.max_of = tuple(_max_of(poset, i) for i in self.ideals)
        self.index = {mask: pos for pos, mask in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def contains(self, i: int, j: int) -> bool:
        """Whether ideal j is a subset of ideal i (by position)."""
        return not (self.ideals[j] & ~self.ideals[i])

    def reordered(self, ideals_in_order: list[int]) -> "IdealFamily":
        """The same family under a caller-chosen enumeration."""
        if sorted(ideals_in_order) != sorted(self.ideals):
            raise ValueError("reordering must list exactly the same ideals")
        return IdealFamily(self.poset, list(ideals_in_order))


def enumerate_ideals(p: Poset, max_ideals: int = DEFAULT_MAX_IDEALS) -> IdealFamily:
    """BFS over the ideal lattice from the empty ideal, adding one minimal
    element of the complement at a time, then canonical sort."""
    strict_down = tuple(p.down[v] & ~(1 << v) for v in range(p.n))
    seen = {0}
    frontier = [0]
    while frontier:
        ideal = frontier.pop()
        for v in range(p.n):
            if ideal >> v & 1:
                continue
            if strict_down[v] & ~ideal:
                continue
            bigger = ideal | (1 << v)
            if bigger not in seen:
                if len(seen) >= max_ideals:
                    raise ExplosionError("ideal enumeration", max_ideals)
                seen.add(bigger)
                frontier.append(bigger)
    return IdealFamily(p, sorted(seen, key=canonical_key))


def enumerate_antichains(p: Poset, max_antichains: int = DEFAULT_MAX_IDEALS):
    """Yield every antichain exactly once, empty set included.

    Backtracking over the comparability graph in increasing index order;
    independent of the ideal enumeration by design.
    """
    comparable = tuple(p.comparable_mask(v) for v in range(p.n))
    produced = 0

    def emit(mask: int):
        nonlocal produced
        produced += 1
        if produced > max_antichains:
            raise ExplosionError("antichain enumeration", max_antichains)
        return mask

    def walk(allowed: int, current: int):
        yield emit(current)
        m = allowed
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            yield from walk(m & ~comparable[v], current | low)

    yield from walk((1 << p.n) - 1, 0)


def antichain_poly_direct(p: Poset, max_antichains: int = DEFAULT_MAX_IDEALS) -> IntPoly:
    """Brute-force antichain generating polynomial, sum of x^|A|."""
    counts: list[int] = []
    for mask in enumerate_antichains(p, max_antichains):
        size = mask.bit_count()
        while len(counts) <= size:
            counts.append(0)
        counts[size] += 1
    return IntPoly(counts)


def ideal_poly_direct(p: Poset, max_ideals: int = DEFAULT_MAX_IDEALS) -> IntPoly:
    """Ideal generating polynomial, sum of x^|I|."""
    counts = [0] * (p.n + 1)
    for mask in enumerate_ideals(p, max_ideals).ideals:
        counts[mask.bit_count()] += 1
    return IntPoly(counts)


def ideals_poset(p: Poset, max_ideals: int = DEFAULT_MAX_IDEALS) -> Poset:
    """The distributive lattice of ideals ordered by inclusion.  Elements are
    numbered by the canonical enumeration; covers add a single element."""
    fam = enumerate_ideals(p, max_ideals)
    by_size: dict[int, list[int]] = {}
    for pos, mask in enumerate(fam.ideals):
        by_size.setdefault(mask.bit_count(), []).append(pos)
    covers = []
    for size, positions in by_size.items():
        for pos in positions:
            for above in by_size.get(size + 1, ()):
                if not (fam.ideals[pos] & ~fam.ideals[above]):
                    covers.append((pos, above))
    return Poset(len(fam), tuple(covers))


def fingerprint(p: Poset, max_ideals: int = DEFAULT_MAX_IDEALS) -> tuple:
    """Invariant tuple used for structural equality checks in tests:
    (elements, covers, rank levels or None, ideal count)."""
    levels = tuple(p.rank_levels()) if p.is_graded() else None
    return (p.n, len(p.covers), levels, len(enumerate_ideals(p, max_ideals)))
