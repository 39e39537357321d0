"""Default poset corpus for oracle cross-checks and property scans.

Three layers: every connected graded poset on up to five elements (generated
by brute force over Hasse cover sets and deduplicated up to isomorphism), a
curated list of expression-built posets (chains, grids, staircases, diamonds,
ideal lattices, ordinal sums), and a few cover-built shapes the expression
grammar cannot reach (zigzag fences, crowns, stars).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .expressions import build_text
from .posets import Poset


def _canonical_form(n: int, covers: tuple[tuple[int, int], ...]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(sorted((perm[a], perm[b]) for a, b in covers))
        if best is None or relabeled < best:
            best = relabeled
    return (n, best)


@lru_cache(maxsize=None)
def small_connected_graded_posets(max_n: int = 5) -> tuple[Poset, ...]:
    """All connected graded posets on 1..max_n elements, one per isomorphism
    class.  Every poset admits a topological labeling, so cover sets drawn
    from pairs (i, j) with i < j reach every class."""
    found: dict[tuple, Poset] = {}
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            covers = tuple(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
            try:
                p = Poset(n, covers)
            except ValueError:  # not a Hasse diagram
                continue
            if not (p.is_connected() and p.is_graded()):
                continue
            key = _canonical_form(n, p.covers)
            if key not in found:
                found[key] = p
    return tuple(found[key] for key in sorted(found))


_CURATED_EXPRESSIONS = (
    "C(1)", "C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)",
    "C(9)", "C(10)", "C(11)", "C(12)",
    "C(2) x C(2)", "C(2) x C(3)", "C(2) x C(4)", "C(2) x C(5)",
    "C(3) x C(3)", "C(3) x C(4)",
    "C(2) x C(2) x C(2)", "C(2) x C(2) x C(3)",
    "H(2)", "H(3)", "H(4)", "H(5)",
    "K(1)", "K(2)", "K(3)", "K(4)",
    "J(C(2) x C(2))", "J(C(2) x C(3))", "J(K(2))", "J(J(C(2) x C(3)))",
    "(C(1) | C(1)) + C(2)", "C(2) + (C(1) | C(1))",
    "(C(1) | C(1) | C(1)) + C(1)", "C(1) + (C(1) | C(1) | C(1))",
    "C(1) + (C(1) | C(1)) + C(1) + (C(1) | C(1)) + C(1)",
)


def _zigzag(n: int) -> Poset:
    """Fence: 0 < 1 > 2 < 3 > ... with minima at even indices."""
    covers = []
    for i in range(n - 1):
        covers.append((i, i + 1) if i % 2 == 0 else (i + 1, i))
    return Poset(n, tuple(covers))


def _crown(n: int) -> Poset:
    """n minima below n maxima, i below n+j exactly when i != j (n >= 3)."""
    covers = tuple((i, n + j) for i in range(n) for j in range(n) if i != j)
    return Poset(2 * n, covers)


def _star_up(n: int) -> Poset:
    return Poset(n + 1, tuple((i, n) for i in range(n)))


def _star_down(n: int) -> Poset:
    return Poset(n + 1, tuple((0, i) for i in range(1, n + 1)))


def _mixed_antichain_poset() -> Poset:
    """Levels of size 3 and 3, but two minima sit below a single top, leaving
    a mixed antichain of size 4: the smallest kind of non-Sperner example."""
    return Poset(6, ((0, 3), (0, 4), (0, 5), (1, 3), (2, 3)))


def _cover_built() -> list[tuple[str, Poset]]:
    entries = []
    for n in range(4, 11):
        entries.append((f"zigzag({n})", _zigzag(n)))
    for n in (3, 4):
        entries.append((f"crown({n})", _crown(n)))
    for n in (3, 4, 5):
        entries.append((f"star-up({n})", _star_up(n)))
        entries.append((f"star-down({n})", _star_down(n)))
    entries.append(("mixed-antichain(6)", _mixed_antichain_poset()))
    return entries


@lru_cache(maxsize=None)
def default_corpus() -> tuple[tuple[str, Poset], ...]:
    """(name, poset) pairs; connectedness and gradedness vary by entry, so
    consumers filter for what they need."""
    entries: list[tuple[str, Poset]] = []
    for i, p in enumerate(small_connected_graded_posets()):
        entries.append((f"small-{p.n}-{i:03d}", p))
    for expr in _CURATED_EXPRESSIONS:
        entries.append((expr, build_text(expr)))
    entries.extend(_cover_built())
    return tuple(entries)


def connected_graded_corpus() -> list[tuple[str, Poset]]:
    return [(name, p) for name, p in default_corpus()
            if p.is_connected() and p.is_graded()]


def parse_corpus_file(text: str, base_dir: str | None = None) -> list[tuple[str, Poset]]:
    """One poset per line: either an expression, or '@path' naming a Hasse
    cover file (resolved against base_dir).  Blank lines and '#' comments are
    ignored."""
    from pathlib import Path

    from .posets import poset_from_hasse_text

    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("@"):
            path = Path(body[1:].strip())
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            out.append((body, poset_from_hasse_text(path.read_text())))
        else:
            out.append((body, build_text(body)))
    return out
