"""Transfer-matrix computation of antichain generating polynomials.

For a finite graded poset Q, the antichain polynomial of the product of a
k-chain with Q is assembled from per-ideal partial polynomials: the matrix A
indexed by ideals of Q has (i, j) entry x^e(i,j) with
e(i, j) = #(max(ideal_i) minus ideal_j) whenever ideal_j is contained in
ideal_i, and zero otherwise.  Starting from the vector of monomials
x^(#max(ideal_i)), k-1 matrix-vector products yield the state vector whose
entry sum is the antichain polynomial of the product.

The matrix is stored sparsely as per-row (column, exponent) pairs; entries are
monomials, so a matrix-vector product is a batch of shifted additions of
integer coefficient lists.  The enumeration must be a linear extension of
containment, making the matrix lower triangular; this is validated when the
matrix is built.
"""

from __future__ import annotations

from .ideals import DEFAULT_MAX_IDEALS, IdealFamily, enumerate_ideals
from .polynomials import IntPoly
from .posets import Poset, chain, product


class TransferMatrix:
    __slots__ = ("family", "rows")

    def __init__(self, family: IdealFamily, rows: tuple[tuple[tuple[int, int], ...], ...]):
        self.family = family
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def exponent(self, i: int, j: int) -> int | None:
        """Exponent of the monomial entry, or None when the entry is zero."""
        for col, e in self.rows[i]:
            if col == j:
                return e
        return None


class StateVector:
    __slots__ = ("entries", "k")

    def __init__(self, entries: tuple[IntPoly, ...], k: int):
        self.entries = entries
        self.k = k

    def total(self) -> IntPoly:
        acc = IntPoly()
        for e in self.entries:
            acc = acc + e
        return acc


def build_transfer(family: IdealFamily) -> TransferMatrix:
    ideals = family.ideals
    max_of = family.max_of
    rows = []
    for i, upper in enumerate(ideals):
        row = []
        for j, lower in enumerate(ideals):
            if lower & ~upper:
                continue
            if j > i:
                raise ValueError(
                    "ideal enumeration is not a linear extension of containment")
            row.append((j, (max_of[i] & ~lower).bit_count()))
        rows.append(tuple(row))
    return TransferMatrix(family, tuple(rows))


def initial_vector(family: IdealFamily) -> StateVector:
    return StateVector(
        tuple(IntPoly.monomial(m.bit_count()) for m in family.max_of), k=1)


def step(matrix: TransferMatrix, vector: StateVector) -> StateVector:
    entries = vector.entries
    out = []
    for row in matrix.rows:
        acc: list[int] = []
        for j, e in row:
            coeffs = entries[j].coeffs
            need = e + len(coeffs)
            if len(acc) < need:
                acc.extend([0] * (need - len(acc)))
            for idx, val in enumerate(coeffs):
                acc[e + idx] += val
        out.append(IntPoly(acc))
    return StateVector(tuple(out), vector.k + 1)


def transfer_system(p: Poset,
                    max_ideals: int = DEFAULT_MAX_IDEALS
                    ) -> tuple[IdealFamily, TransferMatrix]:
    family = enumerate_ideals(p, max_ideals)
    return family, build_transfer(family)


def state_vector(p: Poset, k: int, max_ideals: int = DEFAULT_MAX_IDEALS) -> StateVector:
    if k < 1:
        raise ValueError("k must be a positive integer")
    family, matrix = transfer_system(p, max_ideals)
    vector = initial_vector(family)
    for _ in range(k - 1):
        vector = step(matrix, vector)
    return vector


def antichain_poly_k(p: Poset, k: int, max_ideals: int = DEFAULT_MAX_IDEALS) -> IntPoly:
    """The antichain generating polynomial of the product of a k-chain with p."""
    return state_vector(p, k, max_ideals).total()


def per_ideal_polys(p: Poset, k: int,
                    max_ideals: int = DEFAULT_MAX_IDEALS
                    ) -> list[tuple[int, IntPoly]]:
    """Final state vector paired with the ideals (bitmasks) in canonical order."""
    vector = state_vector(p, k, max_ideals)
    family = enumerate_ideals(p, max_ideals)
    return list(zip(family.ideals, vector.entries))


def iter_antichain_polys(p: Poset, k_max: int,
                         max_ideals: int = DEFAULT_MAX_IDEALS):
    """Yield (k, polynomial) for k = 1..k_max, sharing one matrix."""
    if k_max < 1:
        raise ValueError("k_max must be a positive integer")
    family, matrix = transfer_system(p, max_ideals)
    vector = initial_vector(family)
    yield 1, vector.total()
    for k in range(2, k_max + 1):
        vector = step(matrix, vector)
        yield k, vector.total()


def two_row_ideal_polys(n: int, k: int) -> dict[tuple[int, int], IntPoly]:
    """Per-ideal polynomials for the product of a k-chain with the 2-by-n
    grid, keyed by the 2-tuple coding (a, b) of slice sizes with a <= b."""
    q = product(chain(2), chain(n))
    out = {}
    for mask, poly in per_ideal_polys(q, k):
        bottom = sum(1 for j in range(n) if mask >> j & 1)
        top = sum(1 for j in range(n) if mask >> (n + j) & 1)
        out[(top, bottom)] = poly
    return out


def interleaving_relation_pair(polys: dict[tuple[int, int], IntPoly],
                               n: int, s: int) -> tuple[IntPoly, IntPoly]:
    """The s-th conjectured common-interleaver pair over the 2-by-n grid:
    rows 0..s against row s+1 of the tuple triangle, 0 <= s <= n-1."""
    if not 0 <= s <= n - 1:
        raise ValueError("need 0 <= s <= n-1")
    first = IntPoly()
    for i in range(s + 1):
        for l in range(i, n + 1):
            first = first + polys[(i, l)]
    second = IntPoly()
    for l in range(s + 1, n + 1):
        second = second + polys[(s + 1, l)]
    return first, second
