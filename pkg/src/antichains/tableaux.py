"""Two-row weighted tableau model.

A filling has a nondecreasing first row a_1 <= ... <= a_n and second row
b_1 <= ... <= b_m (m <= n) with values in 0..k and a_i <= b_i columnwise.
Its weight is x raised to the number of distinct positive values among the
a_i plus the number of distinct values among those b_j exceeding their a_j.
The generating polynomial over all fillings is computed by a column DP; a
level recursion rebuilds the diagonal polynomials independently.
"""

from __future__ import annotations

from .polynomials import IntPoly


def f_direct(n: int, m: int, k: int) -> IntPoly:
    """Weighted sum over fillings, by a DP over columns.

    The state after a column is its (a, b) pair.  A new distinct a-value
    appears exactly at a strict a-increase; a run of equal b-values counts
    once, at its first column, and only if it exceeds the a-value there.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    if k < 0:
        raise ValueError("k must be nonnegative")
    paired: dict[tuple[int, int], list[int]] = {(0, 0): [1]}
    for _ in range(m):
        nxt: dict[tuple[int, int], list[int]] = {}
        for (a, b), coeffs in paired.items():
            for a2 in range(a, k + 1):
                for b2 in range(max(b, a2), k + 1):
                    w = (1 if a2 > a else 0) + (1 if b2 > b and b2 > a2 else 0)
                    acc = nxt.setdefault((a2, b2), [])
                    need = w + len(coeffs)
                    if len(acc) < need:
                        acc.extend([0] * (need - len(acc)))
                    for i, c in enumerate(coeffs):
                        acc[w + i] += c
        paired = nxt
    single: dict[int, list[int]] = {}
    for (a, _b), coeffs in paired.items():
        acc = single.setdefault(a, [])
        if len(acc) < len(coeffs):
            acc.extend([0] * (len(coeffs) - len(acc)))
        for i, c in enumerate(coeffs):
            acc[i] += c
    for _ in range(n - m):
        nxt_single: dict[int, list[int]] = {}
        for a, coeffs in single.items():
            for a2 in range(a, k + 1):
                w = 1 if a2 > a else 0
                acc = nxt_single.setdefault(a2, [])
                need = w + len(coeffs)
                if len(acc) < need:
                    acc.extend([0] * (need - len(acc)))
                for i, c in enumerate(coeffs):
                    acc[w + i] += c
        single = nxt_single
    total: list[int] = []
    for coeffs in single.values():
        if len(total) < len(coeffs):
            total.extend([0] * (len(coeffs) - len(total)))
        for i, c in enumerate(coeffs):
            total[i] += c
    return IntPoly(total)


def f_recursive(n: int, k: int) -> IntPoly:
    """The diagonal polynomial (rows of equal length n, values up to k),
    built by the level recursion

        f(n, n, k+1) = f(n, n, k) + x * sum_s f(n, n-s, k)
                       + sum_l ( x * f(n-l, n-l, k) + x^2 * sum_s f(n-l, n-l-s, k) )

    with all off-diagonal level-k inputs taken from the column DP.  Agreement
    with f_direct on diagonals is exactly what the recursion claims.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    diag: dict[int, IntPoly] = {j: IntPoly.ONE for j in range(n + 1)}  # level 0
    x = IntPoly.X
    xx = IntPoly.monomial(2)
    for level in range(k):
        nxt: dict[int, IntPoly] = {}
        for j in range(n + 1):
            acc = diag[j]
            for s in range(1, j + 1):
                acc = acc + x * f_direct(j, j - s, level)
            for l in range(1, j + 1):
                acc = acc + x * diag[j - l]
                for s in range(1, j - l + 1):
                    acc = acc + xx * f_direct(j - l, j - l - s, level)
            nxt[j] = acc
        diag = nxt
    return diag[n]


def two_row_family(n: int):
    """The antichain polynomial of the product of a 2-chain, an n-chain and
    an (n+1)-chain, with its gamma expansion (degree 2n, monic)."""
    from .polynomials import gamma_expand
    from .posets import chain, product
    from .transfer import antichain_poly_k

    if n < 1:
        raise ValueError("n must be positive")
    poly = antichain_poly_k(product(chain(2), chain(n)), n + 1)
    return poly, gamma_expand(poly)


def count_fillings(n: int, m: int, k: int) -> int:
    """Unweighted count of admissible fillings by direct recursion; the
    independent check for f_direct evaluated at 1."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")

    def rows(length: int, low: int) -> list[tuple[int, ...]]:
        if length == 0:
            return [()]
        return [(v, *rest) for v in range(low, k + 1) for rest in rows(length - 1, v)]

    total = 0
    for a in rows(n, 0):
        for b in rows(m, 0):
            if all(a[i] <= b[i] for i in range(m)):
                total += 1
    return total
