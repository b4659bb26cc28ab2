"""Exact determinants of square matrices of :class:`Poly` entries."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .exact_arith import Poly

Matrix = Sequence[Sequence[Poly]]


def bareiss_determinant(rows: Matrix, zero: Poly | None = None) -> Poly:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    n = len(rows)
    if n == 0:
        if zero is None:
            raise ValueError("need a ring element to determine the ring of an empty matrix")
        return zero.one()
    a = [list(r) for r in rows]
    sign = 1
    prev = a[0][0].one()
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return a[0][0].zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = piv * row_i[j] - aik * row_k[j]
                row_i[j] = num.exact_div(prev) if not prev.is_one() else num
            row_i[k] = piv.zero()
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def cofactor_determinant(rows: Matrix, zero: Poly | None = None) -> Poly:
    """Laplace expansion along the first row, memoised on column subsets."""
    n = len(rows)
    if n == 0:
        if zero is None:
            raise ValueError("need a ring element to determine the ring of an empty matrix")
        return zero.one()
    memo: dict[tuple[int, ...], Poly] = {}

    def minor(depth: int, cols: tuple[int, ...]) -> Poly:
        if depth == n:
            return rows[0][0].one()
        if cols in memo:
            return memo[cols]
        total = rows[0][0].zero()
        for idx, c in enumerate(cols):
            a = rows[depth][c]
            if not a:
                continue
            term = a * minor(depth + 1, cols[:idx] + cols[idx + 1 :])
            total = total - term if idx % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def all_minors(rows: Matrix, k: int, memo: dict | None = None) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Poly]:
    """Every ``k x k`` minor keyed by ``(row indices, column indices)`` (0-based).

    Pass the same ``memo`` across calls with increasing ``k`` to reuse the
    smaller minors of the expansion.
    """
    n = len(rows)
    if memo is None:
        memo = {}
    if n == 0:
        return {}
    one = rows[0][0].one()

    def minor(rs: tuple[int, ...], cs: tuple[int, ...]) -> Poly:
        if not rs:
            return one
        key = (rs, cs)
        if key in memo:
            return memo[key]
        r0, rest = rs[0], rs[1:]
        total = one.zero()
        for idx, c in enumerate(cs):
            a = rows[r0][c]
            if not a:
                continue
            term = a * minor(rest, cs[:idx] + cs[idx + 1 :])
            total = total - term if idx % 2 else total + term
        memo[key] = total
        return total

    # expand along the first row of each subset: the memo fills bottom-up
    return {
        (rs, cs): minor(rs, cs)
        for rs in combinations(range(n), k)
        for cs in combinations(range(n), k)
    }


def submatrix(rows: Matrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> list[list[Poly]]:
    return [[rows[i][j] for j in col_idx] for i in row_idx]
