"""Smith normal form over ``Q[t]`` and ``Q(q)[y]``, the determinantal-divisor
oracle, stabilization, and checking the diagonal-hook prediction."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .exact_arith import Poly, poly_bezout, poly_gcd
from .giambelli_matrices import build_matrix
from .linalg import all_minors
from .outside_decomp import OutsideDecomposition
from .shapes import Partition, diagonal_hook, rank
from .specialize import Q_HAT, Specialization, get_specialization

DEFAULT_MINOR_BOUND = 6


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple[Poly, ...]
    rank: int
    left: tuple[tuple[Poly, ...], ...] | None = None
    right: tuple[tuple[Poly, ...], ...] | None = None


def _identity(n: int, zero: Poly) -> list[list[Poly]]:
    one = zero.one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[Poly]], *, witnesses: bool = False, zero: Poly | None = None) -> SnfResult:
    """Diagonalize by unimodular row and column operations.

    Pivot on an entry of least degree, clear its row and column (plain
    subtraction when the pivot divides, a Bezout 2x2 move otherwise), force
    divisibility of the remaining block, recurse.  The diagonal is returned
    monic.  With ``witnesses=True`` the result carries ``left`` and ``right``
    with ``left * matrix * right == diag``.
    """
    a = [list(r) for r in matrix]
    n = len(a)
    m = len(a[0]) if n else 0
    if zero is None:
        if not n or not m:
            return SnfResult((), 0, () if witnesses else None, () if witnesses else None)
        zero = a[0][0].zero()
    L = _identity(n, zero) if witnesses else None
    R = _identity(m, zero) if witnesses else None

    def row_combine(k, i, u, v, w, x):
        # (row_k, row_i) <- (u row_k + v row_i, w row_k + x row_i)
        for mat in (a, L) if witnesses else (a,):
            rk, ri = mat[k], mat[i]
            mat[k] = [u * p + v * q for p, q in zip(rk, ri)]
            mat[i] = [w * p + x * q for p, q in zip(rk, ri)]

    def row_sub(i, k, quo):
        for mat in (a, L) if witnesses else (a,):
            rk, ri = mat[k], mat[i]
            mat[i] = [q - quo * p if p else q for p, q in zip(rk, ri)]

    def col_combine(k, j, u, v, w, x):
        for mat in (a, R) if witnesses else (a,):
            for row in mat:
                p, q = row[k], row[j]
                row[k] = u * p + v * q
                row[j] = w * p + x * q

    def col_sub(j, k, quo):
        for mat in (a, R) if witnesses else (a,):
            for row in mat:
                if row[k]:
                    row[j] = row[j] - quo * row[k]

    for k in range(min(n, m)):
        best = None
        for i in range(k, n):
            for j in range(k, m):
                e = a[i][j]
                if e and (best is None or e.degree < best[0]):
                    best = (e.degree, i, j)
                    if e.degree == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            if witnesses:
                L[k], L[pi] = L[pi], L[k]
        if pj != k:
            for mat in (a, R) if witnesses else (a,):
                for row in mat:
                    row[k], row[pj] = row[pj], row[k]

        while True:
            for i in range(k + 1, n):
                b = a[i][k]
                if not b:
                    continue
                piv = a[k][k]
                quo, rem = divmod(b, piv)
                if not rem:
                    row_sub(i, k, quo)
                else:
                    g, u, v = poly_bezout(piv, b)
                    row_combine(k, i, u, v, -b.exact_div(g), piv.exact_div(g))
            for j in range(k + 1, m):
                b = a[k][j]
                if not b:
                    continue
                piv = a[k][k]
                quo, rem = divmod(b, piv)
                if not rem:
                    col_sub(j, k, quo)
                else:
                    g, u, v = poly_bezout(piv, b)
                    col_combine(k, j, u, v, -b.exact_div(g), piv.exact_div(g))
            if any(a[i][k] for i in range(k + 1, n)):
                continue
            piv = a[k][k]
            if piv.degree == 0:
                break
            offender = next(
                (i for i in range(k + 1, n) for j in range(k + 1, m) if a[i][j] and not piv.divides(a[i][j])),
                None,
            )
            if offender is None:
                break
            row_sub(k, offender, -zero.one())

    diag = []
    for k in range(min(n, m)):
        d = a[k][k]
        if d and not d.leading == d.field.one:
            inv = d.field.one / d.leading
            a[k] = [e.scale(inv) for e in a[k]]
            if witnesses:
                L[k] = [e.scale(inv) for e in L[k]]
        diag.append(a[k][k])
    r = sum(1 for d in diag if d)
    if witnesses:
        return SnfResult(tuple(diag), r, tuple(map(tuple, L)), tuple(map(tuple, R)))
    return SnfResult(tuple(diag), r)


def minor_gcd_profile(matrix: Sequence[Sequence[Poly]], bound: int = DEFAULT_MINOR_BOUND) -> list[Poly]:
    """Monic gcd of all ``k x k`` minors for ``k = 1..n`` (zero if all vanish)."""
    n = len(matrix)
    if n > bound:
        raise ValueError(
            f"matrix of order {n} exceeds the minor enumeration bound {bound}; use smith_normal_form"
        )
    memo: dict = {}
    profile = []
    for k in range(1, n + 1):
        g = None
        for minor in all_minors(matrix, k, memo).values():
            if not minor:
                continue
            g = minor.monic() if g is None else poly_gcd(g, minor)
            if g.is_one():
                break
        profile.append(g if g is not None else matrix[0][0].zero())
    return profile


def stabilize(matrix: Sequence[Sequence[Poly]], times: int, zero: Poly | None = None) -> list[list[Poly]]:
    """Block-diagonal ``(I_times, matrix)``."""
    if times < 0:
        raise ValueError("stabilization count must be nonnegative")
    n = len(matrix)
    if zero is None:
        if not n:
            raise ValueError("need a ring element to stabilize an empty matrix")
        zero = matrix[0][0].zero()
    size = n + times
    out = _identity(times, zero) if times else []
    out = [row + [zero] * n for row in out]
    out += [[zero] * times + list(row) for row in matrix]
    assert all(len(row) == size for row in out)
    return out


def predicted_diagonal(p: Partition, m: int, s: Specialization | str, factor: Specialization | str | None = None) -> list[Poly]:
    """Monic product over the diagonal hook ``D_{m-k+1}`` for ``k = 1..m``.

    ``factor`` picks whose linear factor to use (default ``s``); passing
    ``q-hat`` with ``s = q-diamond`` gives the ``(1 - q^c y)`` candidate in
    the same ring.
    """
    s = get_specialization(s)
    factor = s if factor is None else get_specialization(factor)
    if factor.field is not s.field:
        raise ValueError("factor specialization must share the target ring")
    if m < rank(p):
        raise ValueError(f"order {m} is below rank({p}) = {rank(p)}")
    out = []
    for k in range(1, m + 1):
        d = s.one()
        for cell in diagonal_hook(p, m - k + 1):
            d = d * factor.linear_factor(cell.content)
        out.append(d.monic())
    return out


@dataclass
class TheoremReport:
    partition: Partition
    decomposition: str
    direction: str
    specialization: str
    order: int
    snf: list[Poly]
    predicted: list[Poly]
    match: bool
    oracle_checked: bool = False
    oracle_match: bool | None = None
    candidates: dict[str, bool] | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "partition": self.partition.to_json(),
            "decomposition": self.decomposition,
            "direction": self.direction,
            "specialization": self.specialization,
            "order": self.order,
            "snf": [d.to_json() for d in self.snf],
            "predicted": [d.to_json() for d in self.predicted],
            "match": self.match,
            "oracle_checked": self.oracle_checked,
            "oracle_match": self.oracle_match,
        }
        if self.candidates is not None:
            out["candidates"] = self.candidates
        out.update(self.extra)
        return out

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


DIAMOND_FORMULA = "y+[c]_q"
HAT_FORMULA = "1-q^c*y"


def verify_theorem(
    p: Partition,
    dec: OutsideDecomposition,
    s: Specialization | str,
    *,
    label: str | None = None,
    oracle: bool = False,
    bound: int = DEFAULT_MINOR_BOUND,
    both_predictions: bool = False,
    matrix=None,
) -> TheoremReport:
    """Compute the Smith form of the specialized matrix and compare it with
    the diagonal-hook prediction.  A mismatch is reported, never raised."""
    s = get_specialization(s)
    mat = matrix if matrix is not None else build_matrix(p, dec, s)
    rows = mat.entries
    m = len(rows)
    snf = list(smith_normal_form(rows, zero=s.zero()).diagonal)
    predicted = predicted_diagonal(p, m, s)
    report = TheoremReport(
        partition=p,
        decomposition=label or dec.direction.steps,
        direction=dec.direction.steps,
        specialization=s.name,
        order=m,
        snf=snf,
        predicted=predicted,
        match=snf == predicted,
    )
    if both_predictions and s.name == "q-diamond":
        alt = predicted_diagonal(p, m, s, factor=Q_HAT)
        report.candidates = {DIAMOND_FORMULA: report.match, HAT_FORMULA: snf == alt}
    if oracle and m <= bound:
        profile = minor_gcd_profile(rows, bound)
        prod = s.one()
        ok = True
        for k in range(m):
            prod = prod * snf[k]
            if prod.monic() != profile[k]:
                ok = False
                break
        report.oracle_checked = True
        report.oracle_match = ok
    return report
