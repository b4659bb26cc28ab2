"""Ribbon Schur matrices ``M_lambda(Pi)`` under a specialization, and their determinants.

Row ``i`` is indexed by the end of strip ``theta_i`` and column ``j`` by the
start of strip ``theta_j``: ``entries[i][j]`` is the image of the ribbon
Schur function on ``theta[p(theta_j), q(theta_i)]``.  With strips ordered by
decreasing end content this puts the Horizontal, Hook and Rim matrices in
exactly the classical Jacobi-Trudi, Giambelli and Lascoux-Pragacz layouts.
The transpose (the other indexing convention) has the same determinant and
Smith form.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .exact_arith import Poly
from .linalg import bareiss_determinant, cofactor_determinant, submatrix
from .outside_decomp import Kind, OutsideDecomposition, canonical_decomposition, theta_segment
from .shapes import Partition, SkewShape, frobenius, rank
from .specialize import Specialization, get_specialization, ribbon_schur, specialized_skew_schur


@dataclass(frozen=True)
class SpecializedMatrix:
    entries: tuple[tuple[Poly, ...], ...]
    shape: Partition
    decomposition: OutsideDecomposition
    specialization: Specialization
    provenance: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[Poly]]:
        return [list(r) for r in self.entries]

    def zero(self) -> Poly:
        return self.specialization.zero()

    def to_json(self, kind: str | None = None) -> dict:
        return {
            "shape": self.shape.to_json(),
            "kind": kind,
            "direction": self.decomposition.direction.steps,
            "specialization": self.specialization.name,
            "entries": [[e.to_json() for e in row] for row in self.entries],
            "provenance": [[list(pq) for pq in row] for row in self.provenance],
        }

    def to_json_str(self, kind: str | None = None) -> str:
        return json.dumps(self.to_json(kind), sort_keys=True)


def build_matrix(p: Partition, dec: OutsideDecomposition, s: Specialization | str) -> SpecializedMatrix:
    s = get_specialization(s)
    if dec.shape != p:
        raise ValueError(f"decomposition is of {dec.shape}, not {p}")
    starts = [strip.start_content for strip in dec.strips]
    ends = [strip.end_content for strip in dec.strips]
    prov = tuple(tuple((starts[j], ends[i]) for j in range(len(starts))) for i in range(len(ends)))
    entries = tuple(
        tuple(ribbon_schur(s, theta_segment(dec, pq[0], pq[1])) for pq in row) for row in prov
    )
    return SpecializedMatrix(entries, p, dec, s, prov)


def canonical_matrix(p: Partition, kind: Kind | str, s: Specialization | str) -> SpecializedMatrix:
    return build_matrix(p, canonical_decomposition(p, kind), s)


def jacobi_trudi_matrix(p: Partition, s: Specialization | str) -> SpecializedMatrix:
    return canonical_matrix(p, Kind.HORIZONTAL, s)


def giambelli_matrix(p: Partition, s: Specialization | str) -> SpecializedMatrix:
    return canonical_matrix(p, Kind.HOOK, s)


def lascoux_pragacz_matrix(p: Partition, s: Specialization | str) -> SpecializedMatrix:
    return canonical_matrix(p, Kind.RIM, s)


def determinant(mat: SpecializedMatrix | Sequence[Sequence[Poly]], method: str = "bareiss") -> Poly:
    """Exact determinant; ``method`` is ``"bareiss"`` or ``"cofactor"``."""
    if isinstance(mat, SpecializedMatrix):
        rows, zero = mat.entries, mat.zero()
    else:
        rows, zero = mat, None
    if method == "bareiss":
        return bareiss_determinant(rows, zero)
    if method == "cofactor":
        return cofactor_determinant(rows, zero)
    raise ValueError(f"unknown determinant method {method!r}")


def _check_index_set(idx: Sequence[int], r: int, what: str) -> list[int]:
    out = sorted(set(idx))
    if len(out) != len(idx) or any(not 1 <= i <= r for i in out):
        raise ValueError(f"{what} {list(idx)} must be distinct indices in 1..{r}")
    return out


def lp_minor(p: Partition, rows: Sequence[int], cols: Sequence[int], s: Specialization | str) -> Poly:
    """Minor of the specialized Lascoux-Pragacz matrix on 1-based ``rows`` x ``cols``."""
    s = get_specialization(s)
    r = rank(p)
    rows = _check_index_set(rows, r, "rows")
    cols = _check_index_set(cols, r, "cols")
    if len(rows) != len(cols):
        raise ValueError(f"minor needs as many rows as columns, got {len(rows)} and {len(cols)}")
    if not rows:
        return s.one()
    mat = lascoux_pragacz_matrix(p, s)
    return bareiss_determinant(submatrix(mat.entries, [i - 1 for i in rows], [j - 1 for j in cols]))


def lp_minor_skew_shape(p: Partition, rows: Sequence[int], cols: Sequence[int]) -> SkewShape:
    """``p / mu`` where ``mu`` takes the arms of the rows left out and the legs
    of the columns left out."""
    fr = frobenius(p)
    r = fr.rank
    rows = _check_index_set(rows, r, "rows")
    cols = _check_index_set(cols, r, "cols")
    drop_rows = [i for i in range(1, r + 1) if i not in rows]
    drop_cols = [j for j in range(1, r + 1) if j not in cols]
    mu = Partition.from_frobenius(
        [fr.alphas[i - 1] for i in drop_rows], [fr.betas[j - 1] for j in drop_cols]
    )
    return SkewShape(p, mu)


def lp_minor_prediction(p: Partition, rows: Sequence[int], cols: Sequence[int], s: Specialization | str) -> Poly:
    return specialized_skew_schur(get_specialization(s), lp_minor_skew_shape(p, rows, cols))
