"""Brute-force semistandard tableau enumeration.

Used as an oracle independent of any determinant or product formula:
``s_{lambda/mu}(1^t)`` counts SSYT with entries at most ``t``, and the
principal specialization ``s_{lambda/mu}(1, q, ..., q^{t-1})`` is their
generating function by ``sum(entry - 1)``.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterator

from .exact_arith import QQ, Poly
from .shapes import Cell, Partition, SkewShape

Ssyt = dict  # Cell -> entry


def _as_skew(shape) -> SkewShape:
    return SkewShape(shape) if isinstance(shape, Partition) else shape


def enumerate_ssyt(shape: SkewShape | Partition, max_entry: int) -> Iterator[Ssyt]:
    """Yield every filling with entries in ``1..max_entry``, rows weakly and
    columns strictly increasing.  Cells are filled in row-major order."""
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    shape = _as_skew(shape)
    cells = shape.cells()
    cellset = set(cells)
    filling: dict[Cell, int] = {}

    def fill(k: int) -> Iterator[Ssyt]:
        if k == len(cells):
            yield dict(filling)
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in cellset:
            lo = filling[Cell(i, j - 1)]
        if (i - 1, j) in cellset:
            lo = max(lo, filling[Cell(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            filling[cells[k]] = v
            yield from fill(k + 1)
        filling.pop(cells[k], None)

    yield from fill(0)


def count_ssyt(shape: SkewShape | Partition, max_entry: int) -> int:
    return sum(1 for _ in enumerate_ssyt(shape, max_entry))


def q_weight_ssyt(shape: SkewShape | Partition, max_entry: int) -> Poly:
    """``sum over SSYT of q**sum(entry - 1)`` as a polynomial in ``q``."""
    weights = Counter(sum(v - 1 for v in T.values()) for T in enumerate_ssyt(shape, max_entry))
    if not weights:
        return Poly((), QQ, "q")
    top = max(weights)
    return Poly([Fraction(weights.get(k, 0)) for k in range(top + 1)], QQ, "q")


def subpartitions(p: Partition) -> Iterator[Partition]:
    """Every partition contained in ``p`` (including the empty one and ``p``)."""

    def gen(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i > len(p):
            yield ()
            return
        for x in range(min(cap, p[i]), -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in gen(i + 1, x):
                    yield (x,) + rest

    for parts in gen(1, p[1] if p.parts else 0):
        yield Partition(parts)
