"""Partitions, skew shapes and border strips.

Cells are ``(row, col)`` pairs, 1-based, row 1 on top (English notation);
the content of a cell is ``col - row``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


class Partition:
    """A weakly decreasing tuple of positive integers.

    Zero parts are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts of {parts} are not weakly decreasing")
        self.parts = tuple(x for x in parts if x > 0)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,3,1"``; the empty string gives the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        parts = []
        for tok in text.split(","):
            tok = tok.strip()
            try:
                parts.append(int(tok))
            except ValueError:
                raise ValueError(f"bad partition part {tok!r}") from None
        return cls(parts)

    @classmethod
    def from_frobenius(cls, alphas: Sequence[int], betas: Sequence[int]) -> "Partition":
        """Rebuild a partition from arm lengths ``alphas`` and leg lengths ``betas``."""
        r = len(alphas)
        if len(betas) != r:
            raise ValueError("Frobenius coordinates of unequal length")
        for seq in (alphas, betas):
            if any(seq[i] <= seq[i + 1] for i in range(r - 1)) or (r and seq[-1] < 0):
                raise ValueError(f"Frobenius coordinates {seq} not strictly decreasing")
        if r == 0:
            return cls(())
        nrows = betas[0] + 1
        rows = [0] * nrows
        for i in range(r):
            rows[i] = alphas[i] + i + 1
        # below the Durfee square, row k (1-based, k > r) has #{i : beta_i + i >= k}
        for k in range(r + 1, nrows + 1):
            rows[k - 1] = sum(1 for i in range(r) if betas[i] + i + 1 >= k)
        return cls(rows)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access, ``0`` beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for x in self.parts if x >= j) for j in range(1, self.parts[0] + 1)])

    def cells(self) -> list[Cell]:
        return [Cell(i, j) for i, row in enumerate(self.parts, 1) for j in range(1, row + 1)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 1 and j >= 1 and j <= self[i]

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self.parts, other.parts))

    def contents(self) -> list[int]:
        return [c.content for c in self.cells()]

    @property
    def weighted_size(self) -> int:
        """``sum((k - 1) * part_k)``, the exponent of ``q`` in the principal
        specialization prefactor."""
        return sum(k * x for k, x in enumerate(self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)


def rank(p: Partition) -> int:
    """Side of the Durfee square: the largest ``r`` with ``(r, r)`` in ``p``."""
    r = 0
    while p[r + 1] >= r + 1:
        r += 1
    return r


@dataclass(frozen=True)
class FrobeniusNotation:
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.alphas)

    def to_partition(self) -> Partition:
        return Partition.from_frobenius(self.alphas, self.betas)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.alphas))} | {','.join(map(str, self.betas))})"


def frobenius(p: Partition) -> FrobeniusNotation:
    conj = p.conjugate()
    r = rank(p)
    return FrobeniusNotation(
        tuple(p[i] - i for i in range(1, r + 1)),
        tuple(conj[i] - i for i in range(1, r + 1)),
    )


def diagonal_hook(p: Partition, i: int) -> frozenset[Cell]:
    """Cells of the ``i``-th diagonal hook; empty when ``i > rank(p)``."""
    if i < 1:
        raise ValueError("diagonal hooks are indexed from 1")
    if i > rank(p):
        return frozenset()
    conj = p.conjugate()
    arm = [Cell(i, j) for j in range(i, p[i] + 1)]
    leg = [Cell(j, i) for j in range(i + 1, conj[i] + 1)]
    return frozenset(arm + leg)


def hook_length(p: Partition, c: Cell) -> int:
    i, j = c
    if c not in p:
        raise ValueError(f"cell {tuple(c)} is not in {p}")
    return (p[i] - j) + (p.conjugate()[j] - i) + 1


def hook_lengths(p: Partition) -> dict[Cell, int]:
    conj = p.conjugate()
    return {c: (p[c.row] - c.col) + (conj[c.col] - c.row) + 1 for c in p.cells()}


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


def partitions_up_to(n: int, *, include_empty: bool = False) -> Iterator[Partition]:
    for k in range(0 if include_empty else 1, n + 1):
        yield from partitions_of(k)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list[Cell]:
        return [
            Cell(i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner[i] + 1, self.outer[i] + 1)
        ]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self) -> str:
        return f"({self.outer})/({self.inner})"


@dataclass(frozen=True)
class BorderStrip:
    """A ribbon stored lowest-content first; each step goes up or right.

    Cells of a cutting strip may sit at non-positive coordinates: only their
    contents are meaningful there.
    """

    cells: tuple[Cell, ...]

    def __post_init__(self):
        cells = tuple(Cell(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        for a, b in zip(cells, cells[1:]):
            up = b.row == a.row - 1 and b.col == a.col
            right = b.row == a.row and b.col == a.col + 1
            if not (up or right):
                raise ValueError(f"cells {tuple(a)} -> {tuple(b)} are not an up/right step")
        cellset = set(cells)
        for i, j in cells:
            if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cellset:
                raise ValueError(f"2x2 block at {(i, j)}")

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __bool__(self) -> bool:
        return bool(self.cells)

    @property
    def start_content(self) -> int:
        return self.cells[0].content

    @property
    def end_content(self) -> int:
        return self.cells[-1].content

    def steps(self) -> str:
        """Step word over ``{U, R}``, one letter per consecutive pair of cells."""
        return "".join("U" if b.row < a.row else "R" for a, b in zip(self.cells, self.cells[1:]))

    def cell_with_content(self, c: int) -> Cell:
        k = c - self.start_content
        if not 0 <= k < len(self.cells):
            raise ValueError(f"content {c} outside the strip")
        return self.cells[k]

    def upper(self) -> tuple[Cell, ...]:
        """Cells strictly above the main diagonal (positive content)."""
        return tuple(c for c in self.cells if c.content > 0)

    def lower(self) -> tuple[Cell, ...]:
        return tuple(c for c in self.cells if c.content < 0)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.cells]


def rim_decomposition(p: Partition) -> list[BorderStrip]:
    """Peel successive rims off ``p``, outermost first."""
    strips = []
    current = p
    while current.parts:
        rim = [c for c in current.cells() if (c.row + 1, c.col + 1) not in current]
        rim.sort(key=lambda c: c.content)
        strips.append(BorderStrip(tuple(rim)))
        current = Partition([max(current[i + 1] - 1, 0) for i in range(1, len(current) + 1)])
    return strips


def ribbon_to_skew(strip: BorderStrip) -> tuple[SkewShape, int]:
    """Translate a ribbon into a skew shape anchored at row 1, column 1.

    Returns the shape and the content offset: absolute content of a cell
    equals its content in the returned shape plus the offset.
    """
    if not strip.cells:
        raise ValueError("empty strip")
    rmin = min(c.row for c in strip.cells)
    cmin = min(c.col for c in strip.cells)
    rows: dict[int, list[int]] = {}
    for c in strip.cells:
        rows.setdefault(c.row - rmin + 1, []).append(c.col - cmin + 1)
    nrows = max(rows)
    outer = [max(rows[i]) for i in range(1, nrows + 1)]
    inner = [min(rows[i]) - 1 for i in range(1, nrows + 1)]
    return SkewShape(Partition(outer), Partition(inner)), cmin - rmin
