"""Outside decompositions of a partition diagram, built from cutting strips.

A decomposition is fixed by choosing, for every diagonal except the last,
whether its cells step Up or Right.  That choice is a :class:`DirectionVector`;
the strips are the maximal chains of the induced successor map and the
cutting strip is the ribbon with one cell per diagonal taking the same steps.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .shapes import BorderStrip, Cell, Partition, rim_decomposition

EMPTY_STRIP = BorderStrip(())


class Kind(str, enum.Enum):
    HORIZONTAL = "horizontal"
    HOOK = "hook"
    RIM = "rim"


@dataclass(frozen=True)
class DirectionVector:
    """Steps over ``{U, R}`` for contents ``min_content .. max_content - 1``."""

    min_content: int
    steps: str

    def __post_init__(self):
        bad = set(self.steps) - {"U", "R"}
        if bad:
            raise ValueError(f"direction string has letters other than U/R: {''.join(sorted(bad))}")

    @classmethod
    def parse(cls, text: str, shape: Partition) -> "DirectionVector":
        text = text.strip().upper()
        dv = cls(1 - len(shape), text)
        expected = num_diagonals(shape) - 1
        if len(text) != expected:
            raise ValueError(
                f"direction {text!r} has length {len(text)}, expected {expected} for partition {shape}"
            )
        return dv

    def __getitem__(self, content: int) -> str:
        return self.steps[content - self.min_content]

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class OutsideDecomposition:
    shape: Partition
    direction: DirectionVector
    strips: tuple[BorderStrip, ...]
    cutting_strip: BorderStrip

    @property
    def order(self) -> int:
        return len(self.strips)

    def label(self) -> str:
        return self.direction.steps or "-"


def num_diagonals(p: Partition) -> int:
    return p[1] + len(p) - 1 if p.parts else 0


def _cutting_strip(direction: DirectionVector) -> BorderStrip:
    row = 1 + direction.steps.count("U")
    col = row + direction.min_content
    cells = [Cell(row, col)]
    for s in direction.steps:
        row, col = (row - 1, col) if s == "U" else (row, col + 1)
        cells.append(Cell(row, col))
    return BorderStrip(tuple(cells))


def build_decomposition(p: Partition, direction: DirectionVector | str) -> OutsideDecomposition:
    """Strips induced by ``direction`` on ``p``, ordered by decreasing end content.

    With that order the Horizontal, Hook and Rim decompositions list their
    strips as the rows, the hooks ``D_1, D_2, ...`` and the rims from the
    outside in, matching the classical Jacobi-Trudi, Giambelli and
    Lascoux-Pragacz layouts.
    """
    if not p.parts:
        raise ValueError("outside decompositions need a nonempty partition")
    if isinstance(direction, str):
        direction = DirectionVector.parse(direction, p)
    d = num_diagonals(p)
    lo, hi = 1 - len(p), p[1] - 1
    if len(direction) != d - 1 or direction.min_content != lo:
        raise ValueError(
            f"direction {direction.steps!r} has length {len(direction)}, expected {d - 1} for partition {p}"
        )

    def successor(c: Cell) -> Cell | None:
        k = c.content
        if k == hi:
            return None
        nxt = Cell(c.row - 1, c.col) if direction[k] == "U" else Cell(c.row, c.col + 1)
        return nxt if nxt in p else None

    def has_predecessor(c: Cell) -> bool:
        k = c.content
        if k == lo:
            return False
        prev = Cell(c.row + 1, c.col) if direction[k - 1] == "U" else Cell(c.row, c.col - 1)
        return prev in p

    strips = []
    for start in p.cells():
        if has_predecessor(start):
            continue
        chain = [start]
        nxt = successor(start)
        while nxt is not None:
            chain.append(nxt)
            nxt = successor(nxt)
        strips.append(BorderStrip(tuple(chain)))
    strips.sort(key=lambda s: -s.end_content)
    return OutsideDecomposition(p, direction, tuple(strips), _cutting_strip(direction))


def enumerate_decompositions(p: Partition) -> Iterator[OutsideDecomposition]:
    """All ``2**(d-1)`` decompositions, direction strings in lexicographic order."""
    lo = 1 - len(p)
    for steps in itertools.product("RU", repeat=num_diagonals(p) - 1):
        yield build_decomposition(p, DirectionVector(lo, "".join(steps)))


def canonical_direction(p: Partition, kind: Kind | str) -> DirectionVector:
    kind = Kind(kind)
    lo, hi = 1 - len(p), p[1] - 1
    if kind is Kind.HORIZONTAL:
        steps = "R" * (hi - lo)
    elif kind is Kind.HOOK:
        steps = "".join("U" if c < 0 else "R" for c in range(lo, hi))
    else:
        steps = rim_decomposition(p)[0].steps()
    return DirectionVector(lo, steps)


def canonical_decomposition(p: Partition, kind: Kind | str) -> OutsideDecomposition:
    return build_decomposition(p, canonical_direction(p, kind))


def theta_segment(dec: OutsideDecomposition, p: int, q: int) -> BorderStrip | None:
    """Segment of the cutting strip over contents ``[p, q]``.

    Returns :data:`EMPTY_STRIP` when ``p == q + 1`` and ``None`` (undefined)
    when ``p > q + 1``.
    """
    if p == q + 1:
        return EMPTY_STRIP
    if p > q + 1:
        return None
    cut = dec.cutting_strip
    lo, hi = cut.start_content, cut.end_content
    if p < lo or q > hi:
        raise ValueError(f"contents [{p}, {q}] outside the cutting strip range [{lo}, {hi}]")
    return BorderStrip(cut.cells[p - lo : q - lo + 1])


def validate_strips(p: Partition, strips: Sequence[BorderStrip | Sequence]) -> DirectionVector:
    """Check an explicit strip list is an outside decomposition of ``p``.

    Returns the induced direction vector; raises :class:`ValueError`
    naming the first violated condition.
    """
    strips = [s if isinstance(s, BorderStrip) else BorderStrip(tuple(s)) for s in strips]
    seen: set[Cell] = set()
    for s in strips:
        if not s:
            raise ValueError("empty strip")
        for c in s:
            if c not in p:
                raise ValueError(f"cell {tuple(c)} is outside {p}")
            if c in seen:
                raise ValueError(f"cell {tuple(c)} lies in two strips")
            seen.add(c)
    if len(seen) != p.size:
        raise ValueError("strips do not cover the diagram")

    for s in strips:
        (i, j), (k, l) = s.cells[0], s.cells[-1]
        if (i, j - 1) in p and (i + 1, j) in p:
            raise ValueError(f"strip starts at {(i, j)}, not on the left or bottom perimeter")
        if (k, l + 1) in p and (k - 1, l) in p:
            raise ValueError(f"strip ends at {(k, l)}, not on the right or top perimeter")

    lo, hi = 1 - len(p), p[1] - 1
    observed: dict[int, set[str]] = {}
    ends: dict[int, list[Cell]] = {}
    for s in strips:
        steps = s.steps()
        for c, step in zip(s.cells, steps):
            observed.setdefault(c.content, set()).add(step)
        ends.setdefault(s.cells[-1].content, []).append(s.cells[-1])
    chosen = []
    for k in range(lo, hi):
        dirs = observed.get(k, set())
        if len(dirs) > 1:
            raise ValueError(f"cells of content {k} step both up and right")
        if dirs:
            chosen.append(dirs.pop())
            continue
        # every cell on this diagonal ends a strip: pick a direction that leaves the diagram
        terminal = ends.get(k, [])
        if all((c.row - 1, c.col) not in p for c in terminal):
            chosen.append("U")
        else:
            chosen.append("R")
    direction = DirectionVector(lo, "".join(chosen))
    rebuilt = build_decomposition(p, direction)
    if {s.cells for s in rebuilt.strips} != {s.cells for s in strips}:
        raise ValueError("strips are not the maximal chains of their direction vector")
    return direction
