"""
Box diagrams of codes, the c-path, and ladder moves.

Row ``i`` of the diagram of ``alpha`` holds the boxes ``1..alpha_i``; rows are
drawn bottom to top. The box in row ``r``, column ``p`` corresponds to the
letter ``s_{r+p-1}`` of the row-reading, so a box that climbs one row while
stepping one column left keeps its letter.

Ladder move, as implemented here: a box at ``(r, c)`` whose left neighbour
``(r, c - 1)`` is empty climbs past every row that is occupied in both columns
``c - 1`` and ``c``, and drops into the first row where both of those cells are
empty, landing at column ``c - 1``. Any row occupied in exactly one of the two
columns blocks the move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .composition import Composition
from .errors import OutOfRange

GLYPH = "□"


@dataclass(frozen=True)
class BoxDiagram:
    """Occupied columns per row; ``rows[r - 1]`` is row ``r``, for ``r = 1..n-1``."""

    rows: tuple[frozenset[int], ...]
    n: int

    @classmethod
    def of(cls, alpha: Composition) -> "BoxDiagram":
        return cls(tuple(frozenset(range(1, a + 1)) for a in alpha.parts), alpha.n)

    def occupied(self, r: int, c: int) -> bool:
        return 1 <= r <= len(self.rows) and c in self.rows[r - 1]

    def box_count(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_left_justified(self) -> bool:
        return all(row == frozenset(range(1, len(row) + 1)) for row in self.rows)

    def to_composition(self) -> Optional[Composition]:
        """The composition drawn by this diagram, if it is one in ``C_n``."""
        if not self.is_left_justified():
            return None
        try:
            return Composition(tuple(len(row) for row in self.rows), self.n)
        except ValueError:
            return None

    def without(self, r: int, c: int) -> "BoxDiagram":
        rows = list(self.rows)
        rows[r - 1] = rows[r - 1] - {c}
        return BoxDiagram(tuple(rows), self.n)

    def moved(self, src: tuple[int, int], dst: tuple[int, int]) -> "BoxDiagram":
        rows = list(self.rows)
        rows[src[0] - 1] = rows[src[0] - 1] - {src[1]}
        rows[dst[0] - 1] = rows[dst[0] - 1] | {dst[1]}
        return BoxDiagram(tuple(rows), self.n)


def render(
    d: BoxDiagram | Composition,
    glyph: str = GLYPH,
    top_down: bool = False,
    marks: Optional[dict[tuple[int, int], str]] = None,
) -> str:
    """One text line per row, row 1 at the bottom unless ``top_down``.

    Gaps inside a row print as ``·``; ``marks`` overrides single cells.
    """
    if isinstance(d, Composition):
        d = BoxDiagram.of(d)
    marks = marks or {}
    if d.box_count() == 0 and not marks:
        return ""
    lines = []
    for r, row in enumerate(d.rows, start=1):
        width = max(list(row) + [c for (rr, c) in marks if rr == r] + [0])
        cells = []
        for c in range(1, width + 1):
            if (r, c) in marks:
                cells.append(marks[(r, c)])
            else:
                cells.append(glyph if c in row else "·")
        lines.append("".join(cells).rstrip())
    if not top_down:
        lines.reverse()
    return "\n".join(lines)


def c_path(alpha: Composition, i: int) -> list[tuple[int, int]]:
    """Vertices ``(row, column)`` of the polygonal line from the last box of row ``i``.

    Moving up from row ``r - 1`` to row ``r`` the line goes straight up if
    the box at the current column of row ``r`` is filled and one column left
    otherwise. The number of left steps taken by row ``j - 1`` is ``c_{i,j}``.
    """
    if not 1 <= i <= alpha.n - 1:
        raise OutOfRange(f"row {i} outside [1, {alpha.n - 1}]")
    ai = alpha[i]
    if ai == 0:
        raise OutOfRange(f"row {i} is empty, so it has no last box")
    col = ai
    path = [(i, col)]
    for r in range(i + 1, alpha.n + 1):
        if alpha[r] < col:
            col -= 1
        path.append((r, col))
    return path


def path_shifts(alpha: Composition, i: int) -> list[int]:
    """Left-shift count at each vertex of :func:`c_path`."""
    return [alpha[i] - col for _, col in c_path(alpha, i)]


def ladder_target(d: BoxDiagram, frm: tuple[int, int]) -> Optional[tuple[int, int]]:
    r, c = frm
    if not d.occupied(r, c):
        raise OutOfRange(f"no box at {frm}")
    if c == 1 or d.occupied(r, c - 1):
        return None
    for k in range(r + 1, d.n):
        left, here = d.occupied(k, c - 1), d.occupied(k, c)
        if left and here:
            continue
        if not left and not here:
            return (k, c - 1)
        return None
    return None


def ladder_move(d: BoxDiagram, frm: tuple[int, int]) -> Optional[BoxDiagram]:
    dst = ladder_target(d, frm)
    return None if dst is None else d.moved(frm, dst)


def ladder_sequence(alpha: Composition, i: int, z: int) -> tuple[list[BoxDiagram], bool]:
    """Diagrams visited while resolving the ``(i, z)`` deletion, and whether it succeeded.

    The box at column ``alpha_i - z + 1`` of row ``i`` is deleted; the boxes to
    its right are then moved, leftmost first, until each one sits flush
    against a box on its left.
    """
    if not 1 <= i <= alpha.n - 1:
        raise OutOfRange(f"row {i} outside [1, {alpha.n - 1}]")
    if not 1 <= z <= alpha[i]:
        raise OutOfRange(f"z = {z} outside [1, {alpha[i]}]")
    d = BoxDiagram.of(alpha).without(i, alpha[i] - z + 1)
    frames = [d]
    for col in range(alpha[i] - z + 2, alpha[i] + 1):
        pos = (i, col)
        while pos[1] > 1 and not d.occupied(pos[0], pos[1] - 1):
            dst = ladder_target(d, pos)
            if dst is None:
                return frames, False
            d = d.moved(pos, dst)
            frames.append(d)
            pos = dst
    return frames, d.to_composition() is not None


def geometric_removable(alpha: Composition, i: int, z: int) -> Optional[Composition]:
    frames, ok = ladder_sequence(alpha, i, z)
    return frames[-1].to_composition() if ok else None
