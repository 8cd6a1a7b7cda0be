"""Tri-state rectangular grids: filled / empty / undetermined.

Rows are stored top-to-bottom, so row r corresponds to y = height - 1 - r.
Cell characters: '#' filled, '.' empty, '?' undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Polyomino, from_cells
from .errors import BadDimensions

FILLED = "#"
EMPTY = "."
UNDET = "?"

CORNERS = ("tl", "tr", "bl", "br")


@dataclass(frozen=True)
class Arrangement:
    width: int
    height: int
    rows: tuple[str, ...]

    def __post_init__(self):
        if len(self.rows) != self.height or any(len(r) != self.width for r in self.rows):
            raise BadDimensions("grid does not match declared dimensions")

    def at(self, r: int, c: int) -> str:
        return self.rows[r][c]

    @property
    def is_square(self) -> bool:
        return self.width == self.height

    def corner_cell(self, name: str) -> tuple[int, int]:
        return {
            "tl": (0, 0),
            "tr": (0, self.width - 1),
            "bl": (self.height - 1, 0),
            "br": (self.height - 1, self.width - 1),
        }[name]

    def filled_corner_mask(self) -> frozenset[str]:
        return frozenset(
            name for name in CORNERS if self.at(*self.corner_cell(name)) == FILLED
        )

    def undetermined_count(self) -> int:
        return sum(row.count(UNDET) for row in self.rows)

    def filled_cells(self) -> set[tuple[int, int]]:
        """Filled cells as (x, y) with y up."""
        return {
            (c, self.height - 1 - r)
            for r, row in enumerate(self.rows)
            for c, ch in enumerate(row)
            if ch == FILLED
        }

    def to_polyomino(self) -> Polyomino:
        return from_cells(self.filled_cells())

    def __str__(self) -> str:
        return "\n".join(self.rows)


def from_rows(rows) -> Arrangement:
    rows = tuple(rows)
    if not rows:
        raise BadDimensions("no rows")
    return Arrangement(width=len(rows[0]), height=len(rows), rows=rows)


def from_grid_cells(width: int, height: int, filled, undetermined=()) -> Arrangement:
    """Build from (row, col) cell sets; everything else is empty."""
    filled = set(filled)
    undetermined = set(undetermined)
    rows = []
    for r in range(height):
        rows.append(
            "".join(
                FILLED if (r, c) in filled else UNDET if (r, c) in undetermined else EMPTY
                for c in range(width)
            )
        )
    return from_rows(rows)


def from_polyomino(p: Polyomino) -> Arrangement:
    cells = p.cells
    rows = []
    for r in range(p.height):
        y = p.height - 1 - r
        rows.append("".join(FILLED if (x, y) in cells else EMPTY for x in range(p.width)))
    return from_rows(rows)
