"""Generators for the crystallized construction families.

All layouts are produced in grid coordinates (row r from the top, column c
from the left) and converted to polyominoes at the end.  Interior coordinates
(ir, ic) = (r - 1, c - 1) carry a checkerboard partition: cells with ir + ic
even are "white" (holes unless deliberately filled), cells with ir + ic odd
are "black" (always tiles).  A filled white cell together with its four black
neighbours forms a plus; the fill sets below are exactly the plus centers of
the rooted plus trees, so each family is emitted procedurally for every k.

Every generator runs the efficiency verifier before returning; a failure is
a library bug, never a property of k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import (
    CORNERS,
    EMPTY,
    FILLED,
    UNDET,
    Arrangement,
    from_grid_cells,
    from_rows,
)
from .bounds import SQUARE, PRONIC, AlphaKind, c_alpha, h_alpha, kr_hole_count, kr_tile_count
from .core import Polyomino, from_cells, is_efficiently_structured, summarize
from .errors import BadDimensions, InternalInconsistency


@dataclass(frozen=True)
class BoundaryKind:
    """Ring template: which rectangle corners are filled (at most three)."""

    filled_corners: frozenset[str]

    def __post_init__(self):
        bad = set(self.filled_corners) - set(CORNERS)
        if bad:
            raise ValueError(f"unknown corners {bad}")
        if len(self.filled_corners) > 3:
            raise ValueError("a valid boundary leaves at least one corner empty")

    @staticmethod
    def d1() -> "BoundaryKind":
        return BoundaryKind(frozenset())

    @staticmethod
    def d2(open_corner: str = "br") -> "BoundaryKind":
        return BoundaryKind(frozenset(CORNERS) - {open_corner})

    @staticmethod
    def between(filled) -> "BoundaryKind":
        return BoundaryKind(frozenset(filled))


def ring_cells(width: int, height: int) -> list[tuple[int, int]]:
    out = []
    for c in range(width):
        out.append((0, c))
        out.append((height - 1, c))
    for r in range(1, height - 1):
        out.append((r, 0))
        out.append((r, width - 1))
    return sorted(set(out))


def _corner_rc(width: int, height: int) -> dict[str, tuple[int, int]]:
    return {
        "tl": (0, 0),
        "tr": (0, width - 1),
        "bl": (height - 1, 0),
        "br": (height - 1, width - 1),
    }


def boundary(width: int, height: int, kind: BoundaryKind) -> Arrangement:
    """Boundary ring populated per kind; interior all undetermined."""
    if width < 3 or height < 3:
        raise BadDimensions("boundary templates need width, height >= 3")
    corners = _corner_rc(width, height)
    empty_corners = {corners[name] for name in CORNERS if name not in kind.filled_corners}
    filled = {cell for cell in ring_cells(width, height) if cell not in empty_corners}
    undet = {
        (r, c) for r in range(1, height - 1) for c in range(1, width - 1)
    }
    return from_grid_cells(width, height, filled, undet)


def pn_template(n: int) -> Arrangement:
    """Forced interior of an odd n x n square: black cells filled, white cells
    in odd interior rows (1st, 3rd, ... from the top) empty, the rest free."""
    if n < 5 or n % 2 == 0:
        raise BadDimensions("template needs odd n >= 5")
    k = n - 2
    rows = []
    for ir in range(k):
        row = []
        for ic in range(k):
            if (ir + ic) % 2 == 1:
                row.append(FILLED)
            elif ir % 2 == 0:
                row.append(EMPTY)
            else:
                row.append(UNDET)
        rows.append("".join(row))
    arr = from_rows(rows)
    expect = ((n - 3) // 2) ** 2
    if arr.undetermined_count() != expect:
        raise InternalInconsistency("undetermined grid size is off")
    return arr


def _frame_cells(width, height, filled_corners, fills, ring_empty=()):
    """Ring + all interior black cells + the given white fills (interior coords)."""
    corners = _corner_rc(width, height)
    empty = {corners[name] for name in CORNERS if name not in filled_corners}
    empty.update(ring_empty)
    cells = {cell for cell in ring_cells(width, height) if cell not in empty}
    for ir in range(height - 2):
        for ic in range(width - 2):
            if (ir + ic) % 2 == 1:
                cells.add((ir + 1, ic + 1))
    for ir, ic in fills:
        if (ir + ic) % 2 != 0:
            raise InternalInconsistency(f"fill {(ir, ic)} is not on the white set")
        cells.add((ir + 1, ic + 1))
    return cells


def _emit(width, height, cells, expect_h, expect_n) -> Polyomino:
    p = from_cells((c, height - 1 - r) for r, c in cells)
    s = summarize(p)
    if (s.n, s.h) != (expect_n, expect_h):
        raise InternalInconsistency(
            f"construction produced n={s.n}, h={s.h}; closed forms say "
            f"n={expect_n}, h={expect_h}"
        )
    if (p.width, p.height) != (width, height):
        raise InternalInconsistency("construction does not fill its bounding box")
    report = is_efficiently_structured(p, s)
    if not report.efficient:
        raise InternalInconsistency(f"construction not efficiently structured: {report.reasons}")
    return p


def s1(k: int) -> Polyomino:
    """Even square, side 6k+4: 2k vertical plus trees of 3k pluses each."""
    if k < 1:
        raise ValueError("k >= 1")
    n_side = 6 * k + 4
    fills = []
    for j in range(2 * k):
        c = 2 + 3 * j
        if c % 2 == 0:  # rooted at the bottom
            fills += [(r, c) for r in range(2, 6 * k + 1, 2)]
        else:  # rooted at the top
            fills += [(r, c) for r in range(1, 6 * k, 2)]
    cells = _frame_cells(n_side, n_side, {"tl"}, fills)
    return _emit(n_side, n_side, cells, 12 * k * k + 12 * k + 2, 24 * k * k + 36 * k + 11)


def s2(k: int) -> Polyomino:
    """Even square, side 6k+2: two-hole corner gadget bridging the boundary
    sections, plus 2k-2 vertical trees and 2k-2 two-plus horizontal trees."""
    if k < 1:
        raise ValueError("k >= 1")
    n_side = 6 * k + 2
    fills = [(1, 3), (3, 3), (3, 1)]
    for j in range(2 * k - 2):
        c = 6 + 3 * j
        if c % 2 == 0:
            fills += [(r, c) for r in range(2, 6 * k - 1, 2)]
        else:
            fills += [(r, c) for r in range(1, 6 * k - 2, 2)]
    for i in range(2 * k - 2):
        r = 6 + 3 * i
        if r % 2 == 0:  # rooted on the leftmost vertical tree
            fills += [(r, 2), (r, 4)]
        else:  # rooted at the left boundary
            fills += [(r, 1), (r, 3)]
    cells = _frame_cells(n_side, n_side, set(), fills)
    return _emit(n_side, n_side, cells, 12 * k * k + 4 * k - 1, 24 * k * k + 20 * k + 1)


def s0(k: int) -> Polyomino:
    """Even square, side 6k+6: comb of 2k vertical trees plus a two-column
    right strip of single pluses and a corner bridge plus."""
    if k < 0:
        raise ValueError("k >= 0")
    n_side = 6 * k + 6
    fills = [(6 * k + 2, 6 * k + 2)]  # bridge joining the two boundary sections
    for j in range(2 * k):
        c = 2 + 3 * j
        if c % 2 == 0:
            fills += [(r, c) for r in range(2, 6 * k + 3, 2)]
        else:
            fills += [(r, c) for r in range(1, 6 * k + 2, 2)]
    for t in range(2 * k):
        r = 2 + 3 * t
        fills.append((r, 6 * k + 2) if r % 2 == 0 else (r, 6 * k + 1))
    cells = _frame_cells(n_side, n_side, set(), fills)
    return _emit(n_side, n_side, cells, 12 * k * k + 20 * k + 7, 24 * k * k + 52 * k + 25)


def r0(k: int) -> Polyomino:
    """Pronic (3k+3) x (3k+4): k nested bent plus trees, roots alternating
    between the right and bottom boundaries."""
    if k < 1:
        raise ValueError("k >= 1")
    width, height = 3 * k + 3, 3 * k + 4
    fills = [(3 * k - 1, 3 * k - 1)]
    for mm in range(2, k + 1):
        d = 3 * (k - mm) + 2
        if mm % 2 == 1:  # rooted at the right boundary
            fills += [(d, c) for c in range(d, 3 * k, 2)]
            fills += [(r, d) for r in range(d + 2, 3 * k, 2)]
        else:  # rooted at the bottom boundary
            fills += [(r, d) for r in range(d, 3 * k + 1, 2)]
            fills += [(d, c) for c in range(d + 2, 3 * k - 1, 2)]
    cells = _frame_cells(width, height, {"tl"}, fills)
    return _emit(width, height, cells, 3 * k * k + 5 * k + 1, 6 * k * k + 16 * k + 8)


def r1(k: int) -> Polyomino:
    """Pronic (3k+4) x (3k+5): like r0 with a two-plus initial tree."""
    if k < 1:
        raise ValueError("k >= 1")
    width, height = 3 * k + 4, 3 * k + 5
    fills = [(3 * k + 1, 3 * k - 1), (3 * k - 1, 3 * k - 1)]
    for mm in range(2, k + 1):
        d = 3 * (k - mm) + 2
        if mm % 2 == 0:  # rooted at the right boundary
            fills += [(d, c) for c in range(d, 3 * k + 1, 2)]
            fills += [(r, d) for r in range(d + 2, 3 * k + 1, 2)]
        else:  # rooted at the bottom boundary
            fills += [(r, d) for r in range(d, 3 * k + 2, 2)]
            fills += [(d, c) for c in range(d + 2, 3 * k, 2)]
    cells = _frame_cells(width, height, {"tl"}, fills)
    return _emit(width, height, cells, 3 * k * k + 7 * k + 3, 6 * k * k + 20 * k + 14)


def r2(k: int) -> Polyomino:
    """Pronic with the short side N = 3k+5 congruent to 2 mod 3.

    Oriented with the odd side as the width; the five empty boundary spaces
    sit in the bottom row, three anchored at the left corner and two at the
    right corner.  The interior is checkerboarded and threaded by k nested
    bent plus trees whose elbows march down the main diagonal, with roots
    alternating between the bottom and left boundary sections; the cell above
    the inner bottom-left dent is forced filled and splices the two boundary
    arcs together.
    """
    if k < 1:
        raise ValueError("k >= 1")
    n_side = 3 * k + 5
    width, height = (n_side + 1, n_side) if n_side % 2 == 0 else (n_side, n_side + 1)
    kw, kh = width - 2, height - 2
    dents = {
        (height - 1, 0),
        (height - 1, 1),
        (height - 1, 2),
        (height - 1, width - 2),
        (height - 1, width - 1),
    }
    fills = [(kh - 1, 1)]  # forced: above the left dent, bridging the arcs
    for j in range(k):
        d = 2 + 3 * j
        cc = kw - 1 - d
        if j % 2 == 0:  # rooted at the bottom boundary section
            fills += [(d, c) for c in range(2, cc + 1, 2)]
            fills += [(r, cc) for r in range(d + 2, kh - 1, 2)]
        else:  # rooted at the left boundary
            fills += [(d, c) for c in range(1, cc + 1, 2)]
            fills += [(r, cc) for r in range(d + 2, kh - 2, 2)]
    cells = _frame_cells(width, height, set(CORNERS), fills, ring_empty=dents)
    return _emit(width, height, cells, 3 * k * k + 9 * k + 5, 6 * k * k + 24 * k + 20)


# fixed small crystals -------------------------------------------------------

_S1_ROWS = ("###", "#.#", "##.")

_S2D_ROWS = (
    ".##.",
    "#.##",
    "##.#",
    ".###",
)

_S3_ROWS = (
    "####.",
    "#.#.#",
    "##.##",
    ".###.",
)


def _fixed(rows, expect_h, expect_n) -> Polyomino:
    p = from_rows(rows).to_polyomino()
    s = summarize(p)
    if (s.n, s.h) != (expect_n, expect_h) or not is_efficiently_structured(p, s).efficient:
        raise InternalInconsistency("embedded crystal data corrupted")
    return p


def one_hole_crystal() -> Polyomino:
    """The unique 7-tile crystal with one hole (doubling-sequence seed)."""
    return _fixed(_S1_ROWS, 1, 7)


def two_hole_corner_crystal() -> Polyomino:
    """An 11-tile two-hole crystal whose empties all sit at rectangle corners,
    making it a valid expansion base."""
    return _fixed(_S2D_ROWS, 2, 11)


def three_hole_crystal() -> Polyomino:
    """The 14-tile three-hole crystal in the 4 x 5 pronic rectangle."""
    return _fixed(_S3_ROWS, 3, 14)


def kr(level: int) -> Polyomino:
    """Doubling sequence: the unique crystal with (4^level - 1)/3 holes,
    produced by repeatedly expanding the one-hole seed."""
    if level < 1:
        raise ValueError("level >= 1")
    from .transform import expand
    from .arrangement import from_polyomino

    arr = from_polyomino(one_hole_crystal())
    for _ in range(level - 1):
        arr = expand(arr)
    p = arr.to_polyomino()
    s = summarize(p)
    expect = (kr_hole_count(level), kr_tile_count(level))
    if (s.h, s.n) != expect or not is_efficiently_structured(p, s).efficient:
        raise InternalInconsistency(f"doubling-sequence crystal wrong at level {level}")
    return p


def crystal_for_threshold(a: AlphaKind) -> Polyomino:
    """A crystallized polyomino with h_alpha holes inside the alpha rectangle."""
    from .transform import expand
    from .arrangement import from_polyomino

    N = a.N
    if a.kind == PRONIC:
        if N == 3:  # same h as the 3x3 square; the one-hole seed fits
            return one_hole_crystal()
        if N == 4:
            return three_hole_crystal()
        if N == 5:  # h equals the 5x5 square's; that crystal fits
            return kr(2)
        if N % 3 == 0:
            return r0(N // 3 - 1)
        if N % 3 == 1:
            return r1((N - 4) // 3)
        return r2((N - 5) // 3)
    # squares
    if N == 3:
        return one_hole_crystal()
    if N == 4:
        return two_hole_corner_crystal()
    if N % 2 == 0:
        if N % 6 == 4:
            return s1((N - 4) // 6)
        if N % 6 == 2:
            return s2((N - 2) // 6)
        return s0((N - 6) // 6)
    # odd squares: compress the side length until it is even, then expand back
    p_odd = N - 1
    levels = 0
    while p_odd % 2 == 0:
        p_odd //= 2
        levels += 1
    if p_odd == 1:
        return kr(levels)
    base = crystal_for_threshold(AlphaKind(p_odd + 1, SQUARE))
    arr = from_polyomino(base)
    for _ in range(levels):
        arr = expand(arr)
    p = arr.to_polyomino()
    s = summarize(p)
    expect_h = h_alpha(a)
    expect_n = a.area - expect_h - c_alpha(a)
    if (s.h, s.n) != (expect_h, expect_n):
        raise InternalInconsistency(
            f"expanded odd-square crystal wrong for N={N}: got h={s.h}, n={s.n}, "
            f"expected h={expect_h}, n={expect_n}"
        )
    if not is_efficiently_structured(p, s).efficient:
        raise InternalInconsistency(f"expanded crystal for N={N} not efficient")
    return p
