"""Expansion, compression, dismantling, and hole insertion."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .arrangement import CORNERS, EMPTY, FILLED, UNDET, Arrangement, from_rows
from .bounds import SQUARE, AlphaKind, h_alpha, g as g_entry
from .core import (
    ORTH,
    Polyomino,
    complement_components,
    free_key,
    from_cells,
    summarize,
)
from .errors import (
    BadBoundary,
    NoRootedPlus,
    NoStepFound,
    NotCompressible,
    UndeterminedInterior,
    UnsupportedResidue,
)


def _check_d_boundary(a: Arrangement) -> frozenset[str]:
    """Validate a D-form ring (all non-corner ring cells filled, at most three
    corners filled) and return the filled-corner mask."""
    if not a.is_square or a.width < 3:
        raise BadBoundary("need a square of side >= 3")
    n = a.width
    corner_cells = {a.corner_cell(name) for name in CORNERS}
    for c in range(n):
        for r, cc in ((0, c), (n - 1, c)):
            if (r, cc) not in corner_cells and a.at(r, cc) != FILLED:
                raise BadBoundary(f"ring cell {(r, cc)} not filled")
    for r in range(1, n - 1):
        for cell in ((r, 0), (r, n - 1)):
            if a.at(*cell) != FILLED:
                raise BadBoundary(f"ring cell {cell} not filled")
    mask = a.filled_corner_mask()
    for name in CORNERS:
        state = a.at(*a.corner_cell(name))
        if state == UNDET:
            raise BadBoundary(f"corner {name} undetermined")
    if len(mask) > 3:
        raise BadBoundary("all four corners filled")
    return mask


def expand(a: Arrangement) -> Arrangement:
    """Blow an N x N arrangement up to (2N-1) x (2N-1): same boundary corners,
    forced checkerboard interior, free spaces copied from the input interior."""
    mask = _check_d_boundary(a)
    n = a.width
    for r in range(1, n - 1):
        for c in range(1, n - 1):
            if a.at(r, c) == UNDET:
                raise UndeterminedInterior(f"interior cell {(r, c)} undetermined")
    m = 2 * n - 1
    corner_rc = {
        "tl": (0, 0),
        "tr": (0, m - 1),
        "bl": (m - 1, 0),
        "br": (m - 1, m - 1),
    }
    empty_corners = {corner_rc[name] for name in CORNERS if name not in mask}
    rows = []
    for r in range(m):
        row = []
        for c in range(m):
            if r in (0, m - 1) or c in (0, m - 1):
                row.append(EMPTY if (r, c) in empty_corners else FILLED)
                continue
            ir, ic = r - 1, c - 1
            if (ir + ic) % 2 == 1:
                row.append(FILLED)
            elif ir % 2 == 0:
                row.append(EMPTY)
            else:
                row.append(a.at((ir - 1) // 2 + 1, (ic - 1) // 2 + 1))
        rows.append("".join(row))
    return from_rows(rows)


def is_compressible(a: Arrangement):
    """Structural test of the decomposition boundary + forced interior + free
    grid.  Returns (ok, reason, cell); cell is the first violation or None."""
    if not a.is_square:
        return False, "not square", None
    n = a.width
    if n % 2 == 0:
        return False, "even side", None
    if n < 5:
        return False, "side below five", None
    try:
        _check_d_boundary(a)
    except BadBoundary as exc:
        return False, str(exc), None
    for ir in range(n - 2):
        for ic in range(n - 2):
            cell = (ir + 1, ic + 1)
            state = a.at(*cell)
            if (ir + ic) % 2 == 1:
                if state != FILLED:
                    return False, "forced tile cell not filled", cell
            elif ir % 2 == 0:
                if state != EMPTY:
                    return False, "forced hole cell not empty", cell
    return True, "", None


def compress(a: Arrangement) -> Arrangement:
    """Inverse of expand: shrink N x N to (N+1)/2 x (N+1)/2."""
    ok, reason, cell = is_compressible(a)
    if not ok:
        raise NotCompressible(cell, reason)
    n = a.width
    mask = a.filled_corner_mask()
    m = (n + 1) // 2
    corner_rc = {
        "tl": (0, 0),
        "tr": (0, m - 1),
        "bl": (m - 1, 0),
        "br": (m - 1, m - 1),
    }
    empty_corners = {corner_rc[name] for name in CORNERS if name not in mask}
    rows = []
    for r in range(m):
        row = []
        for c in range(m):
            if r in (0, m - 1) or c in (0, m - 1):
                row.append(EMPTY if (r, c) in empty_corners else FILLED)
            else:
                # output interior (r, c) comes from the free cell at (2r, 2c)
                row.append(a.at(2 * r, 2 * c))
        rows.append("".join(row))
    return from_rows(rows)


# --- dismantling ------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    """One dismantling move: an optional tile relocation plus two removals."""

    fill: tuple | None  # destination cell (a hole being filled), or None
    src: tuple | None  # tile moved onto `fill`, or None
    removals: tuple  # two tiles removed

    def describe(self) -> str:
        parts = []
        if self.src is not None:
            parts.append(f"move {self.src}->{self.fill}")
        parts.append(f"remove {self.removals[0]} {self.removals[1]}")
        return ", ".join(parts)


@dataclass(frozen=True)
class TraceStep:
    move: Move
    n: int
    h: int
    key: tuple  # canonical free-form key of the result


@dataclass
class DismantleTrace:
    """Replayable record of dismantling moves with per-step summaries."""

    start_key: tuple
    steps: list = field(default_factory=list)

    def replay(self, start: Polyomino) -> Polyomino:
        p = start
        for step in self.steps:
            p = apply_move(p, step.move)
            if free_key(p) != step.key:
                raise AssertionError("trace replay diverged")
        return p


def apply_move(p: Polyomino, move: Move) -> Polyomino:
    cells = set(p.cells)
    if move.src is not None:
        cells.remove(move.src)
        cells.add(move.fill)
    for t in move.removals:
        cells.remove(t)
    return from_cells(cells)


def _cheb(a, b) -> int:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def _shape_state(p: Polyomino):
    """(tiles, hole cells, hole count); holes must all have area one."""
    outside, holes = complement_components(p)
    return set(p.cells), holes, outside


def _valid_after(cells: set, n0: int, h0: int) -> bool:
    """Full gate: connected, n = n0-2, h = h0-1, acyclic, all holes area 1."""
    if len(cells) != n0 - 2:
        return False
    # connectivity
    seed = next(iter(cells))
    seen = {seed}
    stack = [seed]
    while stack:
        x, y = stack.pop()
        for dx, dy in ORTH:
            nb = (x + dx, y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cells):
        return False
    # acyclicity
    b = sum(1 for x, y in cells if (x + 1, y) in cells) + sum(
        1 for x, y in cells if (x, y + 1) in cells
    )
    if b != len(cells) - 1:
        return False
    # holes: flood the padded complement
    minx = min(x for x, _ in cells)
    maxx = max(x for x, _ in cells)
    miny = min(y for _, y in cells)
    maxy = max(y for _, y in cells)
    outside = set()
    start = (minx - 1, miny - 1)
    outside.add(start)
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in ORTH:
            nb = (x + dx, y + dy)
            if nb in outside or nb in cells:
                continue
            if not (minx - 1 <= nb[0] <= maxx + 1 and miny - 1 <= nb[1] <= maxy + 1):
                continue
            outside.add(nb)
            stack.append(nb)
    hole_cells = [
        (x, y)
        for x in range(minx, maxx + 1)
        for y in range(miny, maxy + 1)
        if (x, y) not in cells and (x, y) not in outside
    ]
    if len(hole_cells) != h0 - 1:
        return False
    hole_set = set(hole_cells)
    for x, y in hole_cells:  # area-1 means no two hole cells are adjacent
        if (x + 1, y) in hole_set or (x, y + 1) in hole_set:
            return False
    return True


def _delta_edges_ok(tiles: set, move: Move) -> bool:
    """O(1) precheck: the dual-edge count must land exactly on n' - 1."""

    def deg(cell, present):
        x, y = cell
        return sum(1 for dx, dy in ORTH if (x + dx, y + dy) in present)

    work = tiles
    delta = 0
    removed = set()
    if move.src is not None:
        delta -= deg(move.src, work)
        removed.add(move.src)
        # fill gains edges to tiles other than src and later removals
        x, y = move.fill
        for dx, dy in ORTH:
            nb = (x + dx, y + dy)
            if nb in work and nb != move.src:
                delta += 1
    r1, r2 = move.removals
    for cell in (r1, r2):
        x, y = cell
        d = 0
        for dx, dy in ORTH:
            nb = (x + dx, y + dy)
            if nb in removed:
                continue
            if nb in work or (move.src is not None and nb == move.fill):
                d += 1
        if move.src is not None and cell == move.fill:
            return False
        delta -= d
        removed.add(cell)
    # acyclic n-1 edges must become acyclic (n-2)-1 edges
    return delta == -2


def _candidate_moves(p: Polyomino, tiles: set, holes):
    """Deterministic stream of candidate moves, catalog patterns first.

    Holes near the outer boundary come first; for each hole the fill-from-
    adjacent-tile moves precede the pure removals, mirroring the push-in and
    indent-removal move pair, with a bounded search radius.
    """
    w, h_box = p.width, p.height

    def border_dist(cell):
        x, y = cell
        return min(x, y, w - 1 - x, h_box - 1 - y)

    hole_cells = sorted((min(comp) for comp in holes), key=lambda c: (border_dist(c), c[1], c[0]))
    for v in hole_cells:
        near3 = sorted(
            (t for t in tiles if _cheb(t, v) <= 3), key=lambda t: (_cheb(t, v), t[1], t[0])
        )
        near2 = [t for t in near3 if _cheb(t, v) <= 2]
        # push a nearby tile into the hole, then remove two others
        for src in near2:
            for i, t1 in enumerate(near3):
                if t1 == src:
                    continue
                for t2 in near3[i + 1 :]:
                    if t2 == src:
                        continue
                    yield Move(fill=v, src=src, removals=(t1, t2))
        # open the hole to the outside by removing two nearby tiles
        for i, t1 in enumerate(near2):
            for t2 in near2[i + 1 :]:
                yield Move(fill=None, src=None, removals=(t1, t2))


def _corner_tiles(tiles: set):
    """Low-degree tiles whose neighbours turn a corner (indented corners)."""
    out = []
    for cell in tiles:
        x, y = cell
        nbs = [(x + dx, y + dy) for dx, dy in ORTH if (x + dx, y + dy) in tiles]
        if len(nbs) == 1:
            out.append(cell)
        elif len(nbs) == 2:
            (x1, y1), (x2, y2) = nbs
            if x1 != x2 and y1 != y2:
                out.append(cell)
    out.sort(key=lambda c: (c[1], c[0]))
    return out


def _special_moves(p: Polyomino, tiles: set, holes):
    """Global fallback: relocate an indented corner tile into any enclosed
    hole and remove two other indented corner tiles."""
    corners = _corner_tiles(tiles)
    full_holes = sorted(
        min(comp)
        for comp in holes
        if all((min(comp)[0] + dx, min(comp)[1] + dy) in tiles for dx, dy in ORTH)
    )
    for v in full_holes:
        for src in corners:
            rest = [t for t in corners if t != src]
            for i, t1 in enumerate(rest):
                for t2 in rest[i + 1 :]:
                    yield Move(fill=v, src=src, removals=(t1, t2))


def dismantle_step(p: Polyomino):
    """Remove one hole and two tiles, preserving acyclicity and area-1 holes.

    Returns (new polyomino, executed move).  Raises NoStepFound with search
    statistics when no candidate passes the validity gate.
    """
    tiles, holes, _ = _shape_state(p)
    n0, h0 = len(tiles), len(holes)
    if h0 < 1:
        raise NoStepFound({"reason": "no holes"})
    stats = {"prechecked": 0, "validated": 0}
    for source in (_candidate_moves, _special_moves):
        for move in source(p, tiles, holes):
            stats["prechecked"] += 1
            if not _delta_edges_ok(tiles, move):
                continue
            stats["validated"] += 1
            cells = set(tiles)
            if move.src is not None:
                cells.remove(move.src)
                cells.add(move.fill)
            cells.discard(move.removals[0])
            cells.discard(move.removals[1])
            if len(cells) != n0 - 2:
                continue
            if _valid_after(cells, n0, h0):
                return from_cells(cells), move
    raise NoStepFound(stats)


def witness(h: int):
    """A polyomino with exactly h holes and g(h) tiles, plus its trace.

    Builds the crystal for the smallest threshold admitting h holes and
    dismantles it one hole at a time.
    """
    from .construct import crystal_for_threshold

    entry = g_entry(h)
    a = entry.alpha
    p = crystal_for_threshold(a)
    trace = DismantleTrace(start_key=free_key(p))
    steps = h_alpha(a) - h
    for _ in range(steps):
        p, move = dismantle_step(p)
        s = summarize(p)
        trace.steps.append(TraceStep(move=move, n=s.n, h=s.h, key=free_key(p)))
    s = summarize(p)
    if (s.n, s.h) != (entry.g, h):
        raise AssertionError(f"witness({h}) produced n={s.n}, h={s.h}, wanted n={entry.g}")
    return p, trace


# --- rearrangement and hole insertion ----------------------------------------


def rearrange(p: Polyomino, a: AlphaKind) -> Polyomino:
    """Template step for partially dismantled odd squares.

    Input: an odd-square crystal whose four corner holes have been removed.
    Output: a shape with one fewer hole and two fewer tiles that is acyclic,
    keeps every hole at area one, and still admits further dismantling moves
    (a rooted tree remains exposed).  The template is found by the gated move
    search rather than replayed from stored drawings; UnsupportedResidue
    reports the inputs where every strategy fails.
    """
    if a.kind != SQUARE or a.N % 2 == 0 or a.N < 13:
        raise UnsupportedResidue(f"rearrangement applies to odd squares N >= 13, got {a}")
    try:
        q, _ = dismantle_step(p)
    except NoStepFound as exc:
        raise UnsupportedResidue(f"no rearrangement found for N={a.N}: {exc}") from exc
    # the result must leave the dismantling process unstuck
    s = summarize(q)
    if not s.dual_acyclic or any(area != 1 for area in s.hole_areas):
        raise UnsupportedResidue(f"rearrangement broke structure for N={a.N}")
    if s.h >= 1:
        probe, _ = dismantle_step(q)  # raises NoStepFound if nothing is exposed
        del probe
    return q


def _rooted_pluses(tiles: set):
    """(center, root tile, outward direction) of every border-rooted plus."""
    out = []
    for x, y in sorted(tiles):
        if all((x + dx, y + dy) in tiles for dx, dy in ORTH):
            for dx, dy in ORTH:
                root = (x + 2 * dx, y + 2 * dy)
                beyond = (x + 3 * dx, y + 3 * dy)
                if root in tiles and beyond not in tiles:
                    out.append(((x, y), root, (dx, dy)))
    return out


def _plus3_gate(old_tiles, new_cells, old_areas, h0):
    if len(new_cells) != len(old_tiles) + 3:
        return None
    seed = next(iter(new_cells))
    seen = {seed}
    stack = [seed]
    while stack:
        x, y = stack.pop()
        for dx, dy in ORTH:
            nb = (x + dx, y + dy)
            if nb in new_cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(new_cells):
        return None
    p = Polyomino(frozenset(_norm(new_cells)), _checked=True)
    s = summarize(p)
    if s.h != h0 + 1 or not s.dual_acyclic:
        return None
    if sorted(s.hole_areas) != sorted(list(old_areas) + [1]):
        return None
    return from_cells(new_cells)


def _norm(cells):
    minx = min(x for x, _ in cells)
    miny = min(y for _, y in cells)
    return frozenset((x - minx, y - miny) for x, y in cells)


def insert_plus(p: Polyomino) -> Polyomino:
    """Add one hole using only three extra tiles, at a border-rooted plus.

    The transformation slides the side tile next to an indented corner into
    the corner and wraps three new tiles around the outside, enclosing the
    vacated cell as a fresh area-one hole.  Connectivity routes are preserved
    and no cycle is created; candidates failing the full gate are skipped.
    """
    tiles = set(p.cells)
    s0 = summarize(p)
    roots = _rooted_pluses(tiles)
    if not roots:
        raise NoRootedPlus("no plus is rooted at the outer boundary")
    for center, root, (dx, dy) in roots:
        for tx, ty in ((dy, dx), (-dy, -dx)):  # both directions along the border
            # walk from the root along the border to the first empty cell
            k = 1
            while (root[0] + k * tx, root[1] + k * ty) in tiles:
                k += 1
            if k < 3:
                continue  # no room for the vacated hole next to the corner
            dst = (root[0] + k * tx, root[1] + k * ty)
            src = (root[0] + (k - 1) * tx, root[1] + (k - 1) * ty)
            adds = [
                (root[0] + dx + j * tx, root[1] + dy + j * ty)
                for j in (k - 2, k - 1, k)
            ]
            if any(c in tiles for c in adds) or dst in tiles:
                continue
            new_cells = (tiles - {src}) | {dst} | set(adds)
            result = _plus3_gate(tiles, new_cells, s0.hole_areas, s0.h)
            if result is not None:
                return result
    # bounded fallback: local additions near each root, capped for determinism
    budget = 250_000
    for center, root, (dx, dy) in roots:
        bx, by = root
        window = sorted(
            (x, y)
            for x in range(bx - 3, bx + 4)
            for y in range(by - 3, by + 4)
            if (x, y) not in tiles
        )
        near_tiles = sorted(
            t for t in tiles if max(abs(t[0] - bx), abs(t[1] - by)) <= 2
        )
        for adds in combinations(window, 3):
            budget -= 1
            if budget <= 0:
                break
            result = _plus3_gate(tiles, tiles | set(adds), s0.hole_areas, s0.h)
            if result is not None:
                return result
        for src in near_tiles:
            for dst in window:
                if budget <= 0:
                    break
                base = (tiles - {src}) | {dst}
                for adds in combinations([c for c in window if c != dst], 3):
                    budget -= 1
                    if budget <= 0:
                        break
                    new_cells = base | set(adds)
                    if len(new_cells) != len(tiles) + 3:
                        continue
                    result = _plus3_gate(tiles, new_cells, s0.hole_areas, s0.h)
                    if result is not None:
                        return result
    raise NoRootedPlus("no three-tile insertion found at any rooted plus")
