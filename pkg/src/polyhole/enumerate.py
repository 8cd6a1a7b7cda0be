"""Exhaustive fixed/free polyomino enumeration stratified by hole count.

The growth enumeration visits every fixed polyomino of size <= n_max exactly
once: the first cell is pinned to the origin of a half-plane region, frontier
cells are pushed onto a shared untried stack, and a cell popped at one level
stays excluded from the whole subtree below it.  Hole counts come from the
Euler characteristic: a connected union of n closed unit squares with V
lattice vertices and E distinct unit edges has 1 - V + E - n holes, and V, E
are maintained incrementally as cells are placed and removed.

A fixed shape is counted as a free class exactly when its bitmask form equals
the lexicographic minimum over its 8 dihedral images, so each free class is
counted once without storing any shapes.

The hot kernel is flat array code, JIT-compiled with numba when available
and cross-checked against an independent set-based enumerator in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(**kwargs):
        return lambda fn: fn


HARD_CAP = 20

# fixed (translation-only) polyomino counts for n = 1.., used as self-checks
FIXED_COUNTS = (1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446, 135268, 505861)
# free polyomino counts for n = 1..
FREE_COUNTS = (1, 1, 2, 5, 12, 35, 108, 369, 1285, 4655, 17073, 63600)


def _growth_kernel(
    n_max,
    counts_fixed,
    counts_free,
    free_h_min,
    init_occupied,
    init_untried,
    init_excluded,
    count_from,
):
    """Core growth enumeration.  Counts shapes of size in (count_from, n_max].

    init_occupied: cells already placed (the subtree prefix), in placement
    order.  init_untried: the untried stack at that point.  init_excluded:
    cells reached but excluded for this subtree.  Free-class counting runs
    only for shapes with h >= free_h_min.
    """
    W = 2 * n_max + 1
    H = n_max + 1
    size = W * H
    occupied = np.zeros(size, dtype=np.uint8)
    reached = np.zeros(size, dtype=np.uint8)
    vertex_cnt = np.zeros((W + 1) * (H + 1), dtype=np.uint8)

    untried = np.empty(4 * size, dtype=np.int32)
    popped = np.empty(4 * size, dtype=np.int32)
    chosen = np.empty(n_max + 1, dtype=np.int32)
    added_base = np.empty(n_max + 1, dtype=np.int32)
    pbase = np.empty(n_max + 1, dtype=np.int32)
    state = np.empty(n_max + 1, dtype=np.int8)

    cx = np.empty(n_max, dtype=np.int64)
    cy = np.empty(n_max, dtype=np.int64)
    rows_a = np.empty(n_max + 1, dtype=np.int64)
    rows_b = np.empty(n_max + 1, dtype=np.int64)

    edges = 0
    verts = 0
    base_level = 0
    for i in range(init_occupied.shape[0]):
        cell = init_occupied[i]
        x = cell % W
        y = cell // W
        nb = 0
        if occupied[cell + 1]:
            nb += 1
        if cell - 1 >= 0 and occupied[cell - 1]:
            nb += 1
        if cell + W < size and occupied[cell + W]:
            nb += 1
        if cell - W >= 0 and occupied[cell - W]:
            nb += 1
        edges += 4 - nb
        for vdy in range(2):
            for vdx in range(2):
                vid = (y + vdy) * (W + 1) + (x + vdx)
                if vertex_cnt[vid] == 0:
                    verts += 1
                vertex_cnt[vid] += 1
        occupied[cell] = 1
        reached[cell] = 1
        chosen[base_level] = cell
        base_level += 1
    utop = 0
    for i in range(init_untried.shape[0]):
        untried[utop] = init_untried[i]
        reached[init_untried[i]] = 1
        utop += 1
    for i in range(init_excluded.shape[0]):
        reached[init_excluded[i]] = 1

    level = base_level
    ptop = 0
    pbase[level] = 0
    state[level] = 0

    while level >= base_level:
        if state[level] == 0:
            if utop == 0:
                while ptop > pbase[level]:
                    ptop -= 1
                    untried[utop] = popped[ptop]
                    utop += 1
                level -= 1
                continue
            utop -= 1
            cell = untried[utop]
            popped[ptop] = cell
            ptop += 1
            chosen[level] = cell
            x = cell % W
            y = cell // W
            nb = 0
            if occupied[cell + 1]:
                nb += 1
            if cell - 1 >= 0 and occupied[cell - 1]:
                nb += 1
            if cell + W < size and occupied[cell + W]:
                nb += 1
            if cell - W >= 0 and occupied[cell - W]:
                nb += 1
            edges += 4 - nb
            for vdy in range(2):
                for vdx in range(2):
                    vid = (y + vdy) * (W + 1) + (x + vdx)
                    if vertex_cnt[vid] == 0:
                        verts += 1
                    vertex_cnt[vid] += 1
            occupied[cell] = 1

            n = level + 1
            h = 1 - verts + edges - n
            if n > count_from:
                counts_fixed[n, h] += 1
                if h >= free_h_min:
                    minx = np.int64(2 * n_max)
                    miny = np.int64(2 * n_max)
                    maxx = np.int64(-1)
                    maxy = np.int64(-1)
                    for i in range(n):
                        ci = chosen[i]
                        xi = np.int64(ci % W)
                        yi = np.int64(ci // W)
                        cx[i] = xi
                        cy[i] = yi
                        if xi < minx:
                            minx = xi
                        if xi > maxx:
                            maxx = xi
                        if yi < miny:
                            miny = yi
                        if yi > maxy:
                            maxy = yi
                    w_box = maxx - minx + 1
                    h_box = maxy - miny + 1
                    for i in range(h_box):
                        rows_a[i] = 0
                    for i in range(n):
                        rows_a[cy[i] - miny] |= np.int64(1) << (cx[i] - minx)
                    is_min = True
                    for t in range(1, 8):
                        if t & 1:
                            tw = h_box
                            th = w_box
                        else:
                            tw = w_box
                            th = h_box
                        if th < h_box or (th == h_box and tw < w_box):
                            is_min = False
                            break
                        if th > h_box or tw > w_box:
                            continue
                        for i in range(th):
                            rows_b[i] = 0
                        for i in range(n):
                            xi = cx[i] - minx
                            yi = cy[i] - miny
                            if t & 1:
                                tmp = xi
                                xi = yi
                                yi = tmp
                            if t & 2:
                                xi = tw - 1 - xi
                            if t & 4:
                                yi = th - 1 - yi
                            rows_b[yi] |= np.int64(1) << xi
                        for i in range(th):
                            if rows_b[i] != rows_a[i]:
                                if rows_b[i] < rows_a[i]:
                                    is_min = False
                                break
                        if not is_min:
                            break
                    if is_min:
                        counts_free[n, h] += 1

            if n < n_max:
                added_base[level] = utop
                for d in range(4):
                    if d == 0:
                        nx = x + 1
                        ny = y
                    elif d == 1:
                        nx = x - 1
                        ny = y
                    elif d == 2:
                        nx = x
                        ny = y + 1
                    else:
                        nx = x
                        ny = y - 1
                    if ny < 0 or ny >= H or nx < 0 or nx >= W:
                        continue
                    if ny == 0 and nx < n_max:
                        continue
                    nid = ny * W + nx
                    if occupied[nid] == 0 and reached[nid] == 0:
                        reached[nid] = 1
                        untried[utop] = nid
                        utop += 1
                state[level] = 1
                level += 1
                pbase[level] = ptop
                state[level] = 0
                continue
            # leaf: undo immediately and keep popping at this level
            occupied[cell] = 0
            edges -= 4 - nb
            for vdy in range(2):
                for vdx in range(2):
                    vid = (y + vdy) * (W + 1) + (x + vdx)
                    vertex_cnt[vid] -= 1
                    if vertex_cnt[vid] == 0:
                        verts -= 1
            continue
        # state == 1: child subtree done; undo neighbour pushes and placement
        abase = added_base[level]
        while utop > abase:
            utop -= 1
            reached[untried[utop]] = 0
        cell = chosen[level]
        x = cell % W
        y = cell // W
        occupied[cell] = 0
        nb = 0
        if occupied[cell + 1]:
            nb += 1
        if cell - 1 >= 0 and occupied[cell - 1]:
            nb += 1
        if cell + W < size and occupied[cell + W]:
            nb += 1
        if cell - W >= 0 and occupied[cell - W]:
            nb += 1
        edges -= 4 - nb
        for vdy in range(2):
            for vdx in range(2):
                vid = (y + vdy) * (W + 1) + (x + vdx)
                vertex_cnt[vid] -= 1
                if vertex_cnt[vid] == 0:
                    verts -= 1
        state[level] = 0

    return 0


_growth_kernel_jit = njit(cache=True, nogil=True)(_growth_kernel) if HAVE_NUMBA else _growth_kernel

_EMPTY_I32 = np.empty(0, dtype=np.int32)


def _origin(n_max: int) -> int:
    return n_max  # cell (x=0, y=0) at index 0 * W + n_max


def _run_kernel(n_max, free_h_min=0, jit=True, prefix=None):
    counts_fixed = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
    counts_free = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
    kernel = _growth_kernel_jit if (jit and HAVE_NUMBA) else _growth_kernel
    if prefix is None:
        init_occ = _EMPTY_I32
        init_untried = np.array([_origin(n_max)], dtype=np.int32)
        init_excl = _EMPTY_I32
        count_from = 0
    else:
        init_occ, init_untried, init_excl, count_from = prefix
    kernel(
        n_max,
        counts_fixed,
        counts_free,
        free_h_min,
        init_occ,
        init_untried,
        init_excl,
        count_from,
    )
    return counts_fixed, counts_free


def _prefixes_at_depth(n_max: int, depth: int):
    """Enumerate subtree prefixes at the given depth plus the shallow counts.

    Returns (prefix_list, counts_fixed, counts_free) where the counts cover
    all shapes of size <= depth, and each prefix resumes one subtree.
    """
    W = 2 * n_max + 1
    H = n_max + 1
    counts_fixed = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
    counts_free = np.zeros((n_max + 1, n_max + 2), dtype=np.int64)
    prefixes = []

    def cell_xy(cell):
        return cell % W - n_max, cell // W

    def count_shape(cells_idx):
        pts = [cell_xy(c) for c in cells_idx]
        n = len(pts)
        p = _poly_holes(pts)
        counts_fixed[n, p] += 1
        if _is_canonical_min(pts):
            counts_free[n, p] += 1

    occupied_set: set[int] = set()

    def rec2(occupied, untried, reached):
        local = list(untried)
        popped = []
        while local:
            cell = local.pop()
            popped.append(cell)
            occupied.append(cell)
            occupied_set.add(cell)
            count_shape(occupied)
            x, y = cell % W, cell // W
            added = []
            for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if ny < 0 or ny >= H or nx < 0 or nx >= W:
                    continue
                if ny == 0 and nx < n_max:
                    continue
                nid = ny * W + nx
                if nid not in reached:
                    reached.add(nid)
                    local.append(nid)
                    added.append(nid)
            if len(occupied) == depth:
                # snapshot a subtree prefix; deeper sizes enumerated later
                untried_now = set(local)
                prefixes.append(
                    (
                        np.array(occupied, dtype=np.int32),
                        np.array(local, dtype=np.int32),
                        np.array(
                            sorted(
                                c
                                for c in reached
                                if c not in occupied_set and c not in untried_now
                            ),
                            dtype=np.int32,
                        ),
                        depth,
                    )
                )
            else:
                rec2(occupied, local, reached)
            for nid in reversed(added):
                local.pop()
                reached.discard(nid)
            occupied_set.discard(cell)
            occupied.pop()
        for cell in reversed(popped):
            local.append(cell)
        untried[:] = local

    origin = _origin(n_max)
    rec2([], [origin], {origin})
    return prefixes, counts_fixed, counts_free


def _poly_holes(pts) -> int:
    """Euler-characteristic hole count of an edge-connected cell set."""
    cells = set(pts)
    n = len(cells)
    edges = sum(1 for x, y in cells if (x + 1, y) in cells) + sum(
        1 for x, y in cells if (x, y + 1) in cells
    )
    verts = len(
        {
            (x + dx, y + dy)
            for x, y in cells
            for dx in (0, 1)
            for dy in (0, 1)
        }
    )
    total_edges = 4 * n - edges
    return 1 - verts + total_edges - n


def _is_canonical_min(pts) -> bool:
    minx = min(x for x, _ in pts)
    miny = min(y for _, y in pts)
    maxx = max(x for x, _ in pts)
    maxy = max(y for _, y in pts)
    w_box = maxx - minx + 1
    h_box = maxy - miny + 1
    rows_a = [0] * h_box
    for x, y in pts:
        rows_a[y - miny] |= 1 << (x - minx)
    key_a = (h_box, w_box, tuple(rows_a))
    for t in range(1, 8):
        tw, th = (h_box, w_box) if t & 1 else (w_box, h_box)
        rows_b = [0] * th
        for x, y in pts:
            xi, yi = x - minx, y - miny
            if t & 1:
                xi, yi = yi, xi
            if t & 2:
                xi = tw - 1 - xi
            if t & 4:
                yi = th - 1 - yi
            rows_b[yi] |= 1 << xi
        if (th, tw, tuple(rows_b)) < key_a:
            return False
    return True


@dataclass(frozen=True)
class CensusTable:
    """Free polyomino counts by (n, h), with derived crystallization data."""

    max_n: int
    rows: dict  # (n, h) -> free count
    fixed_rows: dict  # (n, h) -> fixed count

    @property
    def min_n_for_h(self) -> dict:
        out = {}
        for (n, h), cnt in sorted(self.rows.items()):
            if cnt > 0 and h not in out:
                out[h] = n
        return out

    @property
    def crystal_counts(self) -> dict:
        firsts = self.min_n_for_h
        return {h: self.rows[(n, h)] for h, n in firsts.items() if h > 0}

    def free_count_at(self, n: int) -> int:
        return sum(cnt for (nn, _), cnt in self.rows.items() if nn == n)

    def merged_with(self, other: "CensusTable") -> "CensusTable":
        rows = dict(self.rows)
        for key, cnt in other.rows.items():
            rows[key] = rows.get(key, 0) + cnt
        fixed = dict(self.fixed_rows)
        for key, cnt in other.fixed_rows.items():
            fixed[key] = fixed.get(key, 0) + cnt
        return CensusTable(max(self.max_n, other.max_n), rows, fixed)


def _tables_from_arrays(n_max, counts_fixed, counts_free) -> CensusTable:
    rows = {}
    fixed_rows = {}
    for n in range(1, n_max + 1):
        for h in range(n_max + 2):
            if counts_fixed[n, h]:
                fixed_rows[(n, h)] = int(counts_fixed[n, h])
            if counts_free[n, h]:
                rows[(n, h)] = int(counts_free[n, h])
    return CensusTable(n_max, rows, fixed_rows)


def census(n_max: int, threads: int = 1, free_h_min: int = 0) -> CensusTable:
    """Count free polyominoes by (n, h) for all n <= n_max.

    threads > 1 splits the growth tree at a fixed depth into independent
    subtrees; merging is order-independent, so parallel and serial runs
    produce identical tables.
    """
    if not 1 <= n_max <= HARD_CAP:
        raise CapExceeded(f"census cap is {HARD_CAP}, requested {n_max}")
    if threads <= 1 or n_max <= 7:
        cf, cfree = _run_kernel(n_max, free_h_min=free_h_min)
        return _tables_from_arrays(n_max, cf, cfree)

    depth = min(6, n_max - 1)
    prefixes, cf, cfree = _prefixes_at_depth(n_max, depth)
    # shallow counts honour free_h_min semantics for consistency
    if free_h_min > 0:
        shallow_free = np.zeros_like(cfree)
        for n in range(cf.shape[0]):
            for h in range(free_h_min, cf.shape[1]):
                shallow_free[n, h] = cfree[n, h]
        cfree = shallow_free
    from concurrent.futures import ThreadPoolExecutor

    def work(prefix):
        return _run_kernel(n_max, free_h_min=free_h_min, prefix=prefix)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for part_fixed, part_free in pool.map(work, prefixes):
            cf += part_fixed
            cfree += part_free
    return _tables_from_arrays(n_max, cf, cfree)


def enumerate_fixed(n_max: int, visitor=None):
    """Visit every fixed polyomino with at most n_max cells, exactly once.

    visitor(cells) receives a tuple of (x, y) pairs; the return value is the
    number of shapes visited.  With no visitor, just counts them.
    """
    if not 1 <= n_max <= HARD_CAP:
        raise CapExceeded(f"enumeration cap is {HARD_CAP}, requested {n_max}")
    count = 0
    W = 2 * n_max + 1
    H = n_max + 1
    origin = _origin(n_max)

    occupied: list[int] = []
    reached = {origin}

    def rec(untried):
        nonlocal count
        local = list(untried)
        popped = []
        while local:
            cell = local.pop()
            popped.append(cell)
            occupied.append(cell)
            count += 1
            if visitor is not None:
                visitor(tuple((c % W - n_max, c // W) for c in occupied))
            if len(occupied) < n_max:
                x, y = cell % W, cell // W
                added = []
                for nx, ny in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if ny < 0 or ny >= H or nx < 0 or nx >= W:
                        continue
                    if ny == 0 and nx < n_max:
                        continue
                    nid = ny * W + nx
                    if nid not in reached:
                        reached.add(nid)
                        local.append(nid)
                        added.append(nid)
                rec(local)
                for nid in reversed(added):
                    local.pop()
                    reached.discard(nid)
            occupied.pop()

    rec([origin])
    return count


def naive_free_polyominoes(n: int) -> dict:
    """Independent oracle: all free polyominoes with n cells, by brute growth
    with canonical-form dedup.  Returns {canonical cells: hole count}."""
    if n > 9:
        raise CapExceeded("naive oracle is for small n only")
    shapes = {((0, 0),)}
    for _ in range(n - 1):
        grown = set()
        for shape in shapes:
            cells = set(shape)
            for x, y in shape:
                for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if nb not in cells:
                        grown.add(_canonical_cells(cells | {nb}))
        shapes = grown
    return {shape: _poly_holes(shape) for shape in shapes}


def _canonical_cells(cells) -> tuple:
    best = None
    pts = list(cells)
    for t in range(8):
        out = []
        for x, y in pts:
            xi, yi = (y, x) if t & 1 else (x, y)
            if t & 2:
                xi = -xi
            if t & 4:
                yi = -yi
            out.append((xi, yi))
        minx = min(x for x, _ in out)
        miny = min(y for _, y in out)
        key = tuple(sorted((x - minx, y - miny) for x, y in out))
        if best is None or key < best:
            best = key
    return best


def oracle_g(h_target: int, n_cap: int, threads: int = 1):
    """Smallest n <= n_cap with a polyomino of exactly h_target holes, or None.

    Starts the scan at the closed-form lower bound m(h) and stops at the
    first n whose census row is nonempty, so small answers never enumerate
    anywhere near the cap.
    """
    from .bounds import m as m_lower

    if n_cap > HARD_CAP:
        raise CapExceeded(f"cap is {HARD_CAP}")
    n = max(1, m_lower(h_target)) if h_target >= 1 else 1
    while n <= n_cap:
        table = census(n, threads=threads, free_h_min=h_target)
        hit = [nn for (nn, hh), cnt in table.rows.items() if hh == h_target and cnt > 0]
        if hit:
            return min(hit)
        n += 1
    return None


@dataclass(frozen=True)
class InvariantReport:
    checked: int
    efficiently_structured: int
    violations: tuple


def verify_invariants(n_max: int = 12, progress=None) -> InvariantReport:
    """Assert the perimeter/bound identities on every fixed polyomino.

    Checks, per shape: 4n = 2b + p; p_o >= p_min(n + h); h <= M(n, h); the
    hole graph is acyclic; if M(n, h) = h + 1/2 then exactly one of {single
    dual cycle, single area-2 hole, p_o = p_min + 2} holds; and efficiently
    structured shapes with a rectangular interior keep all holes on the white
    checkerboard class.  Returns the first violation, if any, with a dump.
    """
    from fractions import Fraction

    from .bounds import M, p_min

    violations = []
    stats = {"checked": 0, "efficient": 0}

    def visit(pts):
        stats["checked"] += 1
        cells = set(pts)
        n = len(cells)
        b = sum(1 for x, y in cells if (x + 1, y) in cells) + sum(
            1 for x, y in cells if (x, y + 1) in cells
        )
        p = 4 * n - 2 * b
        minx = min(x for x, _ in cells)
        miny = min(y for _, y in cells)
        maxx = max(x for x, _ in cells)
        maxy = max(y for _, y in cells)
        # flood the complement from the pad ring
        outside = set()
        stack = [(minx - 1, miny - 1)]
        outside.add((minx - 1, miny - 1))
        while stack:
            x, y = stack.pop()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in outside or nb in cells:
                    continue
                if not (minx - 1 <= nb[0] <= maxx + 1 and miny - 1 <= nb[1] <= maxy + 1):
                    continue
                outside.add(nb)
                stack.append(nb)
        hole_cells = {
            (x, y)
            for x in range(minx, maxx + 1)
            for y in range(miny, maxy + 1)
            if (x, y) not in cells and (x, y) not in outside
        }
        # split holes into 4-connected components
        comps = []
        left = set(hole_cells)
        while left:
            seed = left.pop()
            comp = {seed}
            stack = [seed]
            while stack:
                x, y = stack.pop()
                for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if nb in left:
                        left.remove(nb)
                        comp.add(nb)
                        stack.append(nb)
            comps.append(comp)
        h = len(comps)
        p_o = sum(
            1
            for x, y in cells
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
            if nb in outside
        )

        def fail(rule):
            violations.append((rule, tuple(sorted(cells))))

        if p_o < p_min(n + h):
            fail("p_o >= p_min(n+h)")
        bound = M(n, h)
        if bound < h:
            fail("h <= M(n,h)")
        # hole graph acyclicity via union-find over corner adjacency
        owner = {}
        for i, comp in enumerate(comps):
            for cellc in comp:
                owner[cellc] = i
        parent = list(range(h))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        acyclic = True
        seen_edges = set()
        for i, comp in enumerate(comps):
            for x, y in comp:
                for dx, dy in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                    j = owner.get((x + dx, y + dy))
                    if j is not None and j != i and (min(i, j), max(i, j)) not in seen_edges:
                        seen_edges.add((min(i, j), max(i, j)))
                        ri, rj = find(i), find(j)
                        if ri == rj:
                            acyclic = False
                        else:
                            parent[ri] = rj
        if not acyclic:
            fail("hole graph acyclic")
        if bound == Fraction(2 * h + 1, 2):
            conds = 0
            if b == n:  # exactly one extra dual edge
                conds += 1
            areas = sorted(len(c) for c in comps)
            if areas and areas[-1] == 2 and all(a == 1 for a in areas[:-1]):
                conds += 1
            if p_o == p_min(n + h) + 2:
                conds += 1
            if conds != 1:
                fail("M=h+1/2 trichotomy")
        if bound == h:
            stats["efficient"] += 1
            # checkerboard spot check for rectangular interiors
            interior = {
                (x, y)
                for x in range(minx + 1, maxx)
                for y in range(miny + 1, maxy)
                if not any(
                    nb in outside
                    for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
                )
                and ((x, y) in cells or (x, y) in hole_cells)
            }
            if interior:
                ixs = [x for x, _ in interior]
                iys = [y for _, y in interior]
                rect = (max(ixs) - min(ixs) + 1) * (max(iys) - min(iys) + 1)
                if rect == len(interior) and hole_cells:
                    # all holes must share one checkerboard class (the class
                    # holding an empty interior corner, up to symmetry)
                    classes = {(hx + hy) % 2 for hx, hy in hole_cells}
                    if len(classes) > 1:
                        fail("holes on one checkerboard class")
        if progress is not None and stats["checked"] % 100000 == 0:
            progress(stats["checked"])

    enumerate_fixed(n_max, visit)
    return InvariantReport(stats["checked"], stats["efficient"], tuple(violations[:3]))
