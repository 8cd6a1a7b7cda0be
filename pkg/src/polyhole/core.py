"""Lattice model: polyominoes and the topological measurements taken on them.

Coordinates are (x, y) with y increasing upward.  A polyomino is stored in
translation-canonical form: min x = min y = 0 over its cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Disconnected, EmptyInput, InternalInconsistency

Cell = tuple[int, int]

ORTH = ((1, 0), (-1, 0), (0, 1), (0, -1))
DIAG = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _translate_to_origin(cells) -> frozenset[Cell]:
    min_x = min(x for x, _ in cells)
    min_y = min(y for _, y in cells)
    if min_x == 0 and min_y == 0:
        return frozenset(cells)
    return frozenset((x - min_x, y - min_y) for x, y in cells)


def _components(cells: frozenset[Cell]) -> list[set[Cell]]:
    """Edge-connected components of a cell set."""
    remaining = set(cells)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            x, y = frontier.pop()
            for dx, dy in ORTH:
                nb = (x + dx, y + dy)
                if nb in remaining:
                    remaining.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        comps.append(comp)
    return comps


class Polyomino:
    """An edge-connected set of unit cells, translated so min x = min y = 0."""

    __slots__ = ("cells", "sorted_cells", "width", "height")

    def __init__(self, cells: frozenset[Cell], _checked: bool = False):
        if not _checked:
            raise TypeError("use from_cells() to build a Polyomino")
        self.cells = cells
        # row-major order: by y, then x
        self.sorted_cells = tuple(sorted(cells, key=lambda c: (c[1], c[0])))
        self.width = max(x for x, _ in cells) + 1
        self.height = max(y for _, y in cells) + 1

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cells

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyomino) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Polyomino(n={len(self.cells)}, {self.width}x{self.height})"


def from_cells(cells) -> Polyomino:
    """Build a translation-canonical polyomino, validating connectivity."""
    cells = list(cells)
    if not cells:
        raise EmptyInput("no cells given")
    normalized = _translate_to_origin(cells)
    comps = _components(normalized)
    if len(comps) > 1:
        raise Disconnected(comps)
    return Polyomino(normalized, _checked=True)


def _dihedral_images(cells) -> list[frozenset[Cell]]:
    """All 8 rotation/reflection images, each translated to the origin."""
    images = []
    pts = list(cells)
    for sx in (1, -1):
        for sy in (1, -1):
            images.append(_translate_to_origin([(sx * x, sy * y) for x, y in pts]))
            images.append(_translate_to_origin([(sx * y, sy * x) for x, y in pts]))
    return images


def canonical_free(p: Polyomino) -> Polyomino:
    """Lexicographically minimal representative of the 8 dihedral images."""
    best = None
    for image in _dihedral_images(p.cells):
        key = tuple(sorted(image, key=lambda c: (c[1], c[0])))
        if best is None or key < best:
            best = key
    return Polyomino(frozenset(best), _checked=True)


def free_key(p: Polyomino) -> tuple[Cell, ...]:
    """Hashable canonical-form key, cheaper than building a new Polyomino."""
    return min(
        tuple(sorted(image, key=lambda c: (c[1], c[0])))
        for image in _dihedral_images(p.cells)
    )


def complement_components(p: Polyomino):
    """Flood-fill the complement inside the padded bounding rectangle.

    Returns (outside, holes): the unbounded component clipped to the pad
    rectangle, and the list of bounded components (each a set of cells).
    The one-cell pad ring guarantees the outside is a single component.
    """
    cells = p.cells
    w, h = p.width, p.height
    empties = {
        (x, y)
        for x in range(-1, w + 1)
        for y in range(-1, h + 1)
        if (x, y) not in cells
    }
    outside = set()
    frontier = [(-1, -1)]
    empties.discard((-1, -1))
    outside.add((-1, -1))
    while frontier:
        x, y = frontier.pop()
        for dx, dy in ORTH:
            nb = (x + dx, y + dy)
            if nb in empties:
                empties.remove(nb)
                outside.add(nb)
                frontier.append(nb)
    holes = _components(frozenset(empties)) if empties else []
    holes.sort(key=lambda comp: min(comp))
    return outside, holes


def holes(p: Polyomino) -> list[set[Cell]]:
    """Bounded connected components of the complement, one set per hole."""
    return complement_components(p)[1]


def dual_edge_count(p: Polyomino) -> int:
    """Number of shared edges between tiles (edges of the dual graph)."""
    cells = p.cells
    return sum(1 for x, y in cells if (x + 1, y) in cells) + sum(
        1 for x, y in cells if (x, y + 1) in cells
    )


@dataclass(frozen=True)
class TopologySummary:
    n: int
    h: int
    hole_areas: tuple[int, ...]  # sorted multiset
    b: int  # dual-graph edges
    p: int  # total perimeter edges
    p_o: int  # outer perimeter edges
    p_h: int  # hole perimeter edges
    total_area: int
    dual_acyclic: bool
    hole_graph_acyclic: bool


def summarize(p: Polyomino) -> TopologySummary:
    """All topological measurements used by the closed-form bounds."""
    n = len(p)
    b = dual_edge_count(p)
    perim = 4 * n - 2 * b
    outside, hole_comps = complement_components(p)
    p_o = 0
    for x, y in p.cells:
        for dx, dy in ORTH:
            if (x + dx, y + dy) in outside:
                p_o += 1
    p_h = perim - p_o
    areas = tuple(sorted(len(c) for c in hole_comps))
    hg = hole_graph_from_components(hole_comps)
    summary = TopologySummary(
        n=n,
        h=len(hole_comps),
        hole_areas=areas,
        b=b,
        p=perim,
        p_o=p_o,
        p_h=p_h,
        total_area=n + sum(areas),
        dual_acyclic=(b == n - 1),
        hole_graph_acyclic=_is_forest(len(hole_comps), hg.edges),
    )
    if summary.p != summary.p_o + summary.p_h or 4 * n != 2 * b + perim:
        raise InternalInconsistency("perimeter bookkeeping broke")
    return summary


@dataclass(frozen=True)
class Graph:
    """Tiny adjacency-list graph used for the dual and hole graphs."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def _is_forest(vertex_count: int, edges) -> bool:
    parent = list(range(vertex_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def hole_graph_from_components(hole_comps) -> Graph:
    """Edges between holes whose cells share a lattice vertex (corner-adjacent)."""
    owner = {}
    for i, comp in enumerate(hole_comps):
        for cell in comp:
            owner[cell] = i
    edges = set()
    for i, comp in enumerate(hole_comps):
        for x, y in comp:
            for dx, dy in DIAG:
                j = owner.get((x + dx, y + dy))
                if j is not None and j != i:
                    edges.add((min(i, j), max(i, j)))
    return Graph(len(hole_comps), tuple(sorted(edges)))


def hole_graph(p: Polyomino) -> Graph:
    return hole_graph_from_components(holes(p))


def dual_graph(p: Polyomino) -> Graph:
    index = {cell: i for i, cell in enumerate(p.sorted_cells)}
    edges = []
    for cell, i in index.items():
        x, y = cell
        for nb in ((x + 1, y), (x, y + 1)):
            j = index.get(nb)
            if j is not None:
                edges.append((min(i, j), max(i, j)))
    return Graph(len(index), tuple(sorted(edges)))


def boundary_and_interior(p: Polyomino):
    """Split the bounding rectangle into the boundary layer and the interior.

    The boundary layer is the set of tiles with at least one outer-perimeter
    edge.  The interior is every bounding-rectangle space (filled or hole)
    that is neither in the boundary layer nor part of the outside.
    """
    outside, hole_comps = complement_components(p)
    boundary = set()
    for x, y in p.cells:
        if any((x + dx, y + dy) in outside for dx, dy in ORTH):
            boundary.add((x, y))
    hole_cells = set().union(*hole_comps) if hole_comps else set()
    interior = (p.cells - boundary) | hole_cells
    return boundary, interior


def p_min_perimeter(area: int) -> int:
    """Minimum outer perimeter of any polyomino of the given total area.

    Exact integer arithmetic: 2 * ceil(2 * sqrt(area)) computed as the
    smallest even c with (c/2)^2 >= ... via integer square root.
    """
    from .bounds import p_min

    return p_min(area)


@dataclass(frozen=True)
class EfficiencyReport:
    efficient: bool
    reasons: tuple[str, ...] = field(default_factory=tuple)


def is_efficiently_structured(p: Polyomino, summary: TopologySummary | None = None):
    """True iff acyclic + every hole has area one + minimal outer perimeter.

    Cross-checked against the equivalent h == M(n, h) test; disagreement is
    an internal error, not a property of the input.
    """
    from .bounds import M, p_min

    s = summary if summary is not None else summarize(p)
    reasons = []
    if not s.dual_acyclic:
        reasons.append("dual cycle")
    if any(a != 1 for a in s.hole_areas):
        reasons.append("hole area exceeds one")
    if s.p_o != p_min(s.n + s.h):
        reasons.append("outer perimeter")
    direct = not reasons
    via_bound = M(s.n, s.h) == s.h
    if direct != via_bound:
        raise InternalInconsistency(
            f"direct efficiency check ({direct}) disagrees with h == M(n,h) ({via_bound}) "
            f"for n={s.n}, h={s.h}"
        )
    return EfficiencyReport(direct, tuple(reasons))
