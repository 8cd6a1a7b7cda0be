import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyhole.core import (
    boundary_and_interior,
    canonical_free,
    dual_edge_count,
    dual_graph,
    from_cells,
    hole_graph,
    holes,
    is_efficiently_structured,
    summarize,
)
from polyhole.errors import Disconnected, EmptyInput


def test_from_cells_translates_to_origin():
    p = from_cells([(5, 5)])
    assert p.cells == frozenset({(0, 0)})


def test_from_cells_rejects_empty_and_disconnected():
    with pytest.raises(EmptyInput):
        from_cells([])
    with pytest.raises(Disconnected) as exc:
        from_cells([(0, 0), (2, 0)])
    assert len(exc.value.components) == 2


def test_ring7_is_valid(ring7):
    assert len(ring7) == 7


def test_canonical_free_collapses_rotations():
    l_tromino = [(0, 0), (0, 1), (1, 0)]
    images = [
        [(0, 0), (0, 1), (1, 1)],
        [(0, 0), (1, 0), (1, 1)],
        [(0, 1), (1, 1), (1, 0)],
    ]
    base = canonical_free(from_cells(l_tromino))
    for img in images:
        assert canonical_free(from_cells(img)) == base


def test_canonical_free_fixes_symmetric_shapes():
    square = from_cells([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert canonical_free(square) == square


def test_canonical_free_single_orbit(stair11):
    reps = set()
    for t in range(8):
        cells = []
        for x, y in stair11.cells:
            xi, yi = (y, x) if t & 1 else (x, y)
            if t & 2:
                xi = -xi
            if t & 4:
                yi = -yi
            cells.append((xi, yi))
        reps.add(canonical_free(from_cells(cells)))
    assert len(reps) == 1


def test_holes_simply_connected():
    square = from_cells([(x, y) for x in range(2) for y in range(2)])
    assert holes(square) == []


def test_holes_ring7(ring7):
    comps = holes(ring7)
    assert len(comps) == 1 and len(comps[0]) == 1


def test_holes_star19(star19):
    comps = holes(star19)
    assert len(comps) == 5
    assert all(len(c) == 1 for c in comps)


def test_summarize_stair11(stair11):
    s = summarize(stair11)
    assert s.h == 2 and s.n == 11
    assert (s.p, s.p_o, s.p_h) == (24, 16, 8)


def test_summarize_three_hole_crystal():
    # the published perimeter numbers p=30, p_o=18, p_h=12 belong to the
    # 14-tile crystal with three unit holes
    from polyhole.construct import three_hole_crystal

    s = summarize(three_hole_crystal())
    assert (s.n, s.h) == (14, 3)
    assert (s.p, s.p_o, s.p_h) == (30, 18, 12)


def test_summarize_single_tile():
    s = summarize(from_cells([(0, 0)]))
    assert (s.n, s.h, s.b, s.p, s.p_o, s.p_h) == (1, 0, 0, 4, 4, 0)
    assert s.dual_acyclic and s.hole_graph_acyclic


def test_hole_graph_star(star19):
    g = hole_graph(star19)
    assert g.vertex_count == 5
    assert len(g.edges) == 4
    # a star: one hole participates in every edge
    from collections import Counter

    degrees = Counter()
    for u, v in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    assert max(degrees.values()) == 4


def test_hole_graph_single_hole(ring7):
    g = hole_graph(ring7)
    assert g.vertex_count == 1 and g.edges == ()


def test_dual_graph_counts(stair11):
    g = dual_graph(stair11)
    assert g.vertex_count == 11
    assert len(g.edges) == dual_edge_count(stair11)


def test_boundary_and_interior_full_squares():
    three = from_cells([(x, y) for x in range(3) for y in range(3)])
    boundary, interior = boundary_and_interior(three)
    assert len(boundary) == 8 and len(interior) == 1
    five = from_cells([(x, y) for x in range(5) for y in range(5)])
    boundary, interior = boundary_and_interior(five)
    assert len(boundary) == 16 and len(interior) == 9


def test_boundary_and_interior_ring7(ring7):
    boundary, interior = boundary_and_interior(ring7)
    assert len(boundary) == 7  # every tile touches the outer perimeter
    assert interior == {(1, 1)}  # the hole; the missing corner is outside


def test_efficiency_ring7(ring7):
    assert is_efficiently_structured(ring7).efficient


def test_efficiency_loose23(loose23):
    s = summarize(loose23)
    assert (s.n, s.h) == (23, 6)
    report = is_efficiently_structured(loose23, s)
    assert not report.efficient
    assert report.reasons == ("outer perimeter",)


def test_efficiency_2x2_square():
    report = is_efficiently_structured(from_cells([(0, 0), (0, 1), (1, 0), (1, 1)]))
    assert not report.efficient
    assert report.reasons == ("dual cycle",)


# --- property tests ----------------------------------------------------------

connected_shape = st.integers(0, 3)


@st.composite
def random_polyomino(draw, max_cells=14):
    n = draw(st.integers(min_value=1, max_value=max_cells))
    cells = [(0, 0)]
    seen = {(0, 0)}
    for _ in range(n - 1):
        x, y = cells[draw(st.integers(0, len(cells) - 1))]
        dx, dy = ((1, 0), (-1, 0), (0, 1), (0, -1))[draw(connected_shape)]
        cell = (x + dx, y + dy)
        if cell not in seen:
            seen.add(cell)
            cells.append(cell)
    return from_cells(cells)


@settings(max_examples=250, deadline=None)
@given(random_polyomino())
def test_summary_identities(p):
    s = summarize(p)
    assert 4 * s.n == 2 * s.b + s.p
    assert s.p == s.p_o + s.p_h
    assert s.b >= s.n - 1
    assert s.hole_graph_acyclic
    assert all(a >= 1 for a in s.hole_areas)
    assert s.h <= s.p_h / 4


@settings(max_examples=120, deadline=None)
@given(random_polyomino())
def test_canonical_free_idempotent_and_invariant(p):
    c = canonical_free(p)
    assert canonical_free(c) == c
    for t in range(8):
        cells = []
        for x, y in p.cells:
            xi, yi = (y, x) if t & 1 else (x, y)
            if t & 2:
                xi = -xi
            if t & 4:
                yi = -yi
            cells.append((xi, yi))
        q = from_cells(cells)
        assert canonical_free(q) == c
        sq, sp = summarize(q), summarize(p)
        assert (sq.n, sq.h, sq.hole_areas) == (sp.n, sp.h, sp.hole_areas)
