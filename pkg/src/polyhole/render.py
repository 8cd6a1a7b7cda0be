"""SVG rendering of polyominoes and arrangements."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import FILLED, UNDET, from_polyomino
from .core import Polyomino, dual_graph, hole_graph, holes


@dataclass(frozen=True)
class RenderSpec:
    format: str = "svg"  # "ascii" or "svg"
    cell: int = 24  # cell edge length in SVG units
    palette: dict = field(
        default_factory=lambda: {
            "tile": "#444444",
            "hole": "#f2f2f2",
            "background": "#ffffff",
            "annotation": "#2e8540",
            "hole_annotation": "#cc2222",
        }
    )
    overlay: bool = False  # draw the dual and hole graphs


def render_svg(shape, spec: RenderSpec = RenderSpec()) -> str:
    """SVG document with tiles as unit squares; holes drawn distinctly.

    With overlay enabled, the dual graph is drawn in the annotation colour
    and the hole graph in the hole-annotation colour.
    """
    poly = shape if isinstance(shape, Polyomino) else None
    arr = from_polyomino(shape) if poly is not None else shape
    c = spec.cell
    w, h = arr.width * c, arr.height * c
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="{spec.palette["background"]}"/>',
    ]
    hole_cells = set()
    if poly is not None:
        for comp in holes(poly):
            hole_cells |= comp

    def rect(r, col, fill, extra=""):
        parts.append(
            f'<rect x="{col * c}" y="{r * c}" width="{c}" height="{c}" '
            f'fill="{fill}" stroke="{spec.palette["background"]}" '
            f'stroke-width="1"{extra}/>'
        )

    for r, row in enumerate(arr.rows):
        for col, ch in enumerate(row):
            y_up = arr.height - 1 - r
            if ch == FILLED:
                rect(r, col, spec.palette["tile"])
            elif ch == UNDET:
                rect(r, col, spec.palette["tile"], extra=' opacity="0.3"')
            elif poly is not None and (col, y_up) in hole_cells:
                rect(r, col, spec.palette["hole"])
    if spec.overlay and poly is not None:

        def center(cell):
            x, y = cell
            return (x + 0.5) * c, (arr.height - 1 - y + 0.5) * c

        dg = dual_graph(poly)
        order = poly.sorted_cells
        for u, v in dg.edges:
            (x1, y1), (x2, y2) = center(order[u]), center(order[v])
            parts.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="{spec.palette["annotation"]}" stroke-width="2"/>'
            )
        for cell in order:
            x, y = center(cell)
            parts.append(
                f'<circle cx="{x}" cy="{y}" r="{c / 8}" fill="{spec.palette["annotation"]}"/>'
            )
        comps = holes(poly)
        reps = [min(comp) for comp in comps]
        hg = hole_graph(poly)
        for u, v in hg.edges:
            (x1, y1), (x2, y2) = center(reps[u]), center(reps[v])
            parts.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="{spec.palette["hole_annotation"]}" stroke-width="2"/>'
            )
        for rep in reps:
            x, y = center(rep)
            parts.append(
                f'<circle cx="{x}" cy="{y}" r="{c / 8}" '
                f'fill="{spec.palette["hole_annotation"]}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
