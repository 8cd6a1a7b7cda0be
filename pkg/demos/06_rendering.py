"""
Rendering
=========

Shapes serialize to a text-grid format ('#' tile, '.' empty, '?' free) that
round-trips exactly, and to SVG with optional overlays for the adjacency
structure: tile-adjacency edges in green, corner-adjacent holes in red.
"""

from pathlib import Path

from polyhole.construct import r2, s0
from polyhole.io import parse_grid, render_ascii
from polyhole.render import RenderSpec, render_svg
from polyhole.transform import witness

out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)

# Text grids round-trip bit-exactly.
p = r2(1)
text = render_ascii(p)
assert parse_grid(text) == p
print(text)

# Plain SVG: tiles dark, holes pale.
(out / "s0_1.svg").write_text(render_svg(s0(1)))

# Overlay the dual graph and the hole graph on a five-hole witness.
w, _ = witness(5)
(out / "witness5_overlay.svg").write_text(
    render_svg(w, RenderSpec(overlay=True))
)
print(f"wrote {out / 's0_1.svg'}")
print(f"wrote {out / 'witness5_overlay.svg'}")
