"""Text-grid parsing and rendering shared across the library.

Grid format: equal-length lines over '#' (filled), '.' (empty) and '?'
(undetermined); rows run top to bottom, i.e. decreasing y.  A grid with any
'?' parses as an Arrangement, otherwise as a Polyomino.
"""

from __future__ import annotations

from .arrangement import Arrangement, from_polyomino, from_rows
from .core import Polyomino
from .errors import IllegalChar, RaggedRows

ALPHABET = set("#.?")


def parse_grid(text: str):
    """Polyomino (no '?') or Arrangement from the text-grid format."""
    lines = [line for line in text.splitlines() if line.strip() != ""]
    if not lines:
        raise RaggedRows("empty grid")
    width = len(lines[0])
    for line in lines:
        if len(line) != width:
            raise RaggedRows(f"row lengths differ: {len(line)} vs {width}")
        bad = set(line) - ALPHABET
        if bad:
            raise IllegalChar(f"unexpected characters {sorted(bad)}")
    arr = from_rows(lines)
    if arr.undetermined_count():
        return arr
    return arr.to_polyomino()


def parse_polyomino(text: str) -> Polyomino:
    out = parse_grid(text)
    if isinstance(out, Arrangement):
        raise IllegalChar("'?' is not allowed when a polyomino is requested")
    return out


def render_ascii(shape) -> str:
    """Text-grid form; round-trips bit-exactly through parse_grid."""
    if isinstance(shape, Polyomino):
        shape = from_polyomino(shape)
    return str(shape)
