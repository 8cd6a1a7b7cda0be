"""Polyominoes with maximally many holes.

The library computes the minimum number of tiles needed for a polyomino with
h holes, builds explicit minimal ("crystallized") polyominoes for every h,
transforms them by expansion/compression and dismantling, and verifies the
closed forms against brute-force enumeration.
"""

from . import arrangement, bounds, construct, core, enumerate, errors, io, render, transform

__all__ = [
    "arrangement",
    "bounds",
    "construct",
    "core",
    "enumerate",
    "errors",
    "io",
    "render",
    "transform",
]
