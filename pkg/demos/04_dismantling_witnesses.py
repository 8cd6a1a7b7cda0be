"""
Dismantling: a minimal witness for every hole count
===================================================

Between thresholds, the minimum tile count drops by exactly two per hole.
The dismantling search removes one hole and two tiles per step while keeping
the shape acyclic with unit holes, turning each threshold crystal into
witnesses for every h below it.
"""

from polyhole.bounds import g
from polyhole.core import summarize
from polyhole.io import render_ascii
from polyhole.transform import insert_plus, witness

# A witness is a polyomino with exactly h holes and g(h) tiles.
for h in (4, 8, 12, 44):
    p, trace = witness(h)
    s = summarize(p)
    assert (s.n, s.h) == (g(h).g, h)
    print(f"witness({h}): {s.n} tiles after {len(trace.steps)} dismantling steps")

# The trace records each move; replaying it from the threshold crystal
# reproduces the same shape.
p, trace = witness(12)
print("\nmoves for h=12:")
for step in trace.steps:
    print(f"  {step.move.describe()}  ->  n={step.n}, h={step.h}")
print()
print(render_ascii(p))

# Crossing a threshold upward costs three tiles: slide the side tile next to
# an indented corner into the corner and wrap three tiles around the outside,
# trapping a fresh hole.
p9, _ = witness(9)
p10 = insert_plus(p9)
s = summarize(p10)
print(f"\ninsert_plus on the 9-hole witness: n={s.n}, h={s.h} (g(10) = {g(10).g})")
print(render_ascii(p10))
