"""
Expansion and compression
=========================

Expansion doubles an N x N arrangement to (2N-1) x (2N-1): the boundary ring
keeps its corner pattern, a forced checkerboard fills the new interior, and
the old interior re-appears on the free cells.  Compression is its exact
inverse.  Iterating expansion from the 7-tile seed produces the doubling
sequence of crystals with (4^l - 1)/3 holes.
"""

from polyhole.arrangement import from_polyomino
from polyhole.construct import one_hole_crystal
from polyhole.core import summarize
from polyhole.transform import compress, expand, is_compressible

arr = from_polyomino(one_hole_crystal())
print("the seed:")
print(arr, "\n")

levels = [arr]
for level in range(2, 6):
    arr = expand(arr)
    levels.append(arr)
    p = arr.to_polyomino()
    s = summarize(p)
    print(f"level {level}: {arr.width}x{arr.height}, n={s.n}, h={s.h}")

print("\nlevel 3 expanded arrangement:")
print(levels[2])

# Compression walks the whole chain back down to the seed; this is the
# uniqueness argument for the doubling sequence made executable.
back = levels[-1]
while back.width > 3:
    ok, reason, _ = is_compressible(back)
    assert ok, reason
    back = compress(back)
assert back.to_polyomino() == one_hole_crystal()
print("\ncompressed all the way back to the seed: exact round trip")

# Round trips are bit-exact in both directions.
for stage in levels[1:]:
    assert expand(compress(stage)).rows == stage.rows
print("expand(compress(A)) == A for every stage")
