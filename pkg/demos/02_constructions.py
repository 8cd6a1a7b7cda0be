"""
Crystallized construction families
==================================

Six procedural families cover every threshold: three even-square combs, two
pronic nested-tree layouts, and a pronic double-spiral variant, plus the
doubling sequence grown by expansion.  Every generator checks its own closed
forms and the efficiency conditions before returning.
"""

from polyhole.construct import crystal_for_threshold, kr, r0, r1, r2, s0, s1, s2
from polyhole.bounds import AlphaKind, PRONIC, SQUARE
from polyhole.core import is_efficiently_structured, summarize
from polyhole.io import render_ascii

# The smallest even-square comb: 2 vertical plus trees inside a 10x10 ring.
p = s1(1)
print(render_ascii(p))
s = summarize(p)
print(f"s1(1): {s.n} tiles, {s.h} holes, outer perimeter {s.p_o}\n")

# Every family, smallest members: tiles/holes follow quadratic closed forms.
for name, gen, k in (
    ("s1", s1, 1), ("s2", s2, 1), ("s0", s0, 0),
    ("r0", r0, 1), ("r1", r1, 1), ("r2", r2, 1), ("kr", kr, 2),
):
    q = gen(k)
    sq = summarize(q)
    assert is_efficiently_structured(q, sq).efficient
    print(f"{name}({k}): n={sq.n:>3} h={sq.h:>3} box={q.width}x{q.height}")

# The double spiral in a pronic rectangle; note the five empty boundary
# cells along the bottom, three by the left corner and two by the right.
print()
print(render_ascii(r2(2)))

# Thresholds dispatch to the right family automatically; odd squares are
# produced by doubling a smaller even-square crystal.
q = crystal_for_threshold(AlphaKind(11, SQUARE))
print(f"\n11x11 crystal via expansion: n={len(q)}, h={summarize(q).h}")
q = crystal_for_threshold(AlphaKind(9, PRONIC))
print(f"9x10 crystal: n={len(q)}, h={summarize(q).h}")
