"""Shared reference shapes for the tests.

These are fixed cell lists for small reference polyominoes: the unique
crystals for one, two and three holes, a 19-tile acyclic shape with five
holes whose hole graph is a star, and a 23-tile six-hole crystal that is
acyclic with unit holes but does not have minimal outer perimeter.
"""

import pytest

from polyhole.core import from_cells

# 7 tiles ringing one cell, one corner absent (unique 1-hole crystal)
RING7 = [(0, 0), (1, 0), (2, 2), (0, 1), (0, 2), (1, 2), (2, 1)]

# 11-tile staircase with two corner-adjacent holes (a 2-hole crystal)
STAIR11 = [
    (0, 1), (1, 1), (2, 3), (0, 2), (0, 3), (1, 3), (2, 2),
    (1, 0), (2, 0), (3, 0), (3, 1),
]

# 19-tile acyclic shape with five unit holes; hole graph is a 4-edge star
STAR19 = [
    (0, 0), (0, 1), (1, 0), (2, 0), (2, 1), (0, 2), (1, 2),
    (4, 0), (4, 1), (3, 0), (4, 2), (3, 2), (0, 4), (0, 3),
    (1, 4), (2, 4), (2, 3), (4, 3), (3, 4),
]

# 23-tile crystal with six unit holes, acyclic, outer perimeter not minimal
LOOSE23 = [
    (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 6), (2, 6), (3, 6),
    (4, 6), (4, 4), (4, 3), (5, 2), (5, 3), (1, 2), (1, 4), (2, 2),
    (2, 3), (2, 5), (3, 2), (3, 4), (4, 5), (5, 1), (4, 1),
]


@pytest.fixture
def ring7():
    return from_cells(RING7)


@pytest.fixture
def stair11():
    return from_cells(STAIR11)


@pytest.fixture
def star19():
    return from_cells(STAR19)


@pytest.fixture
def loose23():
    return from_cells(LOOSE23)
