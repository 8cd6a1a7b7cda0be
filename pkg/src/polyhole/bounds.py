"""Closed-form quantities: p_min, M, m, t_alpha, h_alpha, C, and g(h).

Everything is exact integer arithmetic.  M(n, h) is an exact rational whose
denominator divides 4 (its value is always a multiple of 1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroArea

SQUARE = "square"
PRONIC = "pronic"


@dataclass(frozen=True, order=True)
class AlphaKind:
    """A square (N^2) or pronic (N(N+1)) threshold area, N >= 3."""

    N: int
    kind: str

    def __post_init__(self):
        if self.kind not in (SQUARE, PRONIC):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.N < 3:
            raise ValueError("threshold formulas need N >= 3")

    @property
    def area(self) -> int:
        return self.N * self.N if self.kind == SQUARE else self.N * (self.N + 1)

    def __repr__(self) -> str:
        return f"AlphaKind({self.kind} N={self.N}, area={self.area})"


def alphas_by_area(n_max: int):
    """Interleaved squares and pronics with N in [3, n_max], sorted by area."""
    out = [AlphaKind(n, SQUARE) for n in range(3, n_max + 1)]
    out += [AlphaKind(n, PRONIC) for n in range(3, n_max + 1)]
    out.sort(key=lambda a: a.area)
    return out


def p_min(area: int) -> int:
    """Minimum perimeter of a polyomino with the given area: 2*ceil(2*sqrt(a))."""
    if area < 1:
        raise ZeroArea(f"area must be positive, got {area}")
    # smallest c with c*c >= 4*area, no floating point
    c = math.isqrt(4 * area)
    if c * c < 4 * area:
        c += 1
    return 2 * c


def M(n: int, h: int) -> Fraction:
    """Isoperimetric upper bound on hole count: (2n + 2 - p_min(n+h)) / 4."""
    if n < 1 or h < 0:
        raise ValueError("need n >= 1 and h >= 0")
    value = Fraction(2 * n + 2 - p_min(n + h), 4)
    assert value.denominator in (1, 2), "M must be a multiple of 1/2"
    return value


def m(h: int) -> int:
    """Least n with M(n, h) >= h; the theoretical lower bound for g(h)."""
    if h < 1:
        raise ValueError("need h >= 1")
    # M grows by 0 or 1/2 per unit of n, so scan upward from a safe start.
    n = max(1, 2 * h - 2)
    while M(n, h) < h:
        n += 1
    return n


def _is_power_of_two_plus_one(N: int) -> bool:
    k = N - 1
    return k >= 2 and (k & (k - 1)) == 0


def t_alpha(a: AlphaKind) -> int:
    """Max h with m(h) + h <= area, by the closed forms."""
    N = a.N
    if a.kind == SQUARE:
        if N % 3 == 1:
            return (N - 1) ** 2 // 3
        return N * (N - 2) // 3
    if N % 3 in (0, 1):
        return N * (N - 1) // 3
    return (N + 1) * (N - 2) // 3


def t_alpha_by_definition(a: AlphaKind) -> int:
    """Defining max over the m(h) scan; cross-check for t_alpha."""
    best = 0
    h = 1
    while True:
        if m(h) + h <= a.area:
            best = h
            h += 1
        else:
            return best


def h_alpha(a: AlphaKind) -> int:
    """Max holes achievable inside the square or pronic rectangle of this area."""
    N = a.N
    if a.kind == SQUARE:
        if N % 3 == 1:
            return (N - 1) ** 2 // 3 - 1
        if _is_power_of_two_plus_one(N):
            return N * (N - 2) // 3
        return N * (N - 2) // 3 - 1
    if N % 3 in (0, 1):
        return N * (N - 1) // 3 - 1
    return (N + 1) * (N - 2) // 3 - 1


def c_alpha(a: AlphaKind) -> int:
    """Boundary-tile deficit C with g(h_alpha) = area - h_alpha - C."""
    N = a.N
    if a.kind == SQUARE:
        if _is_power_of_two_plus_one(N):
            return 1
        if N % 3 == 1:
            return 3
        return 4
    return 5 if N % 3 == 2 else 3


def c_alpha_extrapolated(a: AlphaKind) -> bool:
    """True when N < 6: the C table is only theorem-backed from N = 6 up."""
    return a.N < 6


def min_alpha_for(h: int) -> AlphaKind:
    """Smallest square-or-pronic threshold whose h_alpha admits h holes."""
    if h < 1:
        raise ValueError("need h >= 1")
    N = 3
    while True:
        for kind in (SQUARE, PRONIC):
            a = AlphaKind(N, kind)
            if h <= h_alpha(a):
                return a
        N += 1


@dataclass(frozen=True)
class GEntry:
    h: int
    g: int
    alpha: AlphaKind
    m: int
    exceptional: bool  # g == m + 1


def g(h: int) -> GEntry:
    """Minimum tiles over all polyominoes with exactly h holes."""
    a = min_alpha_for(h)
    ha = h_alpha(a)
    g_at_threshold = a.area - ha - c_alpha(a)
    value = g_at_threshold - 2 * (ha - h)
    lower = m(h)
    if value not in (lower, lower + 1):
        raise AssertionError(f"g({h}) = {value} out of range [m, m+1] = [{lower}, {lower + 1}]")
    exceptional = value == lower + 1
    if h <= 8 and value != TABLE1_G[h]:
        raise AssertionError(f"g({h}) = {value} disagrees with the reference value {TABLE1_G[h]}")
    return GEntry(h=h, g=value, alpha=a, m=lower, exceptional=exceptional)


def g_table(h_from: int, h_to: int) -> list[GEntry]:
    return [g(h) for h in range(h_from, h_to + 1)]


def kr_hole_count(level: int) -> int:
    """Holes of the level-th doubling-sequence crystal: (4^level - 1) / 3."""
    return (4**level - 1) // 3


def kr_tile_count(level: int) -> int:
    """Tiles of the level-th doubling-sequence crystal."""
    return (2 ** (2 * level + 1) + 3 * 2 ** (level + 1) + 4) // 3 - 1


# Reference data for h <= 8: g(h) and the number of free crystallized
# polyominoes.  Independently reproduced (h <= 4) by the enumeration module.
TABLE1_G = {1: 7, 2: 11, 3: 14, 4: 17, 5: 19, 6: 23, 7: 25, 8: 28}
TABLE1_CRYSTAL_COUNTS = {1: 1, 2: 4, 3: 3, 4: 8, 5: 1, 6: 64, 7: 4, 8: 37}

# Published reference values of g(h) for 9 <= h <= 113, as printed.  The
# printed row h=85 reads 204, which contradicts both the closed form for the
# doubling sequence, kr_tile_count(4) = 203, and the lower bound m(85) = 203;
# the corrected value 203 is what g() produces.  See PRINTED_G_ERRATA.
PRINTED_G_113 = {
    9: 30, 10: 33, 11: 35, 12: 38, 13: 40, 14: 43, 15: 45, 16: 48, 17: 50,
    18: 53, 19: 55, 20: 57, 21: 59, 22: 62, 23: 64, 24: 67, 25: 69, 26: 71,
    27: 74, 28: 76, 29: 78, 30: 81, 31: 83, 32: 85, 33: 88, 34: 90, 35: 92,
    36: 95, 37: 97, 38: 99, 39: 101, 40: 104, 41: 106, 42: 108, 43: 110,
    44: 113, 45: 115, 46: 117, 47: 119, 48: 122, 49: 124, 50: 126, 51: 128,
    52: 131, 53: 133, 54: 135, 55: 137, 56: 140, 57: 142, 58: 144, 59: 146,
    60: 149, 61: 151, 62: 153, 63: 155, 64: 157, 65: 160, 66: 162, 67: 164,
    68: 166, 69: 168, 70: 171, 71: 173, 72: 175, 73: 177, 74: 179, 75: 182,
    76: 184, 77: 186, 78: 188, 79: 190, 80: 193, 81: 195, 82: 197, 83: 199,
    84: 201, 85: 204, 86: 206, 87: 208, 88: 210, 89: 212, 90: 215, 91: 217,
    92: 219, 93: 221, 94: 223, 95: 225, 96: 228, 97: 230, 98: 232, 99: 234,
    100: 236, 101: 238, 102: 241, 103: 243, 104: 245, 105: 247, 106: 249,
    107: 251, 108: 254, 109: 256, 110: 258, 111: 260, 112: 262, 113: 264,
}

# h -> (printed value, self-consistent value)
PRINTED_G_ERRATA = {85: (204, 203)}


def reference_g(h: int) -> int:
    """g(h) from the published tables with the h=85 erratum applied."""
    if h <= 8:
        return TABLE1_G[h]
    value = PRINTED_G_113[h]
    if h in PRINTED_G_ERRATA:
        value = PRINTED_G_ERRATA[h][1]
    return value
