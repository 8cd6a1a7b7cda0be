from fractions import Fraction

import pytest

from polyhole.bounds import (
    PRONIC,
    SQUARE,
    AlphaKind,
    PRINTED_G_113,
    PRINTED_G_ERRATA,
    TABLE1_G,
    alphas_by_area,
    c_alpha,
    g,
    h_alpha,
    kr_hole_count,
    kr_tile_count,
    m,
    M,
    min_alpha_for,
    p_min,
    reference_g,
    t_alpha,
    t_alpha_by_definition,
)
from polyhole.errors import ZeroArea


def test_p_min_values():
    assert p_min(1) == 4
    assert p_min(9) == 12
    assert p_min(97) == 40
    with pytest.raises(ZeroArea):
        p_min(0)


def test_p_min_no_float_edge_cases():
    # exact at perfect squares and just past them
    for k in range(1, 2000):
        assert p_min(k * k) == 4 * k
        assert p_min(k * k + 1) == 4 * k + 2


def test_M_values():
    assert M(7, 1) == 1
    assert M(23, 6) == Fraction(13, 2)
    assert M(28, 8) == Fraction(17, 2)
    assert M(25, 7) == 7


def test_M_monotone_steps():
    for h in (1, 3, 8):
        for n in range(1, 200):
            step = M(n + 1, h) - M(n, h)
            assert step in (0, Fraction(1, 2))


def test_m_values():
    assert m(1) == 7
    assert m(2) == 10
    assert m(5) == 19
    for h in range(1, 60):
        assert M(m(h), h) == h  # the inequality is met with equality
        assert M(m(h) - 1, h) < h


def test_m_jump_structure_to_500():
    alphas = {a.area for a in alphas_by_area(60)}
    for h in range(1, 501):
        jump = m(h + 1) - m(h)
        assert jump in (2, 3)
        # the +3 jumps happen exactly when adding three to the total
        # area crosses (or starts on) a square or pronic threshold
        crosses = any(0 <= alpha - (m(h) + h) < 3 for alpha in alphas)
        assert jump == (3 if crosses else 2)


def test_t_alpha_values():
    assert t_alpha(AlphaKind(5, SQUARE)) == 5
    assert t_alpha(AlphaKind(7, SQUARE)) == 12
    assert t_alpha(AlphaKind(8, PRONIC)) == 18


def test_t_alpha_matches_definition():
    for N in range(3, 26):
        for kind in (SQUARE, PRONIC):
            a = AlphaKind(N, kind)
            assert t_alpha(a) == t_alpha_by_definition(a), a


def test_t_offset_cases():
    # how close m(t)+t gets to each threshold area
    for N in range(3, 26):
        sq = AlphaKind(N, SQUARE)
        t = t_alpha(sq)
        if N % 3 == 1:
            assert m(t) + t == N * N
        else:
            assert m(t) + t == N * N - 1
        pr = AlphaKind(N, PRONIC)
        t = t_alpha(pr)
        if N % 3 == 2:
            assert m(t) + t == N * (N + 1) - 2
        else:
            assert m(t) + t == N * (N + 1)


def test_first_threshold_integrality():
    for N in range(3, 101):
        assert ((N - 1) ** 2 % 3 == 0) == (N % 3 == 1)


def test_h_alpha_values():
    assert h_alpha(AlphaKind(6, SQUARE)) == 7
    assert h_alpha(AlphaKind(5, SQUARE)) == 5
    assert h_alpha(AlphaKind(6, PRONIC)) == 9


def test_h_alpha_vs_t_alpha():
    for N in range(3, 26):
        for kind in (SQUARE, PRONIC):
            a = AlphaKind(N, kind)
            power = kind == SQUARE and (N - 1) & (N - 2) == 0 and N >= 3
            expected = t_alpha(a) if power else t_alpha(a) - 1
            assert h_alpha(a) == expected, a


def test_c_alpha_values():
    assert c_alpha(AlphaKind(9, SQUARE)) == 1
    assert c_alpha(AlphaKind(7, SQUARE)) == 3
    assert c_alpha(AlphaKind(8, PRONIC)) == 5
    assert c_alpha(AlphaKind(6, SQUARE)) == 4
    assert c_alpha(AlphaKind(6, PRONIC)) == 3


def test_g_examples():
    assert g(7).g == 25
    entry = g(10)
    assert entry.g == 33 and entry.alpha.area == 49 and entry.exceptional
    assert g(11).g == 35
    assert g(113).g == 264


def test_g_matches_table1():
    for h, value in TABLE1_G.items():
        assert g(h).g == value


def test_g_matches_reference_table():
    for h in range(9, 114):
        assert g(h).g == reference_g(h)


def test_reference_table_erratum_is_isolated():
    diffs = [h for h in range(9, 114) if g(h).g != PRINTED_G_113[h]]
    assert diffs == sorted(PRINTED_G_ERRATA)
    printed, corrected = PRINTED_G_ERRATA[85]
    assert (printed, corrected) == (204, 203)
    # the corrected value is pinned by two independent routes
    assert kr_tile_count(4) == 203 and kr_hole_count(4) == 85
    assert m(85) == 203


def test_g_within_one_of_lower_bound_and_small_jumps():
    prev = None
    for h in range(1, 501):
        entry = g(h)
        assert entry.g - entry.m in (0, 1)
        assert entry.exceptional == (entry.g == entry.m + 1)
        if prev is not None and h >= 7:
            assert entry.g - prev in (2, 3)
        prev = entry.g


def test_min_alpha_examples():
    assert min_alpha_for(7).area == 36
    assert min_alpha_for(10).area == 49
    assert min_alpha_for(113).area == 380


def test_exceptional_characterization():
    # g(h) = m(h)+1 exactly when h is one past a non-power threshold
    exceptional_h = set()
    for a in alphas_by_area(25):
        power = a.kind == SQUARE and (a.N - 1) & (a.N - 2) == 0
        if not power:
            exceptional_h.add(h_alpha(a) + 1)
    for h in range(1, 200):
        assert g(h).exceptional == (h in exceptional_h), h
