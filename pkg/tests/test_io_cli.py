import json

import pytest

from polyhole.arrangement import Arrangement
from polyhole.cli import main
from polyhole.construct import kr, r0, s0, s1
from polyhole.core import Polyomino, summarize
from polyhole.errors import IllegalChar, RaggedRows
from polyhole.io import parse_grid, parse_polyomino, render_ascii
from polyhole.render import RenderSpec, render_svg
from polyhole.transform import witness


def test_parse_simple_square():
    p = parse_grid("##\n##")
    assert isinstance(p, Polyomino) and len(p) == 4


def test_parse_ring_with_hole(ring7):
    text = "###\n#.#\n##."
    p = parse_grid(text)
    assert isinstance(p, Polyomino)
    s = summarize(p)
    assert (s.n, s.h) == (7, 1)


def test_parse_arrangement():
    a = parse_grid("#?#")
    assert isinstance(a, Arrangement)
    assert (a.width, a.height) == (3, 1)


def test_parse_rejects_bad_input():
    with pytest.raises(RaggedRows):
        parse_grid("##\n#")
    with pytest.raises(IllegalChar):
        parse_grid("#x#")
    with pytest.raises(IllegalChar):
        parse_polyomino("#?#")


def test_ascii_round_trip_generated_shapes():
    for shape in (kr(2), s1(1), r0(2), witness(8)[0]):
        text = render_ascii(shape)
        assert parse_grid(text) == shape


def test_svg_tile_count():
    p = s0(1)
    svg = render_svg(p)
    filled = svg.count('fill="#444444"')
    assert filled == len(p) == 101


def test_svg_overlay_counts(star19):
    svg = render_svg(star19, RenderSpec(overlay=True))
    # 19 dual vertices and 5 hole vertices drawn as circles
    assert svg.count("<circle") == 19 + 5


def test_cli_table_matches_reference(capsys):
    assert main(["table", "--from", "9", "--to", "113"]) == 0
    rows = json.loads(capsys.readouterr().out)
    from polyhole.bounds import reference_g

    assert [r["h"] for r in rows] == list(range(9, 114))
    assert all(r["g"] == reference_g(r["h"]) for r in rows)


def test_cli_gen_verify_round_trip(tmp_path, capsys):
    assert main(["gen", "--family", "s2", "--k", "1"]) == 0
    grid = capsys.readouterr().out
    path = tmp_path / "shape.txt"
    path.write_text(grid)
    assert main(["verify", str(path)]) == 0
    out = capsys.readouterr().out
    assert "crystallized" in out and "efficiently structured" in out


def test_cli_verify_loose_crystal(tmp_path, capsys, loose23):
    path = tmp_path / "loose.txt"
    path.write_text(render_ascii(loose23))
    assert main(["verify", str(path)]) == 0  # crystallized, though not efficient
    out = capsys.readouterr().out
    assert "not efficiently structured: outer perimeter" in out


def test_cli_verify_failure_exit_code(tmp_path, capsys):
    path = tmp_path / "square.txt"
    path.write_text("###\n###\n###\n")
    assert main(["verify", str(path)]) == 1
    assert "not crystallized" in capsys.readouterr().out


def test_cli_usage_errors(capsys):
    assert main(["gen"]) == 2
    assert main(["gen", "--family", "s1", "--holes", "3"]) == 2
    capsys.readouterr()


def test_cli_enum_json(tmp_path, capsys):
    out = tmp_path / "census.json"
    assert main(["enum", "--max-n", "7", "--json", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["max_n"] == 7
    assert payload["min_n_for_h"]["1"] == 7
    assert payload["crystal_counts"]["1"] == 1
    rows = {(r["n"], r["h"]): r["free_count"] for r in payload["rows"]}
    assert rows[(7, 1)] == 1
    capsys.readouterr()


def test_cli_dismantle_trace(tmp_path, capsys):
    trace = tmp_path / "trace.json"
    assert main(["dismantle", "--holes", "4", "--trace", str(trace)]) == 0
    payload = json.loads(trace.read_text())
    assert payload["holes"] == 4 and payload["tiles"] == 17
    assert len(payload["moves"]) == 1
    assert payload["moves"][0]["h"] == 4 and payload["moves"][0]["n"] == 17
    capsys.readouterr()


def test_cli_render_svg_and_palette(tmp_path, capsys):
    shape = tmp_path / "shape.txt"
    shape.write_text(render_ascii(kr(2)))
    cfg = tmp_path / "palette.cfg"
    cfg.write_text('tile = "#123456"\n')
    assert main(["render", str(shape), "--svg", "--config", str(cfg)]) == 0
    svg = capsys.readouterr().out
    assert svg.count('fill="#123456"') == 19


def test_cli_outputs_deterministic(capsys):
    main(["gen", "--family", "r2", "--k", "2"])
    first = capsys.readouterr().out
    main(["gen", "--family", "r2", "--k", "2"])
    assert capsys.readouterr().out == first
