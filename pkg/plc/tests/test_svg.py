from fractions import Fraction

import pytest

from plc.engine.closure import init, run_stage
from plc.engine.configuration import ParallelPolicy
from plc.geom.start import StartConfig
from plc.geom.triple import LineTriple
from plc.svg import EmptyViewport
from plc.svg.svg_generator import Viewport, SVGGenerator, clip_line


def test_stage_one_drawing(stage1):
    generator = SVGGenerator(stage1, Viewport(-1, 6, -1, 8))
    svg = generator.write_svg_string()
    assert (generator.n_circles, generator.n_segments) == (4, 6)
    assert svg.count("<circle") == 4 and svg.count("<line") == 6
    assert svg.startswith("<?xml") and svg.endswith("</svg>\n")
    assert 'stroke-width="0.8"' in svg and 'id="legend"' in svg


def test_stage_two_drawing(stage2):
    # (5, 7) and (0, -7/4) fall outside this viewport
    generator = SVGGenerator(stage2, Viewport.from_string("-1,3,-1,8"))
    generator.write_svg_string()
    assert (generator.n_circles, generator.n_segments) == (5, 9)

    generator = SVGGenerator(stage2, Viewport(-1, 6, -2, 8))
    generator.write_svg_string()
    assert (generator.n_circles, generator.n_segments) == (7, 9)


def test_output_is_deterministic(tmp_path, stage2):
    viewport = Viewport(Fraction(-1), Fraction(3), Fraction(-1), Fraction(8))
    first = SVGGenerator(stage2, viewport).generate(str(tmp_path / "a.svg"))
    second = SVGGenerator(stage2, viewport).generate(str(tmp_path / "b.svg"))
    assert first == second
    assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


def test_viewport_without_points(stage2):
    generator = SVGGenerator(stage2, Viewport(10, 11, 10, 11))
    svg = generator.write_svg_string()
    assert generator.n_circles == 0
    assert "7 point(s) outside the viewport" in svg
    assert svg.endswith("</svg>\n")


def test_points_at_infinity_go_to_the_legend():
    square = StartConfig.from_pairs([(0, 0), (1, 0), (0, 1), (1, 1)])
    c, _ = run_stage(init(square, ParallelPolicy.PROJECTIVE))
    svg = SVGGenerator(c, Viewport(-1, 2, -1, 2)).write_svg_string()
    assert "2 point(s) at infinity" in svg
    assert "direction (1:0)" in svg and "direction (0:1)" in svg


def test_empty_viewport():
    with pytest.raises(EmptyViewport):
        Viewport(1, 1, 0, 2)
    with pytest.raises(EmptyViewport):
        Viewport(0, 2, 3, -3)
    with pytest.raises(ValueError):
        Viewport.from_string("0,1,2")


def test_clip_line():
    viewport = Viewport(-1, 3, -1, 8)
    assert clip_line(LineTriple(0, 1, 0), viewport) == ((-1, 0), (3, 0))
    assert clip_line(LineTriple(1, 1, 2), viewport) is None
    assert clip_line(LineTriple(1, 0, -10), viewport) is None
    assert clip_line(LineTriple(0, 0, 1), viewport) is None
    (x1, y1), (x2, y2) = clip_line(LineTriple(7, -5, 0), viewport)
    assert 7 * x1 == 5 * y1 and 7 * x2 == 5 * y2
