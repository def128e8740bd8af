import pytest

from gausslint.tools.render import render, render_dot, render_svg


def test_single_chord_svg():
    text = render_svg(((0, 1),))
    assert "<svg" in text
    assert text.count("<line") == 1
    assert text.count("<text") == 2
    assert text.count("<circle") == 3


def test_size9_svg(size9):
    text = render_svg(size9, radius=200, font_size=10, stroke_width=2)
    assert text.count("<line") == 9
    assert text.count("<text") == 18
    assert ">17<" in text


def test_svg_is_deterministic(trefoil):
    assert render_svg(trefoil) == render_svg(trefoil)


def test_dot_triangle():
    text = render_dot(((0, 3), (1, 4), (2, 5)))
    assert "0 -- 1;" in text and "0 -- 2;" in text and "1 -- 2;" in text


def test_render_dispatch(trefoil):
    assert render(trefoil, "DOT") == render_dot(trefoil)
    assert render(trefoil) == render_svg(trefoil)
    with pytest.raises(ValueError):
        render(trefoil, "png")
