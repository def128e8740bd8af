"""Chord-diagram SVG and interlacement-graph DOT rendering."""

import logging
import math
from typing import Optional, Sequence

import svg

from ..config import settings
from .interlacement import interlacement_graph
from .lintel import Chord

logger = logging.getLogger(__name__)


def _point(index: int, points: int, radius: float, center: float) -> tuple[float, float]:
    """Point 0 at 90 degrees, indices running clockwise."""
    angle = math.pi / 2 - 2 * math.pi * index / points
    return round(center + radius * math.cos(angle), 2), round(center - radius * math.sin(angle), 2)


def render_svg(
    lintel: Sequence[Chord],
    radius: Optional[float] = None,
    font_size: Optional[float] = None,
    stroke_width: Optional[float] = None,
) -> str:
    """A circle with 2n labelled points and straight chords."""
    radius = settings.SVG_RADIUS if radius is None else radius
    font_size = settings.SVG_FONT_SIZE if font_size is None else font_size
    stroke_width = settings.SVG_STROKE_WIDTH if stroke_width is None else stroke_width

    points = 2 * len(lintel)
    margin = 3 * font_size
    center = radius + margin
    side = 2 * center

    elements: list[svg.Element] = [
        svg.Circle(cx=center, cy=center, r=radius, stroke="black", fill="none", stroke_width=stroke_width),
    ]

    for a, b in lintel:
        x1, y1 = _point(a, points, radius, center)
        x2, y2 = _point(b, points, radius, center)
        elements.append(svg.Line(x1=x1, y1=y1, x2=x2, y2=y2, stroke="black", stroke_width=stroke_width))

    for i in range(points):
        x, y = _point(i, points, radius, center)
        elements.append(svg.Circle(cx=x, cy=y, r=round(stroke_width * 1.5, 2), fill="black"))
        lx, ly = _point(i, points, radius + 1.5 * font_size, center)
        # Centre the glyph vertically on the label point.
        ly = round(ly + 0.35 * font_size, 2)
        elements.append(
            svg.Text(
                x=lx,
                y=ly,
                text=str(i),
                font_size=font_size,
                text_anchor="middle",
            )
        )

    logger.debug(f"[RENDER] svg: {len(lintel)} chords, radius={radius}")
    document = svg.SVG(width=side, height=side, viewBox=svg.ViewBoxSpec(0, 0, side, side), elements=elements)
    return document.as_str() + "\n"


def render_dot(lintel: Sequence[Chord]) -> str:
    return interlacement_graph(lintel).to_dot()


def render(lintel: Sequence[Chord], fmt: str = "svg") -> str:
    fmt = fmt.lower()
    if fmt == "svg":
        return render_svg(lintel)
    if fmt == "dot":
        return render_dot(lintel)
    raise ValueError(f"unknown render format {fmt!r}; expected 'svg' or 'dot'")
