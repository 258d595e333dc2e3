import io
import logging
import typing
from dataclasses import dataclass
from fractions import Fraction

import svgwrite

from plc.engine.configuration import Configuration
from plc.geom.triple import LineTriple
from plc.svg import EmptyViewport


__all__ = [
    "Viewport",
    "clip_line",
    "SVGGenerator"
]


logger = logging.getLogger(__name__)

Segment = typing.Tuple[typing.Tuple[Fraction, Fraction], typing.Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class Viewport:
    """The closed rectangle ``[x_min, x_max] x [y_min, y_max]`` with rational bounds"""
    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    def __post_init__(self):
        for name in ("x_min", "x_max", "y_min", "y_max"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.x_min >= self.x_max or self.y_min >= self.y_max:
            raise EmptyViewport(f"Viewport [{self.x_min}, {self.x_max}] x [{self.y_min}, {self.y_max}] has no area")

    @classmethod
    def from_string(cls, text: str) -> "Viewport":
        """Reads ``x_min,x_max,y_min,y_max``, each a rational such as ``-1`` or ``7/2``"""
        fields = [f.strip() for f in text.split(",")]
        if len(fields) != 4:
            raise ValueError(f"A viewport needs 4 comma-separated bounds, got '{text}'")
        return cls(*(Fraction(f) for f in fields))

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max


def clip_line(line: LineTriple, viewport: Viewport) -> typing.Optional[Segment]:
    """
    The part of the line inside the viewport as an exact segment, found from the line's crossings with the four
    sides. Returns ``None`` when the line misses the viewport or only touches a corner.
    """
    if line.is_at_infinity:
        return None
    a, b, c = line.a, line.b, line.c
    hits = set()
    if b != 0:
        for x in (viewport.x_min, viewport.x_max):
            y = -(a * x + c) / Fraction(b)
            if viewport.y_min <= y <= viewport.y_max:
                hits.add((x, y))
    if a != 0:
        for y in (viewport.y_min, viewport.y_max):
            x = -(b * y + c) / Fraction(a)
            if viewport.x_min <= x <= viewport.x_max:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    ordered = sorted(hits)
    return ordered[0], ordered[-1]


class SVGGenerator:
    """
    Draws the finite points inside a viewport as circles and every line as its clipped segment. Points at infinity
    are listed in a legend in the right margin. The output depends only on the configuration and the viewport.
    """
    def __init__(self, configuration: Configuration, viewport: Viewport, width: int = 600, margin: int = 20,
                 legend_width: int = 180, point_radius: float = 3.0):
        self.configuration = configuration
        self.viewport = viewport
        self.width = width
        self.margin = margin
        self.legend_width = legend_width
        self.point_radius = point_radius
        self.scale = Fraction(width) / (viewport.x_max - viewport.x_min)
        self.height = int(round((viewport.y_max - viewport.y_min) * self.scale))
        self.n_circles = 0
        self.n_segments = 0

    def _to_canvas(self, x: Fraction, y: Fraction) -> typing.Tuple[float, float]:
        # three decimals in the output
        u = self.margin + (x - self.viewport.x_min) * self.scale
        v = self.margin + (self.viewport.y_max - y) * self.scale
        return round(float(u), 3), round(float(v), 3)

    def write_svg_string(self) -> str:
        c = self.configuration
        total_width = self.width + 2 * self.margin + self.legend_width
        total_height = self.height + 2 * self.margin
        dwg = svgwrite.Drawing(size=(total_width, total_height), profile="full", debug=False)
        dwg.viewbox(0, 0, total_width, total_height)
        dwg.add(dwg.rect(insert=(self.margin, self.margin), size=(self.width, self.height), fill="none",
                         stroke="#cccccc"))

        layer_lines = dwg.add(dwg.g(id="lines", stroke="#4682b4", stroke_width=0.8))
        self.n_segments = 0
        for line in c.lines:
            segment = clip_line(line, self.viewport)
            if segment is None:
                continue
            layer_lines.add(dwg.line(start=self._to_canvas(*segment[0]), end=self._to_canvas(*segment[1])))
            self.n_segments += 1

        layer_points = dwg.add(dwg.g(id="points", fill="#000000"))
        self.n_circles = 0
        at_infinity = []
        outside = 0
        for p in c.points:
            if p.is_at_infinity:
                at_infinity.append(p)
                continue
            x, y = p.affine()
            if not self.viewport.contains(x, y):
                outside += 1
                continue
            layer_points.add(dwg.circle(center=self._to_canvas(x, y), r=self.point_radius))
            self.n_circles += 1

        legend_x = self.width + 2 * self.margin
        legend = [f"stage {c.k}: {c.n} points, {c.m} lines", f"{outside} point(s) outside the viewport",
                  f"{len(at_infinity)} point(s) at infinity"]
        legend.extend(f"direction ({p.a}:{p.b})" for p in at_infinity)
        layer_labels = dwg.add(dwg.g(id="legend", font_family="serif", font_size=10, fill="#333333"))
        for row, text in enumerate(legend):
            layer_labels.add(dwg.text(text, insert=(legend_x, self.margin + 12 * (row + 1))))

        buffer = io.StringIO()
        dwg.write(buffer)
        return buffer.getvalue() + "\n"

    def generate(self, file_name: str) -> str:
        svg_string = self.write_svg_string()
        with open(file_name, "w", newline="", encoding="utf-8") as f:
            f.write(svg_string)
        logger.info(f"Rendered stage {self.configuration.k}: {self.n_circles} circle(s), {self.n_segments} "
                    f"segment(s) to {file_name}")
        return svg_string
