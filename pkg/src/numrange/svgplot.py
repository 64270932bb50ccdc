"""SVG picture of a numerical range, its norm polygon and three bound circles.

The SVG is written by hand (no plotting library) with fixed number
formatting, so the same matrix always produces the same bytes.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .bounds import bound_classical, bound_kittaneh_mean, bound_kittaneh_power
from .enclosure import Polygon, octagon_closed_form
from .linalg import as_matrix, cartesian_split
from .oracle import DEFAULT_ANGLES, boundary_sweep

SIZE = 480
MARGIN = 24


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Canvas:
    def __init__(self, extent: float):
        self.scale = (SIZE / 2 - MARGIN) / extent
        self.items: list[str] = []

    def xy(self, x: float, y: float) -> str:
        return f"{_fmt(SIZE / 2 + x * self.scale)},{_fmt(SIZE / 2 - y * self.scale)}"

    def polygon(self, pts, **attrs) -> None:
        coords = " ".join(self.xy(x, y) for x, y in pts)
        self.items.append(f'<polygon points="{coords}"{_attrs(attrs)}/>')

    def line(self, p, q, **attrs) -> None:
        (x1, y1), (x2, y2) = self.xy(*p).split(","), self.xy(*q).split(",")
        self.items.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{_attrs(attrs)}/>')

    def circle(self, r: float, **attrs) -> None:
        c = _fmt(SIZE / 2)
        self.items.append(f'<circle cx="{c}" cy="{c}" r="{_fmt(r * self.scale)}"{_attrs(attrs)}/>')


def _attrs(attrs: dict) -> str:
    return "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())


def render_svg(t, n_angles: int = DEFAULT_ANGLES) -> str:
    t = as_matrix(t)
    pair = cartesian_split(t)
    sweep = boundary_sweep(pair, n_angles)
    region = octagon_closed_form(pair)
    outer = bound_classical(t)
    dashed = bound_kittaneh_power(t)
    inner = bound_kittaneh_mean(t)

    extent = 1.08 * max(outer, region.max_modulus(), 1e-12)
    cv = _Canvas(extent)
    cv.line((-extent, 0), (extent, 0), stroke="#999999", stroke_width="0.75")
    cv.line((0, -extent), (0, extent), stroke="#999999", stroke_width="0.75")
    cv.polygon(sweep.boundary, fill="#808080", fill_opacity="0.45", stroke="#606060", stroke_width="0.5")
    if isinstance(region, Polygon):
        cv.polygon(region.vertices, fill="none", stroke="#000000", stroke_width="1.5")
    else:
        ends = region.vertices
        cv.line(ends[0], ends[1], stroke="#000000", stroke_width="1.5")
    cv.circle(outer, fill="none", stroke="#000000", stroke_width="1.5")
    cv.circle(inner, fill="none", stroke="#000000", stroke_width="1")
    cv.circle(dashed, fill="none", stroke="#000000", stroke_width="1", stroke_dasharray="6,4")

    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="#ffffff"/>', *cv.items, "</svg>", ""])


def write_svg(path, t, n_angles: int = DEFAULT_ANGLES) -> None:
    Path(path).write_text(render_svg(t, n_angles))
