"""Static SVG rendering of one dandelion figure.

Pixel map: world coordinates [-extent, +extent] on both axes map linearly onto
a square plot area of PLOT px with a MARGIN px border; the y axis points up
(world y is flipped into screen space).
"""
from __future__ import annotations

from pathlib import Path

from .dandelion import DandelionFigure

MARGIN = 40.0
PLOT = 400.0

STEM_COLOR = "#888888"
REAL_COLOR = "#2e8b57"  # stick to the y axis, length |re|
IMAG_COLOR = "#d9534f"  # stick to the x axis, length |im|
CIRCLE_COLOR = "#6baed6"
AXIS_COLOR = "#333333"


def _fmt(value: float) -> str:
    return f"{value:.3f}".rstrip("0").rstrip(".")


class _PixelMap:
    def __init__(self, extent: float):
        self.extent = extent
        self.scale = PLOT / (2.0 * extent)

    def x(self, wx: float) -> float:
        return MARGIN + (wx + self.extent) * self.scale

    def y(self, wy: float) -> float:
        return MARGIN + (self.extent - wy) * self.scale

    def length(self, w: float) -> float:
        return w * self.scale


def _line(pm: _PixelMap, a, b, color: str, width: float = 1.5,
          dash: str | None = None) -> str:
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<line x1="{_fmt(pm.x(a[0]))}" y1="{_fmt(pm.y(a[1]))}" '
            f'x2="{_fmt(pm.x(b[0]))}" y2="{_fmt(pm.y(b[1]))}" '
            f'stroke="{color}" stroke-width="{width}"{dash_attr}/>')


def render_figure_svg(figure: DandelionFigure, title: str = "") -> str:
    """Render one figure: axes, then per element stem, sticks, circle, label."""
    pm = _PixelMap(figure.axis_extent)
    size = PLOT + 2 * MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(size)}" '
        f'height="{_fmt(size)}" viewBox="0 0 {_fmt(size)} {_fmt(size)}">',
        f'<rect width="{_fmt(size)}" height="{_fmt(size)}" fill="white"/>',
        _line(pm, (-figure.axis_extent, 0.0), (figure.axis_extent, 0.0), AXIS_COLOR, 1.0),
        _line(pm, (0.0, -figure.axis_extent), (0.0, figure.axis_extent), AXIS_COLOR, 1.0),
    ]
    if title:
        parts.append(f'<text x="{_fmt(MARGIN)}" y="{_fmt(MARGIN * 0.6)}" '
                     f'font-size="14" fill="{AXIS_COLOR}">{title}</text>')
    for el in figure.elements:
        cx, cy = el.center
        parts.append(_line(pm, *el.stem, STEM_COLOR, 1.0))
        parts.append(_line(pm, *el.stick_real, REAL_COLOR, 1.5, dash="4 3"))
        parts.append(_line(pm, *el.stick_imag, IMAG_COLOR, 1.5, dash="4 3"))
        parts.append(
            f'<circle cx="{_fmt(pm.x(cx))}" cy="{_fmt(pm.y(cy))}" '
            f'r="{_fmt(pm.length(el.radius))}" fill="{CIRCLE_COLOR}" '
            f'fill-opacity="0.25" stroke="{CIRCLE_COLOR}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{_fmt(pm.x(el.point[0]) + 6)}" y="{_fmt(pm.y(el.point[1]) - 6)}" '
            f'font-size="12" fill="{AXIS_COLOR}">|{el.label}&#x27E9;</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def export_svg(bundle, step: int, k: float, out_path: str | Path | None = None) -> str:
    """Render the post-state of gate step `step` at scale k; optionally write it.

    Step indexing follows the API: step s transforms state s into state s + 1,
    and the exported figure shows state s + 1.
    """
    _, post = bundle.figure_pair(step, k)
    svg = render_figure_svg(post, title=f"after step {step} (k={k:g})")
    if out_path is not None:
        Path(out_path).write_text(svg, encoding="utf-8")
    return svg
