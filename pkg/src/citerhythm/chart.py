"""Self-contained SVG line charts for rhythm sequences.

No drawing dependency: the chart is assembled as plain SVG markup so tests
can assert its structure (series count, point count, reference line) by
parsing the XML.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

__all__ = ["ChartSeries", "line_chart"]

_WIDTH = 720
_HEIGHT = 420
_MARGIN_LEFT = 64
_MARGIN_RIGHT = 20
_MARGIN_TOP = 40
_MARGIN_BOTTOM = 52
_COLORS = ("#1f6fb2", "#c44e52", "#55a868", "#8172b2")


@dataclass(frozen=True)
class ChartSeries:
    """One plotted line: (year, value) points with undefined years already
    dropped."""

    label: str
    points: tuple[tuple[int, float], ...]
    dashed: bool = field(default=False)


def _ticks(upper: float, count: int = 5) -> list[float]:
    step = upper / count
    return [step * i for i in range(count + 1)]


def line_chart(
    years: tuple[int, ...],
    series: list[ChartSeries],
    title: str = "",
    reference: float | None = 1.0,
    y_label: str = "ratio",
) -> str:
    """Render series over a shared year axis, with a horizontal reference
    line (class ``refline``) marking the given level. The y axis always
    starts at 0 and leaves 10% headroom above the largest value."""
    values = [v for s in series for _, v in s.points]
    top = max(values + ([reference] if reference is not None else []) + [1e-9])
    y_max = top * 1.1

    plot_w = _WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = _HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def x(year: int) -> float:
        if len(years) == 1:
            return _MARGIN_LEFT + plot_w / 2
        t = (year - years[0]) / (years[-1] - years[0])
        return _MARGIN_LEFT + t * plot_w

    def y(value: float) -> float:
        return _MARGIN_TOP + (1 - value / y_max) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text class="title" x="{_WIDTH / 2:.1f}" y="22" text-anchor="middle" '
            f'font-size="15">{escape(title)}</text>'
        )

    axis_bottom = _MARGIN_TOP + plot_h
    out.append(
        f'<g class="axis" stroke="#444" stroke-width="1">'
        f'<line x1="{_MARGIN_LEFT}" y1="{_MARGIN_TOP}" x2="{_MARGIN_LEFT}" y2="{axis_bottom}"/>'
        f'<line x1="{_MARGIN_LEFT}" y1="{axis_bottom}" x2="{_WIDTH - _MARGIN_RIGHT}" y2="{axis_bottom}"/>'
        f"</g>"
    )

    for tick in _ticks(y_max):
        ty = y(tick)
        out.append(
            f'<line class="grid" x1="{_MARGIN_LEFT}" y1="{ty:.1f}" '
            f'x2="{_WIDTH - _MARGIN_RIGHT}" y2="{ty:.1f}" stroke="#ddd" stroke-width="0.5"/>'
        )
        out.append(
            f'<text x="{_MARGIN_LEFT - 6}" y="{ty + 4:.1f}" text-anchor="end">{tick:.2f}</text>'
        )
    out.append(
        f'<text transform="rotate(-90)" x="{-(_MARGIN_TOP + plot_h / 2):.1f}" y="16" '
        f'text-anchor="middle">{escape(y_label)}</text>'
    )

    label_step = max(1, len(years) // 15)
    for idx, year in enumerate(years):
        if idx % label_step:
            continue
        tx = x(year)
        out.append(
            f'<line x1="{tx:.1f}" y1="{axis_bottom}" x2="{tx:.1f}" y2="{axis_bottom + 4}" '
            f'stroke="#444" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{tx:.1f}" y="{axis_bottom + 18}" text-anchor="middle">{year}</text>'
        )

    if reference is not None and reference <= y_max:
        ry = y(reference)
        out.append(
            f'<line class="refline" data-level="{reference:g}" x1="{_MARGIN_LEFT}" '
            f'y1="{ry:.1f}" x2="{_WIDTH - _MARGIN_RIGHT}" y2="{ry:.1f}" '
            f'stroke="#888" stroke-width="1" stroke-dasharray="2,3"/>'
        )

    for idx, s in enumerate(series):
        if not s.points:
            continue
        color = _COLORS[idx % len(_COLORS)]
        dash = ' stroke-dasharray="6,4"' if s.dashed else ""
        pts = " ".join(f"{x(yr):.1f},{y(v):.1f}" for yr, v in s.points)
        out.append(
            f'<polyline class="series" data-label="{escape(s.label)}" points="{pts}" '
            f'fill="none" stroke="{color}" stroke-width="2"{dash}/>'
        )

    legend_y = _MARGIN_TOP + 6
    for idx, s in enumerate(series):
        color = _COLORS[idx % len(_COLORS)]
        dash = ' stroke-dasharray="6,4"' if s.dashed else ""
        ly = legend_y + idx * 18
        out.append(
            f'<g class="legend"><line x1="{_MARGIN_LEFT + 10}" y1="{ly}" '
            f'x2="{_MARGIN_LEFT + 38}" y2="{ly}" stroke="{color}" stroke-width="2"{dash}/>'
            f'<text x="{_MARGIN_LEFT + 44}" y="{ly + 4}">{escape(s.label)}</text></g>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
