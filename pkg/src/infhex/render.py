"""Deterministic SVG rendering of board windows.

One flat-top hexagon per window tile at the exact center embedding, black
fill for black tiles.  Optional overlays: quarter-plane shading, border
part markers, traced edge sequences as polylines, and tile highlights.
Output is byte-stable for identical inputs: tiles render in enumeration
order and floats use fixed two-decimal formatting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .coloring import ColoringSource
from .edgetrace import TraceResult
from .grid import QuarterPlane, Tile, Window, qp_border, qp_member, window_tiles

_CORNERS = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]


@dataclass
class Overlays:
    quarter_planes: list[QuarterPlane] = field(default_factory=list)
    borders: list[QuarterPlane] = field(default_factory=list)
    traces: list[TraceResult] = field(default_factory=list)
    highlight: set[Tile] = field(default_factory=set)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tile_points(t: Tile, scale: float) -> str:
    cx, cy = t.center()
    pts = []
    for dx, dy in _CORNERS:
        # SVG y grows downward; flip the vertical axis.
        pts.append(f"{_fmt((cx + dx) * scale)},{_fmt((-cy + dy) * scale)}")
    return " ".join(pts)


def _edge_midpoint(a: Tile, b: Tile, scale: float) -> tuple[float, float]:
    ax, ay = a.center()
    bx, by = b.center()
    return (ax + bx) / 2 * scale, -(ay + by) / 2 * scale


def render_svg(src: ColoringSource, window: Window,
               overlays: Optional[Overlays] = None, scale: float = 18.0) -> str:
    """Render the window of the source as a standalone SVG document."""
    overlays = overlays or Overlays()
    tiles = window_tiles(window)
    xs, ys = [], []
    for t in tiles:
        cx, cy = t.center()
        xs.append(cx * scale)
        ys.append(-cy * scale)
    pad = 1.5 * scale
    if tiles:
        min_x, max_x = min(xs) - pad, max(xs) + pad
        min_y, max_y = min(ys) - pad, max(ys) + pad
    else:
        min_x = min_y = -pad
        max_x = max_y = pad
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(min_x)} {_fmt(min_y)} {_fmt(max_x - min_x)} {_fmt(max_y - min_y)}">')
    out.append('<g stroke="#888888" stroke-width="0.8">')
    black_set = set(src.blacks_in(window))
    for t in tiles:
        shade = any(qp_member(t, qp) for qp in overlays.quarter_planes)
        if t in black_set:
            fill = "#1a1a1a"
            cls = "tile black"
        elif shade:
            fill = "#c8d4e8"
            cls = "tile shaded"
        else:
            fill = "#ffffff"
            cls = "tile vacant"
        out.append(f'<polygon class="{cls}" fill="{fill}" '
                   f'points="{_tile_points(t, scale)}"/>')
    out.append("</g>")
    for qp in overlays.borders:
        marks = []
        for t in tiles:
            if not qp_member(t, qp):
                continue
            parts = qp_border(t, qp)
            if parts:
                cx, cy = t.center()
                label = "".join(sorted(parts))
                marks.append(
                    f'<text class="border" x="{_fmt(cx * scale)}" '
                    f'y="{_fmt(-cy * scale)}" font-size="{_fmt(scale * 0.5)}" '
                    f'text-anchor="middle" fill="#b03030">{label}</text>')
        out.extend(marks)
    for k, tr in enumerate(overlays.traces):
        pts = []
        for e in tr.edges:
            x, y = _edge_midpoint(e.a, e.b, scale)
            pts.append(f"{_fmt(x)},{_fmt(y)}")
        if pts:
            out.append(f'<polyline class="trace trace-{k}" fill="none" '
                       f'stroke="#d06010" stroke-width="1.6" points="{" ".join(pts)}"/>')
            out.append(f'<circle class="trace-start" cx="{pts[0].split(",")[0]}" '
                       f'cy="{pts[0].split(",")[1]}" r="{_fmt(scale * 0.18)}" '
                       f'fill="#d06010"/>')
    for t in sorted(overlays.highlight):
        if window.contains(t):
            out.append(f'<polygon class="highlight" fill="none" stroke="#10a040" '
                       f'stroke-width="1.8" points="{_tile_points(t, scale)}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
