"""Self-contained SVG rendering of image curves in the complex plane.

Output bytes are a pure function of the arguments: fixed 800x800 viewBox,
inline styles, no external resources, coordinates formatted to a fixed
number of decimals.
"""

from __future__ import annotations

import numpy as np

SIZE = 800
DEFAULT_WINDOW = (-0.5, 2.5, -1.5, 1.5)
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


class _Frame:
    def __init__(self, window):
        self.x0, self.x1, self.y0, self.y1 = (float(v) for v in window)
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError(f"window must have positive extent, got {window}")
        self.sx = SIZE / (self.x1 - self.x0)
        self.sy = SIZE / (self.y1 - self.y0)

    def px(self, x: float) -> float:
        return (x - self.x0) * self.sx

    def py(self, y: float) -> float:
        return SIZE - (y - self.y0) * self.sy


def render_curves(title, curves, circle=None, vline=None, window=DEFAULT_WINDOW) -> str:
    """Build the SVG document.

    curves: sequence of (label, points) with points an array of complex
    values; each curve is drawn as a closed polyline.  circle: optional
    (center, radius) of a target disk boundary.  vline: optional real part
    of a vertical boundary line.
    """
    fr = _Frame(window)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" '
        f'width="{SIZE}" height="{SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    if fr.x0 < 0.0 < fr.x1:
        x = _fmt(fr.px(0.0))
        parts.append(
            f'<line x1="{x}" y1="0" x2="{x}" y2="{SIZE}" stroke="#cccccc" stroke-width="1"/>'
        )
    if fr.y0 < 0.0 < fr.y1:
        y = _fmt(fr.py(0.0))
        parts.append(
            f'<line x1="0" y1="{y}" x2="{SIZE}" y2="{y}" stroke="#cccccc" stroke-width="1"/>'
        )
    if circle is not None:
        center, radius = circle
        center = complex(center)
        parts.append(
            f'<ellipse cx="{_fmt(fr.px(center.real))}" cy="{_fmt(fr.py(center.imag))}" '
            f'rx="{_fmt(radius * fr.sx)}" ry="{_fmt(radius * fr.sy)}" '
            'fill="none" stroke="#333333" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
    if vline is not None:
        x = _fmt(fr.px(float(vline)))
        parts.append(
            f'<line x1="{x}" y1="0" x2="{x}" y2="{SIZE}" '
            'stroke="#333333" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
    for idx, (label, pts) in enumerate(curves):
        pts = np.asarray(pts, dtype=complex).ravel()
        closed = np.concatenate([pts, pts[:1]])
        coords = " ".join(
            f"{_fmt(fr.px(p.real))},{_fmt(fr.py(p.imag))}" for p in closed
        )
        color = PALETTE[idx % len(PALETTE)]
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>'
        )
    parts.append(
        f'<text x="{SIZE // 2}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16" fill="#000000">{title}</text>'
    )
    for idx, (label, _) in enumerate(curves):
        color = PALETTE[idx % len(PALETTE)]
        y = 48 + 20 * idx
        parts.append(
            f'<rect x="16" y="{y - 10}" width="12" height="12" fill="{color}"/>'
        )
        parts.append(
            f'<text x="34" y="{y}" font-family="sans-serif" font-size="13" '
            f'fill="#000000">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
