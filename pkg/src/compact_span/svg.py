"""Minimal self-contained SVG line charts.

Output depends only on the input numbers (fixed precision, fixed palette),
so identical data produce byte-identical files.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd")
MARKERS = ("circle", "square", "diamond", "triangle", "circle")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = next(s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw)
    start = math.floor(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


def _marker(kind: str, x: float, y: float, color: str) -> str:
    r = 2.5
    if kind == "square":
        return f'<rect x="{_fmt(x - r)}" y="{_fmt(y - r)}" width="{_fmt(2 * r)}" height="{_fmt(2 * r)}" fill="{color}"/>'
    if kind == "diamond":
        pts = f"{_fmt(x)},{_fmt(y - r - 1)} {_fmt(x + r + 1)},{_fmt(y)} {_fmt(x)},{_fmt(y + r + 1)} {_fmt(x - r - 1)},{_fmt(y)}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    if kind == "triangle":
        pts = f"{_fmt(x)},{_fmt(y - r - 1)} {_fmt(x + r + 1)},{_fmt(y + r)} {_fmt(x - r - 1)},{_fmt(y + r)}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}" fill="{color}"/>'


def line_chart(series: dict[str, list[float]], title: str, xlabel: str, ylabel: str,
               width: int = 900, height: int = 420) -> str:
    """Overlayed line series against their index (0..len-1)."""
    left, right, top, bottom = 70, 170, 40, 55
    pw, ph = width - left - right, height - top - bottom
    finite = [v for vals in series.values() for v in vals if v is not None and math.isfinite(v)]
    lo = min(0.0, min(finite)) if finite else 0.0
    hi = max(finite) if finite else 1.0
    ticks = _nice_ticks(lo, hi)
    lo, hi = ticks[0], ticks[-1] if ticks[-1] > ticks[0] else ticks[0] + 1.0
    npts = max((len(v) for v in series.values()), default=0)

    def sx(i):
        return left + (pw * i / (npts - 1) if npts > 1 else pw / 2)

    def sy(v):
        return top + ph * (1.0 - (v - lo) / (hi - lo))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.0f}" y="22" text-anchor="middle" font-size="15">{escape(title)}</text>',
    ]
    for t in ticks:
        y = sy(t)
        out.append(f'<line x1="{left}" y1="{_fmt(y)}" x2="{left + pw}" y2="{_fmt(y)}" stroke="#dddddd"/>')
        out.append(f'<text x="{left - 6}" y="{_fmt(y + 4)}" text-anchor="end">{t:g}</text>')
    out.append(f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>')
    for i in range(0, npts, max(1, npts // 10)):
        out.append(f'<text x="{_fmt(sx(i))}" y="{top + ph + 16}" text-anchor="middle">{i}</text>')
    out.append(f'<text x="{left + pw / 2:.0f}" y="{height - 12}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text x="18" y="{top + ph / 2:.0f}" text-anchor="middle" '
               f'transform="rotate(-90 18 {top + ph / 2:.0f})">{escape(ylabel)}</text>')

    for k, (name, vals) in enumerate(series.items()):
        color, mk = PALETTE[k % len(PALETTE)], MARKERS[k % len(MARKERS)]
        pts = [(sx(i), sy(v)) for i, v in enumerate(vals) if v is not None and math.isfinite(v)]
        if pts:
            path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.2"/>')
            out.extend(_marker(mk, x, y, color) for x, y in pts)
        ly = top + 14 + 20 * k
        lx = left + pw + 14
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(_marker(mk, lx + 11, ly, color))
        out.append(f'<text x="{lx + 28}" y="{ly + 4}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
