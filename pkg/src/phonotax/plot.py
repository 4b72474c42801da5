"""Scatter output: log parse probability against votes.

One CSV and one standalone SVG, both deterministic for a given input
(no timestamps, stable tick selection), so re-runs are byte-identical.
The SVG is self-contained with a fixed 800x450 viewBox.
"""

from __future__ import annotations

import csv
import io
import math
from typing import Sequence

ScatterRow = tuple[str, float, int]

SVG_OPEN = '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 800 450">'

X_LABEL = "ln(parse probability)"
Y_LABEL = "# votes against well-formedness"

# plot area inside the fixed canvas
_LEFT, _RIGHT, _TOP, _BOTTOM = 70.0, 780.0, 20.0, 390.0


def scatter_csv(rows: Sequence[ScatterRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("word_id", "ln_p", "votes"))
    for word_id, ln_p, votes in rows:
        writer.writerow((word_id, repr(ln_p), votes))
    return buf.getvalue()


def _x_ticks(lo: float, hi: float) -> list[float]:
    span = hi - lo
    step = next(s for s in (1, 2, 5, 10, 20, 50, 100) if span / s <= 10)
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9:
        ticks.append(float(t))
        t += step
    return ticks


def scatter_svg(rows: Sequence[ScatterRow]) -> str:
    """Render votes (0..12) against ln p(word) as a standalone SVG."""
    xs = [ln_p for _, ln_p, _ in rows]
    lo = min(xs, default=-1.0)
    hi = max(xs, default=0.0)
    if lo == hi:
        lo, hi = lo - 1.0, hi + 1.0
    pad = 0.04 * (hi - lo)
    lo, hi = lo - pad, hi + pad

    def px(x: float) -> float:
        return _LEFT + (x - lo) / (hi - lo) * (_RIGHT - _LEFT)

    def py(v: float) -> float:
        return _BOTTOM - v / 12.0 * (_BOTTOM - _TOP)

    parts = [
        SVG_OPEN,
        '<rect x="0" y="0" width="800" height="450" fill="white"/>',
        '<g stroke="black" stroke-width="1">',
        f'<line x1="{_LEFT}" y1="{_BOTTOM}" x2="{_RIGHT}" y2="{_BOTTOM}"/>',
        f'<line x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{_BOTTOM}"/>',
        "</g>",
        '<g font-family="sans-serif" font-size="12" fill="black">',
    ]
    for t in _x_ticks(lo, hi):
        x = px(t)
        parts.append(f'<line x1="{x:.2f}" y1="{_BOTTOM}" x2="{x:.2f}" y2="{_BOTTOM + 5}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{_BOTTOM + 18}" text-anchor="middle">{t:g}</text>')
    for v in range(0, 13, 2):
        y = py(v)
        parts.append(f'<line x1="{_LEFT - 5}" y1="{y:.2f}" x2="{_LEFT}" y2="{y:.2f}" stroke="black"/>')
        parts.append(f'<text x="{_LEFT - 9}" y="{y + 4:.2f}" text-anchor="end">{v}</text>')
    mid_x = (_LEFT + _RIGHT) / 2
    mid_y = (_TOP + _BOTTOM) / 2
    parts.append(f'<text x="{mid_x}" y="438" text-anchor="middle">{X_LABEL}</text>')
    parts.append(
        f'<text x="16" y="{mid_y}" text-anchor="middle" transform="rotate(-90 16 {mid_y})">{Y_LABEL}</text>'
    )
    parts.append("</g>")
    parts.append('<g fill="none" stroke="black" stroke-width="1">')
    for _, ln_p, votes in rows:
        parts.append(f'<circle cx="{px(ln_p):.2f}" cy="{py(votes):.2f}" r="4"/>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
