"""Static SVG drawings of a point set and a matching family."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import PointSet
from .matching import MatchingFamily

PALETTE = (
    "#d62728",  # red
    "#2ca02c",  # green
    "#1f77b4",  # blue
    "#ff7f0e",  # orange
    "#9467bd",  # purple
    "#8c564b",  # brown
    "#e377c2",  # pink
    "#17becf",  # cyan
    "#bcbd22",  # olive
    "#000080",  # navy
    "#008080",  # teal
    "#7f7f7f",  # grey
)


def color_for(i: int) -> str:
    return PALETTE[i % len(PALETTE)]


def render_svg(ps: PointSet, family: MatchingFamily | None = None, *, size: int = 600, margin: int = 40) -> str:
    """One stroke colour per matching, stones dashed, vertices labelled."""
    xs = [p.x for p in ps.points]
    ys = [p.y for p in ps.points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = (size - 2 * margin) / span
    x0, y1 = min(xs), max(ys)

    def xy(i: int) -> tuple[float, float]:
        p = ps.points[i]
        return round(margin + (p.x - x0) * scale, 2), round(margin + (y1 - p.y) * scale, 2)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if family is not None:
        for k, m in enumerate(family.matchings):
            col = color_for(k)
            out.append(f'<g id="matching-{k}" stroke="{col}" stroke-width="2">')
            for e in m.sorted_edges():
                (ax, ay), (bx, by) = xy(e.a), xy(e.b)
                dash = ' stroke-dasharray="6 3"' if e in m.stones else ""
                out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"{dash}/>')
            out.append("</g>")
    out.append('<g id="points" font-family="sans-serif" font-size="12">')
    for i, label in enumerate(ps.labels):
        x, y = xy(i)
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
        out.append(f'<text x="{round(x + 6, 2)}" y="{round(y - 6, 2)}">{escape(label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
