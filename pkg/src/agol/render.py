"""
Standalone SVG pictures of the tracks in an Agol cycle or a collapse.

Each panel is the unit-square fundamental domain (the pillowcase square for
the four-punctured sphere). The curves of the two endpoint slopes are drawn as
straight closed geodesics through the square's centre, where they meet once;
the flattened corner is drawn as a short smooth arc.
"""

from __future__ import annotations

import math
from fractions import Fraction
from xml.sax.saxutils import escape

from .farey import FareyInterval
from .traintrack import SPHERE4, AgolCycle, CollapseResult

PANEL = 180
PAD = 30


def _breakpoints(a: int, b: int) -> list[Fraction]:
    """Parameters t in [0, 1] where (1/2 + a t, 1/2 + b t) crosses a square edge."""
    ts = {Fraction(0), Fraction(1)}
    for coef in (a, b):
        if not coef:
            continue
        for k in range(-abs(coef), abs(coef) + 2):
            t = (k - Fraction(1, 2)) / coef
            if 0 < t < 1:
                ts.add(t)
    return sorted(ts)


def _segments(a: int, b: int):
    """Pieces of the slope b/a curve through (1/2, 1/2), reduced into the unit square."""
    ts = _breakpoints(a, b)
    out = []
    for t0, t1 in zip(ts, ts[1:]):
        mid = (t0 + t1) / 2
        ox = math.floor(Fraction(1, 2) + a * mid)
        oy = math.floor(Fraction(1, 2) + b * mid)
        p0 = (Fraction(1, 2) + a * t0 - ox, Fraction(1, 2) + b * t0 - oy)
        p1 = (Fraction(1, 2) + a * t1 - ox, Fraction(1, 2) + b * t1 - oy)
        out.append((p0, p1))
    return out


def _fmt(v) -> str:
    return f"{float(v):.4g}"


def _panel(ox: float, oy: float, interval: FareyInterval, measure, caption: str, sphere: bool) -> list[str]:
    def xy(p):
        return ox + float(p[0]) * PANEL, oy + (1 - float(p[1])) * PANEL

    def pt(p):
        return "{:.2f},{:.2f}".format(*xy(p))

    parts = [f'<rect x="{ox}" y="{oy}" width="{PANEL}" height="{PANEL}" class="domain"/>']
    if sphere:
        for cx, cy in ((0, 0), (1, 0), (0, 1), (1, 1)):
            parts.append(f'<circle cx="{ox + cx * PANEL}" cy="{oy + cy * PANEL}" r="4" class="puncture"/>')
    else:
        parts.append(f'<circle cx="{ox}" cy="{oy + PANEL}" r="4" class="puncture"/>')
    colours = ("left", "right")
    for (a, b), cls in zip(((interval.a, interval.b), (interval.c, interval.d)), colours):
        for p0, p1 in _segments(a, b):
            (x1, y1), (x2, y2) = xy(p0), xy(p1)
            parts.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" class="{cls}"/>')
    # smoothing at the single intersection: join the two directions by an arc
    c = (Fraction(1, 2), Fraction(1, 2))
    n1 = math.hypot(interval.a, interval.b)
    n2 = math.hypot(interval.c, interval.d)
    r = 0.12
    u = (-interval.a / n1 * r, -interval.b / n1 * r)
    v = (interval.c / n2 * r, interval.d / n2 * r)
    p_start = (0.5 + u[0], 0.5 + u[1])
    p_end = (0.5 + v[0], 0.5 + v[1])
    parts.append(f'<path d="M {pt(p_start)} Q {pt(c)} {pt(p_end)}" class="smooth"/>')
    x, y = measure
    parts.append(f'<text x="{ox}" y="{oy + PANEL + 16}" class="label">{escape(caption)}</text>')
    parts.append(f'<text x="{ox}" y="{oy + PANEL + 30}" class="label">x={_fmt(x)} y={_fmt(y)}</text>')
    return parts


_STYLE = """<style>
.domain{fill:none;stroke:#888;stroke-width:1}
.puncture{fill:#fff;stroke:#000}
.left{stroke:#1f5fbf;stroke-width:2}
.right{stroke:#bf3f1f;stroke-width:2}
.smooth{fill:none;stroke:#000;stroke-width:3}
.label{font-family:monospace;font-size:11px}
</style>"""


def _document(panels, title: str) -> str:
    width = PAD + len(panels) * (PANEL + PAD)
    height = PANEL + 2 * PAD + 40
    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(title)}</title>",
        _STYLE,
    ]
    for i, (interval, measure, caption, sphere) in enumerate(panels):
        body.extend(_panel(PAD + i * (PANEL + PAD), PAD, interval, measure, caption, sphere))
    body.append("</svg>")
    return "\n".join(body) + "\n"


def cycle_svg(c: AgolCycle) -> str:
    sphere = c.surface == SPHERE4
    panels = [(c.initial.interval, c.initial.measure, f"0: {c.initial.interval}", sphere)]
    for i, s in enumerate(c.steps, 1):
        panels.append((s.interval_after, s.measure_after, f"{i} {s.side}: {s.interval_after}", sphere))
    return _document(panels, f"Agol cycle of length {c.length} ({c.surface})")


def collapse_svg(c: CollapseResult) -> str:
    sphere = c.surface == SPHERE4
    panels = [(c.start.interval, c.start.measure, f"0: {c.start.interval}", sphere)]
    for i, s in enumerate(c.steps, 1):
        panels.append((s.interval_after, s.measure_after, f"{i} {s.side}: {s.interval_after}", sphere))
    return _document(panels, f"collapse to slope {c.curve_slope}")
