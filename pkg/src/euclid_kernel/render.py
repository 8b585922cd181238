"""Deterministic SVG diagrams of evaluated scripts.

Points are drawn as dots with labels, lines clipped to the bounding box of
the construction, circles as circles.  Undefined steps are listed in a
legend under the figure.  All coordinates are exact rationals derived from
the values and printed to 12 significant digits, so equal input gives
byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from xml.sax.saxutils import escape

from .field.text import significant
from .geometry.partial import Undefined
from .geometry.primitives import Circle, Line, Point

SIZE = 600
MARGIN = Fraction(1, 10)
LEGEND_LINE = 18


def _num(q: Fraction) -> str:
    return significant(Fraction(q), 12)


def _isqrt_fraction(q: Fraction, prec: int = 40) -> Fraction:
    """A rational within ``2**-prec`` of ``sqrt(q)``; deterministic."""
    scale = 1 << (2 * prec)
    return Fraction(isqrt(q.numerator * scale // q.denominator), 1 << prec)


class _Scene:
    def __init__(self, B):
        self.B = B
        self.points = []   # (name, x, y)
        self.lines = []    # (name, (x1, y1), (x2, y2))
        self.circles = []  # (name, cx, cy, r)
        self.notes = []    # (name, text)

    def frac(self, x):
        return self.B.to_fraction(x, prec=64)

    def add(self, name: str, v):
        try:
            if isinstance(v, Point):
                self.points.append((name, self.frac(v.x), self.frac(v.y)))
            elif isinstance(v, Line):
                a = (self.frac(v.a.x), self.frac(v.a.y))
                b = (self.frac(v.b.x), self.frac(v.b.y))
                self.lines.append((name, a, b))
            elif isinstance(v, Circle):
                r = _isqrt_fraction(self.frac(v.radius_sq))
                self.circles.append((name, self.frac(v.center.x), self.frac(v.center.y), r))
        except ValueError:
            self.notes.append((name, "not finitely bounded; not drawn"))

    def bbox(self):
        xs, ys = [], []
        for _, x, y in self.points:
            xs.append(x)
            ys.append(y)
        for _, a, b in self.lines:
            xs += [a[0], b[0]]
            ys += [a[1], b[1]]
        for _, cx, cy, r in self.circles:
            xs += [cx - r, cx + r]
            ys += [cy - r, cy + r]
        if not xs:
            return Fraction(-1), Fraction(-1), Fraction(1), Fraction(1)
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, Fraction(1))
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        half = span / 2 * (1 + 2 * MARGIN)
        return cx - half, cy - half, cx + half, cy + half


def _clip(a, b, box):
    """Segment of the infinite line through ``a`` and ``b`` inside ``box`` (Liang-Barsky)."""
    x0, y0, x1, y1 = box
    dx, dy = b[0] - a[0], b[1] - a[1]
    lo, hi = None, None
    for p, q in ((-dx, a[0] - x0), (dx, x1 - a[0]), (-dy, a[1] - y0), (dy, y1 - a[1])):
        if p == 0:
            if q < 0:
                return None
            continue
        t = Fraction(q) / p
        if p < 0:
            lo = t if lo is None else max(lo, t)
        else:
            hi = t if hi is None else min(hi, t)
    if lo is None or hi is None or lo > hi:
        return None
    return (a[0] + lo * dx, a[1] + lo * dy), (a[0] + hi * dx, a[1] + hi * dy)


def render_svg(result) -> str:
    """SVG text for an :class:`~euclid_kernel.script.EvalResult`."""
    B = result.backend
    scene = _Scene(B)
    script = result.script
    for name, v in result.arguments.items():
        scene.add(name, v)
    for name, v in result.bindings.items():
        if not isinstance(v, Undefined):
            scene.add(name, v)
    if not isinstance(result.result, Undefined):
        scene.add("result", result.result)
    box = scene.bbox()
    x0, y0, x1, y1 = box
    scale = Fraction(SIZE) / (x1 - x0)

    def sx(x):
        return _num((x - x0) * scale)

    def sy(y):
        return _num((y1 - y) * scale)

    legend = [t for t in result.trace if not t.defined and t.origin == t.name]
    height = SIZE + LEGEND_LINE * (len(legend) + len(scene.notes) + (1 if legend or scene.notes else 0))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{height}" '
        f'viewBox="0 0 {SIZE} {height}">',
        f"<title>{escape(script.name)}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white" stroke="#999"/>',
    ]
    for name, cx, cy, r in scene.circles:
        out.append(
            f'<circle class="circle" data-name="{escape(name)}" cx="{sx(cx)}" cy="{sy(cy)}" '
            f'r="{_num(r * scale)}" fill="none" stroke="#3465a4"/>'
        )
    for name, a, b in scene.lines:
        seg = _clip(a, b, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        out.append(
            f'<line class="line" data-name="{escape(name)}" x1="{sx(ax)}" y1="{sy(ay)}" '
            f'x2="{sx(bx)}" y2="{sy(by)}" stroke="#4e9a06"/>'
        )
    for name, x, y in scene.points:
        out.append(
            f'<circle class="point" data-name="{escape(name)}" cx="{sx(x)}" cy="{sy(y)}" r="3" fill="#cc0000"/>'
        )
        out.append(
            f'<text class="label" x="{sx(x)}" y="{sy(y)}" dx="5" dy="-5" font-size="12">{escape(name)}</text>'
        )
    row = SIZE + LEGEND_LINE
    if legend or scene.notes:
        out.append(f'<text class="legend-title" x="8" y="{row}" font-size="12">undefined steps</text>')
        row += LEGEND_LINE
    for t in legend:
        out.append(
            f'<text class="legend" x="8" y="{row}" font-size="12">'
            f"{escape(t.name)} = {escape(t.expr)}: undefined({escape(t.reason)})</text>"
        )
        row += LEGEND_LINE
    for name, text in scene.notes:
        out.append(f'<text class="legend" x="8" y="{row}" font-size="12">{escape(name)}: {escape(text)}</text>')
        row += LEGEND_LINE
    out.append("</svg>")
    return "\n".join(out) + "\n"
