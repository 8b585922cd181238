"""Continuity probe: evaluate a script along a one-parameter family.

The family maps a step size ``h`` to arguments; ``h = 0`` is the boundary
case (a point on a line, two coinciding points, ...).  Deviations are taken
from the boundary output when it is defined, otherwise between successive
steps.  A continuous construction shrinks them at least linearly in ``h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..field.backend import CONSTRUCTIBLE
from ..geometry.partial import Undefined
from ..geometry.primitives import Circle, Line, Point
from .interpreter import evaluate

DEFAULT_STEPS = (Fraction(1, 4), Fraction(1, 16), Fraction(1, 64))


def features(B, v) -> list[float]:
    """Real coordinates describing a value: points, defining points, center and radius."""
    if isinstance(v, Point):
        return [float(B.to_fraction(v.x)), float(B.to_fraction(v.y))]
    if isinstance(v, Line):
        return features(B, v.a) + features(B, v.b)
    if isinstance(v, Circle):
        return features(B, v.center) + [math.sqrt(float(B.to_fraction(v.radius_sq)))]
    raise TypeError(f"not a geometric value: {v!r}")


def _distance(u, v) -> float:
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(u, v)))


@dataclass
class ProbeReport:
    script: str
    steps: list
    values: list
    boundary: list | None
    deviations: list
    ratios: list
    threshold: float
    undefined: list = field(default_factory=list)

    @property
    def continuous(self) -> bool:
        return not self.undefined and all(r <= self.threshold for r in self.ratios)

    @property
    def flagged(self) -> bool:
        """Discontinuity suspect: deviations fail to shrink with the step."""
        return not self.continuous

    @property
    def max_deviation(self) -> float:
        return max(self.deviations, default=0.0)

    def to_dict(self) -> dict:
        return {
            "script": self.script,
            "steps": [str(h) for h in self.steps],
            "values": self.values,
            "boundary": self.boundary,
            "deviations": self.deviations,
            "ratios": self.ratios,
            "threshold": self.threshold,
            "undefined": self.undefined,
            "continuous": self.continuous,
        }


def continuity_probe(script, family, steps=DEFAULT_STEPS, backend=CONSTRUCTIBLE,
                     threshold: float = 0.5) -> ProbeReport:
    """Evaluate ``script`` on ``family(h)`` for each step and at ``h = 0``."""
    B = backend
    steps = [Fraction(h) for h in steps]
    values, undefined = [], []
    for h in steps:
        r = evaluate(script, family(h), B)
        if isinstance(r.result, Undefined):
            values.append(None)
            undefined.append({"step": str(h), "reason": r.result.reason, "origin": r.result.origin})
        else:
            values.append(features(B, r.result))
    base = evaluate(script, family(Fraction(0)), B).result
    boundary = None if isinstance(base, Undefined) else features(B, base)

    deviations = []
    if boundary is not None:
        deviations = [_distance(v, boundary) for v in values if v is not None]
    else:
        defined = [v for v in values if v is not None]
        deviations = [_distance(a, b) for a, b in zip(defined, defined[1:])]
    ratios = []
    for d0, d1 in zip(deviations, deviations[1:]):
        if d0 == 0:
            ratios.append(0.0 if d1 == 0 else math.inf)
        else:
            ratios.append(d1 / d0)
    return ProbeReport(script.name, steps, values, boundary, deviations, ratios, threshold, undefined)


def quarter_turns(h: Fraction) -> int:
    """Quarter turns for the spiral family: one more each time ``h`` shrinks by 4."""
    if h == 0:
        return 0
    return round(math.log(1 / float(h), 4))


def spiral(h: Fraction, center=(0, 0)):
    """A point at distance ``h`` from ``center``, turned by :func:`quarter_turns`."""
    k = quarter_turns(h) % 4
    dx, dy = [(1, 0), (0, 1), (-1, 0), (0, -1)][k]
    return (center[0] + h * dx, center[1] + h * dy)


# ---------------------------------------------------------------- bundled families

ROTATE_SOURCE = """// Rotation of a on Line(o,p) onto Line(o,q).
Point Rot(Point p, Point o, Point q, Point a)
{ z = Rotate(p,o,q,a);
  return z;
}
"""

REFLECT_SOURCE = """// Reflection of x in L.
Point Ref(Point x, Line L)
{ z = Reflect(x,L);
  return z;
}
"""


def _pt(B, x, y) -> Point:
    return Point(B.coerce(x), B.coerce(y))


def uniformity_families(B=CONSTRUCTIBLE) -> dict:
    """Probe families at the classical case boundaries, plus the spiral control.

    Maps a name to ``(script, family, expect_continuous)``.  The boundary at
    ``h = 0`` is: x on L for ``perp`` and ``reflect``; a = b for
    ``midpoint``; a = o for ``rotate``.  ``spiral`` feeds Euclid's own I.2
    a point b circling into a, which it should flag as discontinuous.
    """
    from .corpus import load_script
    from .parser import parse

    X = Line(_pt(B, 0, 0), _pt(B, 1, 0))

    def spiral_args(h):
        bx, by = spiral(h)
        return {"a": _pt(B, 0, 0), "b": _pt(B, bx, by), "c": _pt(B, 1, 1)}

    return {
        "perp": (load_script("perp"),
                 lambda h: {"x": _pt(B, Fraction(1, 2), h), "a": _pt(B, 0, 0), "b": _pt(B, 1, 0)},
                 True),
        "midpoint": (load_script("m"),
                     lambda h: {"a": _pt(B, 1, 0), "b": _pt(B, 1 + h, 0),
                                "p": _pt(B, 0, 0), "q": _pt(B, 1, 0)},
                     True),
        "rotate": (parse(ROTATE_SOURCE),
                   lambda h: {"p": _pt(B, 1, 0), "o": _pt(B, 0, 0), "q": _pt(B, 1, 1), "a": _pt(B, h, 0)},
                   True),
        "reflect": (parse(REFLECT_SOURCE),
                    lambda h: {"x": _pt(B, Fraction(1, 2), h), "L": X},
                    True),
        "spiral": (load_script("euclid_i2"), spiral_args, False),
    }
