"""The constructions a script may call, with their overloads by sort."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..geometry import arithmetic as ar
from ..geometry import primitives as pr
from ..geometry import uniform as un
from ..geometry.frame import reflect_point

P, L, C = "Point", "Line", "Circle"


@dataclass(frozen=True)
class Signature:
    args: tuple
    result: str
    fn: Callable
    uses_frame: bool = False


def _pts_line(fn):
    """Adapt ``fn(L, C)`` to the points form ``fn(p, q, C)`` with ``L = Line(p, q)``."""
    def wrapper(p, q, Cc):
        return fn(pr.line(p, q), Cc)
    return wrapper


def _perp_points(x, a, b):
    return un.perp(x, pr.line(a, b))


def _framed(fn):
    def wrapper(frame, *args):
        return fn(*args, frame)
    return wrapper


OPS: dict[str, list[Signature]] = {
    "Line": [Signature((P, P), L, pr.line)],
    "Circle": [Signature((P, P), C, pr.circle)],
    "Circle3": [Signature((P, P, P), C, pr.circle3)],
    "center": [Signature((C,), P, pr.center)],
    "IntersectLines": [Signature((L, L), P, pr.intersect_lines)],
    "IntersectLineCircle1": [
        Signature((L, C), P, pr.ilc1),
        Signature((P, P, C), P, _pts_line(pr.ilc1)),
    ],
    "IntersectLineCircle2": [
        Signature((L, C), P, pr.ilc2),
        Signature((P, P, C), P, _pts_line(pr.ilc2)),
    ],
    "IntersectCircles1": [Signature((C, C), P, pr.ic1)],
    "IntersectCircles2": [Signature((C, C), P, pr.ic2)],
    "Extend": [Signature((P, P, P, P), P, pr.extend)],
    "Midpoint": [
        Signature((P, P), P, un.midpoint),
        Signature((P, P, L), P, un.midpoint_on),
        Signature((P, P, P, P), P, un.uniform_midpoint),
    ],
    "Perp": [
        Signature((P, L), L, un.perp),
        Signature((P, P, P), L, _perp_points),
    ],
    "Para": [Signature((P, L), L, un.para)],
    "Project": [Signature((P, L), P, un.project)],
    "Rotate": [Signature((P, P, P, P), P, un.rotate)],
    "Reflect": [
        Signature((P, L), P, un.reflect_line),
        Signature((P, P), P, reflect_point),
    ],
    "Other": [Signature((P, L, C), P, un.other)],
    "Other2": [Signature((P, C, C), P, un.other2)],
    "Add": [Signature((P, P), P, _framed(ar.geo_add), True)],
    "HilbertMultiply": [Signature((P, P), P, _framed(ar.hilbert_mul_unsigned), True)],
    "Multiply": [Signature((P, P), P, _framed(ar.geo_mul), True)],
    "Reciprocal": [Signature((P,), P, _framed(ar.geo_reciprocal), True)],
    "SquareRoot": [Signature((P,), P, _framed(ar.geo_square_root), True)],
    "MakePoint": [Signature((P, P), P, lambda f, x, y: f.make_point(x, y), True)],
}

# Names the interpreter binds from the frame: 0, 1, I and the x-axis L.
FRAME_CONSTANTS = {"0": P, "1": P, "I": P, "L": L}


def frame_value(frame, name: str):
    return {"0": frame.origin, "1": frame.unit, "I": frame.i_point, "L": frame.x_axis}[name]


def resolve(op: str, sorts: tuple) -> Signature | None:
    for sig in OPS.get(op, ()):
        if sig.args == sorts:
            return sig
    return None


def arities(op: str) -> list[int]:
    return sorted({len(s.args) for s in OPS.get(op, ())})


def sort_of(value) -> str | None:
    if isinstance(value, pr.Point):
        return P
    if isinstance(value, pr.Line):
        return L
    if isinstance(value, pr.Circle):
        return C
    return None
