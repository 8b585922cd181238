"""Coordinate frames: origin, unit point, the point I, and the two axes."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ContractError
from .partial import Undefined, strict
from .primitives import Line, Point, circle, distinct_from, dot, ilc2, line, vec
from .uniform import perp, project, reflect_line, rotate


@dataclass(frozen=True, eq=False)
class Frame:
    """``origin`` (0), ``unit`` (1), ``i_point`` (I with 0I = 01), and both axes."""

    origin: Point
    unit: Point
    i_point: Point
    x_axis: Line
    y_axis: Line

    @classmethod
    def standard(cls, F) -> "Frame":
        o = Point(F.zero, F.zero)
        u = Point(F.one, F.zero)
        i = Point(F.zero, F.one)
        return cls(o, u, i, Line(o, u), Line(o, i))

    @classmethod
    def on_line(cls, origin: Point, unit: Point) -> "Frame":
        """Frame with x-axis ``Line(origin, unit)``; the y-axis is built uniformly."""
        X = line(origin, unit)
        if isinstance(X, Undefined):
            raise ContractError("a frame needs unit != origin")
        Y = perp(origin, X)
        i = ilc2(Y, circle(origin, unit))
        return cls(origin, unit, i, X, line(origin, i))

    @property
    def field(self):
        return self.origin.field

    def axis_point(self, value) -> Point:
        """The point of the x-axis at coordinate ``value``."""
        F = self.field
        value = F.coerce(value)
        o, u = self.origin, self.unit
        return Point(o.x + value * (u.x - o.x), o.y + value * (u.y - o.y))

    def value_of(self, p: Point):
        """Signed coordinate of ``p`` along the x-axis, in units of ``|01|``."""
        F = self.field
        d = vec(self.origin, self.unit)
        return F.div(dot(vec(self.origin, p), d), dot(d, d))

    def coord_x(self, p: Point):
        return project(p, self.x_axis)

    def coord_y(self, p: Point):
        """Project onto the y-axis, then turn clockwise onto the x-axis."""
        return self.to_x_axis(project(p, self.y_axis))

    def to_y_axis(self, x: Point):
        """Quarter turn counterclockwise from the x-axis to the y-axis."""
        return rotate(self.unit, self.origin, self.i_point, x)

    def to_x_axis(self, y: Point):
        """Quarter turn clockwise from the y-axis to the x-axis."""
        return rotate(self.i_point, self.origin, self.unit, y)

    def make_point(self, x: Point, y: Point):
        """The point with coordinates ``x`` and ``y`` (both given on the x-axis)."""
        z = self.to_y_axis(y)
        U = perp(x, self.x_axis)
        return project(z, U)


@strict
def reflect_point(x: Point, p: Point):
    """Reflection of ``x`` in ``p``, built in a frame centered at ``p``.

    Project ``x`` on both axes, reflect each projection in the other axis,
    turn the y-part onto the x-axis and reassemble with ``make_point``.
    """
    f = Frame.on_line(p, distinct_from(p))
    xa = project(x, f.x_axis)
    ya = project(x, f.y_axis)
    a = reflect_line(ya, f.x_axis)
    b = reflect_line(xa, f.y_axis)
    c = f.to_x_axis(a)
    return f.make_point(b, c)
