"""Small constructors shared by the geometry tests."""

from fractions import Fraction

from euclid_kernel.geometry.primitives import Point, circle, line


def pt(F, x, y):
    def c(v):
        return F.parse(v) if isinstance(v, str) else F.coerce(Fraction(v))

    return Point(c(x), c(y))


def ln(F, a, b):
    return line(pt(F, *a), pt(F, *b))


def circ(F, center, through):
    return circle(pt(F, *center), pt(F, *through))
