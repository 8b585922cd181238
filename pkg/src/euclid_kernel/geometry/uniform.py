"""Uniform constructions: no case split on whether points coincide or lie on lines.

Each function follows a fixed ruler-and-compass script built from the five
elementary intersections, so its output depends continuously on its inputs.
"""

from __future__ import annotations

from ..errors import ContractError
from .partial import Undefined, strict
from .primitives import (
    Line,
    Point,
    circle,
    circle3,
    cross,
    ilc1,
    ilc2,
    intersect_circles,
    intersect_line_circle,
    intersect_lines,
    line,
    on_circle,
    on_line,
    vec,
)


@strict
def midpoint(a: Point, b: Point):
    """Classical midpoint via two circles; undefined when ``a = b``."""
    C = circle(a, b)
    K = circle(b, a)
    PQ = intersect_circles(C, K)
    if isinstance(PQ, Undefined):
        return PQ
    return intersect_lines(line(*PQ), line(a, b))


@strict
def perp(x: Point, L: Line):
    """The line through ``x`` perpendicular to ``L``, whether or not ``x`` is on ``L``."""
    a, b = L.a, L.b
    Q = circle3(b, x, a)
    c = ilc2(L, Q)
    C = circle3(x, a, c)
    pq = intersect_line_circle(L, C)
    if isinstance(pq, Undefined):
        return pq
    p, q = pq
    de = intersect_circles(circle(p, q), circle(q, p))
    if isinstance(de, Undefined):
        return de
    return line(*de)


@strict
def project(p: Point, L: Line):
    """Foot of the perpendicular from ``p`` to ``L``."""
    return intersect_lines(perp(p, L), L)


@strict
def para(p: Point, L: Line):
    """The line through ``p`` parallel to ``L`` (equal to ``L`` when ``p`` is on it)."""
    return perp(p, perp(p, L))


@strict
def uniform_midpoint(a: Point, b: Point, p: Point, q: Point):
    """Midpoint of ``a`` and ``b`` on ``Line(p, q)``, defined also when ``a = b``."""
    L = line(p, q)
    if isinstance(L, Undefined):
        raise ContractError("uniform midpoint needs p != q")
    if not (on_line(a, L) and on_line(b, L)):
        raise ContractError("uniform midpoint needs a and b on Line(p, q)")
    u = ilc2(L, circle3(b, p, q))
    B = ilc2(L, circle3(u, a, b))
    v = ilc1(L, circle3(a, p, q))
    A = ilc1(L, circle3(v, a, b))
    return midpoint(A, B)


def midpoint_on(a: Point, b: Point, L: Line):
    return uniform_midpoint(a, b, L.a, L.b)


@strict
def perpendicular_bisector(p: Point, q: Point):
    """``Line(d1, d2)`` through the apexes of the equilateral triangles on ``pq``."""
    C = circle(p, q)
    K = circle(q, p)
    de = intersect_circles(C, K)
    if isinstance(de, Undefined):
        return de
    return line(*de)


@strict
def rotate(p: Point, o: Point, q: Point, a: Point):
    """Carry ``a`` on ``Line(o, p)`` to ``Line(o, q)``, sending ray ``op`` to ray ``oq``.

    The result is the reflection of ``a`` in the bisector of angle ``poq``;
    it is ``o`` exactly when ``a = o``.
    """
    if p == o or q == o:
        raise ContractError("rotation needs p != o and q != o")
    if cross(vec(o, p), vec(o, q)).is_zero():
        raise ContractError("rotation needs a nondegenerate angle poq")
    if not on_line(a, Line(o, p)):
        raise ContractError("rotation needs a on Line(o, p)")
    oq = line(o, q)
    p2 = ilc2(oq, circle(o, p))
    bisector = perpendicular_bisector(p, p2)
    K = perp(a, line(o, p))
    e = intersect_lines(K, bisector)
    return project(e, oq)


@strict
def reflect_line(x: Point, L: Line):
    """Reflection of ``x`` in ``L`` as two quarter turns about the foot of ``x``."""
    K = perp(x, L)
    if isinstance(K, Undefined):
        return K
    d, e = K.a, K.b
    f = intersect_lines(K, L)
    q = ilc2(L, circle(f, d))
    z1 = rotate(d, f, q, x)
    return rotate(q, f, e, z1)


@strict
def other(p: Point, L: Line, C):
    """The second intersection of ``L`` and ``C`` given the first, ``p``."""
    if not (on_line(p, L) and on_circle(p, C)):
        raise ContractError("Other needs p on both the line and the circle")
    K = perp(C.center, L)
    return reflect_line(p, K)


@strict
def other2(p: Point, C, K):
    """The second intersection of two circles given the first, ``p``."""
    if not (on_circle(p, C) and on_circle(p, K)):
        raise ContractError("Other2 needs p on both circles")
    a, b = C.center, K.center
    if a == b:
        if (C.radius_sq - K.radius_sq).is_zero():
            return Undefined("coincident", "circles coincide")
        return Undefined("concentric-distinct")
    return reflect_line(p, line(a, b))
