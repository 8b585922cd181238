"""Arithmetic on the x-axis of a frame, carried out by construction.

Every value is a point of ``f.x_axis``.  The functions here never read a
coordinate to decide what to do; the only scalar tests are the sign
preconditions of ``hilbert_mul_unsigned``.
"""

from __future__ import annotations

from ..errors import ContractError
from .frame import Frame
from .partial import Undefined, strict
from .primitives import (
    Point,
    circle,
    cross,
    extend,
    ilc1,
    ilc2,
    intersect_lines,
    line,
    on_line,
    vec,
)
from .uniform import midpoint, midpoint_on, other, perp, project, reflect_line, rotate


def frame_for(p: Point, f: Frame | None) -> Frame:
    return f if f is not None else Frame.standard(p.field)


def _check_axis(f: Frame, *points):
    for p in points:
        if not on_line(p, f.x_axis):
            raise ContractError("axis values must lie on the x-axis")


def minus_one(f: Frame):
    """The point -1: the far intersection of the x-axis with Circle(0, 1)."""
    return ilc2(line(f.unit, f.origin), circle(f.origin, f.unit))


@strict
def geo_add(A: Point, B: Point, f: Frame | None = None):
    """Signed sum by rotating, projecting and rotating back.

    ``R`` sits on the negative x-axis beyond ``|A| + |B| + 1``, so the
    rotations about ``O`` and ``B`` never meet a degenerate angle.
    """
    f = frame_for(A, f)
    _check_axis(f, A, B)
    O = f.origin
    R = extend(O, minus_one(f), O, A)
    R = extend(O, R, O, B)
    R = extend(O, R, O, f.unit)
    C = f.i_point
    H = perp(B, f.x_axis)
    D = project(C, H)
    U = rotate(R, O, C, A)
    V = project(U, H)
    return rotate(D, B, R, V)


@strict
def abs_val(x: Point, f: Frame | None = None):
    """``|x|`` as the extension of segment (-1)0 by ``|0x|``."""
    f = frame_for(x, f)
    _check_axis(f, x)
    return extend(minus_one(f), f.origin, f.origin, x)


@strict
def geo_neg(x: Point, f: Frame | None = None):
    f = frame_for(x, f)
    _check_axis(f, x)
    return reflect_line(x, f.y_axis)


@strict
def pos_part(a: Point, f: Frame | None = None):
    """``max(a, 0)``, the uniform midpoint of ``|a|`` and ``a``."""
    f = frame_for(a, f)
    return midpoint_on(abs_val(a, f), a, f.x_axis)


@strict
def neg_part(a: Point, f: Frame | None = None):
    """``max(-a, 0)``, so that ``a = pos_part(a) - neg_part(a)``."""
    f = frame_for(a, f)
    return midpoint_on(abs_val(a, f), geo_neg(a, f), f.x_axis)


@strict
def add_nonneg(x: Point, y: Point, f: Frame | None = None):
    """``x + y`` for ``x >= 0`` by one extension from -1."""
    f = frame_for(x, f)
    return extend(minus_one(f), x, f.origin, y)


@strict
def sub_nonneg(x: Point, y: Point, f: Frame | None = None):
    """``x - y`` for ``x, y >= 0``: extend from ``x + 1`` back through ``x``."""
    f = frame_for(x, f)
    x1 = add_nonneg(x, f.unit, f)
    return extend(x1, x, f.origin, y)


@strict
def geo_sub(x: Point, y: Point, f: Frame | None = None):
    f = frame_for(x, f)
    return geo_add(x, geo_neg(y, f), f)


@strict
def geo_add_hartshorne(a: Point, b: Point, f: Frame | None = None):
    """Sum through positive and negative parts: ``(a+ + b+) - (a- + b-)``."""
    f = frame_for(a, f)
    _check_axis(f, a, b)
    plus = add_nonneg(pos_part(a, f), pos_part(b, f), f)
    minus = add_nonneg(neg_part(a, f), neg_part(b, f), f)
    return sub_nonneg(plus, minus, f)


@strict
def triangle_circumcenter(a: Point, b: Point, c: Point, mode: str = "general", L=None):
    """Point equidistant from ``a``, ``b`` and ``c``.

    In ``one-sided`` mode ``a`` and ``b`` lie on ``L`` and ``c`` does not;
    the center is found on the perpendicular to ``L`` at the uniform
    midpoint of ``ab``, so ``a = b`` gives the circle tangent to ``L`` at ``a``.
    """
    if mode == "general":
        if a == b or b == c or a == c:
            raise ContractError("general circumscription needs distinct points")
        if cross(vec(a, b), vec(a, c)).is_zero():
            return Undefined("collinear")
        M1 = perp(midpoint(a, b), line(a, b))
        M2 = perp(midpoint(b, c), line(b, c))
        return intersect_lines(M1, M2)
    if mode == "one-sided":
        if L is None or not (on_line(a, L) and on_line(b, L)):
            raise ContractError("one-sided circumscription needs a and b on L")
        if on_line(c, L):
            raise ContractError("one-sided circumscription needs c off L")
        K = perp(midpoint_on(a, b, L), L)
        M = perp(midpoint(a, c), line(a, c))
        return intersect_lines(M, K)
    raise ValueError(f"unknown circumscription mode {mode!r}")


def hilbert_center(a: Point, b: Point, f: Frame):
    return triangle_circumcenter(a, b, f.i_point, "one-sided", f.x_axis)


@strict
def hilbert_mul_unsigned(a: Point, b: Point, f: Frame | None = None):
    """Product of nonnegative ``a`` and ``b``.

    The circle through ``I``, ``a`` and ``b`` meets the y-axis again at the
    product; that point is turned back onto the x-axis.
    """
    f = frame_for(a, f)
    _check_axis(f, a, b)
    F = f.field
    if F.sign(f.value_of(a)) < 0 or F.sign(f.value_of(b)) < 0:
        raise ContractError("unsigned multiplication needs a >= 0 and b >= 0")
    e = hilbert_center(a, b, f)
    if isinstance(e, Undefined):
        return e
    d = other(f.i_point, f.y_axis, circle(e, f.i_point))
    return f.to_x_axis(d)


@strict
def geo_mul(a: Point, b: Point, f: Frame | None = None):
    """Signed product ``(a+ b+ + a- b-) - (a- b+ + a+ b-)``."""
    f = frame_for(a, f)
    _check_axis(f, a, b)
    ap, am = pos_part(a, f), neg_part(a, f)
    bp, bm = pos_part(b, f), neg_part(b, f)
    H = hilbert_mul_unsigned
    plus = add_nonneg(H(ap, bp, f), H(am, bm, f), f)
    minus = add_nonneg(H(am, bp, f), H(ap, bm, f), f)
    return sub_nonneg(plus, minus, f)


@strict
def geo_reciprocal(a: Point, f: Frame | None = None):
    """``1/a``: the circle through ``a`` and ``I`` centered on the line ``y = 1``.

    On the bounded backend the center escapes the ring when ``a`` is
    infinitesimal, and the result is ``undefined(out-of-ring)``.
    """
    f = frame_for(a, f)
    _check_axis(f, a)
    L = f.x_axis
    K = perp(f.origin, L)
    H = perp(f.i_point, K)
    J = perp(midpoint(a, f.i_point), line(a, f.i_point))
    e = intersect_lines(H, J)
    if isinstance(e, Undefined):
        if e.reason == "parallel":
            return Undefined("zero", "a = 0 has no reciprocal", e.origin)
        return e
    return other(a, L, circle(e, a))


@strict
def geo_square_root(G: Point, f: Frame | None = None):
    """Descartes' square root: the half-chord over ``G`` of the circle on ``[-1, G]``.

    Here the circle has diameter from 0 to ``G + 1`` and meets the
    perpendicular at ``G`` at height ``sqrt(G)``; that height is laid on the
    x-axis by a rotation about ``G`` and translated back to 0.
    """
    f = frame_for(G, f)
    _check_axis(f, G)
    O = f.origin
    F1 = geo_add(G, f.unit, f)
    X01 = line(O, f.unit)
    K = midpoint_on(F1, O, X01)
    C = circle(K, F1)
    L = perp(G, X01)
    I = ilc1(L, C)
    if isinstance(I, Undefined):
        return Undefined("negative", "G < 0 has no square root", "I")
    U = ilc1(L, circle(G, F1))
    R = rotate(U, G, F1, I)
    return extend(minus_one(f), O, G, R)
