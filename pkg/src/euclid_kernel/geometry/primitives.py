"""Points, directed lines, circles, and the elementary constructions.

Every construction is strict: an :class:`Undefined` argument is returned
unchanged.  Orientation convention: for circles with centers ``a`` (first
circle) and ``b`` (second), the first intersection point ``p`` is the one
with ``(a - b) x (p - b) > 0``.
"""

from __future__ import annotations

from ..errors import ContractError, HypothesisViolated
from ..field.backend import field_of
from .partial import Undefined, strict


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x
        self.y = y

    @property
    def field(self):
        return field_of(self.x)

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return (self.x - other.x).is_zero() and (self.y - other.y).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self):
        return f"Point({_short(self.x)}, {_short(self.y)})"


class Line:
    """Directed line through two distinct points; built by :func:`line`."""

    __slots__ = ("a", "b")

    def __init__(self, a: Point, b: Point):
        self.a = a
        self.b = b

    @property
    def direction(self):
        return (self.b.x - self.a.x, self.b.y - self.a.y)

    def __repr__(self):
        return f"Line({self.a!r}, {self.b!r})"


class Circle:
    """Circle with ``center`` and radius ``|cd|``.

    ``Circle(a, p)`` in scripts is stored with ``c = a, d = p``.
    """

    __slots__ = ("center", "c", "d", "radius_sq")

    def __init__(self, center: Point, c: Point, d: Point):
        self.center = center
        self.c = c
        self.d = d
        self.radius_sq = dist_sq(c, d)

    def __repr__(self):
        return f"Circle(center={self.center!r}, radius_sq={_short(self.radius_sq)})"


def _short(x) -> str:
    text = x.to_expr() if hasattr(x, "to_expr") else str(x)
    return text if len(text) < 60 else text[:57] + "..."


# ---------------------------------------------------------------- algebra


def cross(u, v):
    """``(a, b) x (c, d) = a*d - b*c``."""
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def vec(p: Point, q: Point):
    """The vector ``q - p``."""
    return (q.x - p.x, q.y - p.y)


def dist_sq(p: Point, q: Point):
    dx, dy = q.x - p.x, q.y - p.y
    return dx * dx + dy * dy


def _bounds_from(F, scalars):
    """Candidate quotient bounds: ``1``, ``S`` and ``S**2`` with ``S = 1 + sum |x|``."""
    s = F.one
    for x in scalars:
        s = s + abs(x)
    return (F.one, s, s * s)


# ---------------------------------------------------------------- objects


@strict
def line(a: Point, b: Point):
    if a == b:
        return Undefined("degenerate-line", "Line(p,p) is undefined")
    return Line(a, b)


@strict
def circle(a: Point, b: Point):
    """Circle centered at ``a`` through ``b``."""
    return Circle(a, a, b)


@strict
def circle3(a: Point, b: Point, c: Point):
    """Circle centered at ``a`` with radius ``|bc|``."""
    return Circle(a, b, c)


@strict
def center(C: Circle):
    return C.center


def on_line(p: Point, L: Line) -> bool:
    return cross(vec(L.a, p), L.direction).is_zero()


def on_circle(p: Point, C: Circle) -> bool:
    return (dist_sq(C.center, p) - C.radius_sq).is_zero()


def betw(a: Point, b: Point, c: Point) -> bool:
    """Strict betweenness B(a, b, c)."""
    if not cross(vec(b, c), vec(a, b)).is_zero():
        return False
    return dot(vec(c, b), vec(b, a)).sign() > 0


def betw_nonstrict(a: Point, b: Point, c: Point) -> bool:
    """Non-strict betweenness T(a, b, c)."""
    if not cross(vec(b, c), vec(a, b)).is_zero():
        return False
    return dot(vec(c, b), vec(b, a)).sign() >= 0


def cong(a: Point, b: Point, c: Point, d: Point) -> bool:
    """``|ab| = |cd|``."""
    return (dist_sq(a, b) - dist_sq(c, d)).is_zero()


def extensionally_equal(K: Line, L: Line) -> bool:
    return on_line(K.a, L) and on_line(K.b, L)


def parallel(K: Line, L: Line) -> bool:
    """Directions have zero cross product and the lines do not coincide."""
    return cross(K.direction, L.direction).is_zero() and not on_line(K.a, L)


# ---------------------------------------------------------------- intersections


@strict
def intersect_lines(K: Line, L: Line):
    u, v = K.a, K.b
    s, t = L.a, L.b
    F = u.field
    w = vec(u, v)
    m = vec(s, t)
    if cross(m, w).is_zero():
        return Undefined("coincident" if on_line(u, L) else "parallel")
    # u + lam*w lies on L:  lam = ((s - u) x m) / (w x m)
    num = cross(vec(u, s), m)
    den = cross(w, m)
    X = u.x * den + w[0] * num
    Y = u.y * den + w[1] * num
    bounds = _bounds_from(F, (u.x, u.y, v.x, v.y, s.x, s.y, t.x, t.y)) if F.needs_bounds else ()
    x = F.div(X, den, bounds)
    y = F.div(Y, den, bounds)
    if x is None or y is None:
        return Undefined("out-of-ring", "the intersection is not finitely bounded")
    return Point(x, y)


@strict
def intersect_line_circle(L: Line, C: Circle):
    """Both intersection points, ordered along ``L``; tangency doubles the point."""
    p, q = L.a, L.b
    c = C.center
    F = p.field
    v = vec(p, q)
    pc = vec(c, p)
    A = dot(v, v)
    B = dot(v, pc)
    disc = B * B - A * (dot(pc, pc) - C.radius_sq)
    if disc.sign() < 0:
        return Undefined("no-intersection", "line misses circle")
    root = F.sqrt(disc)
    bounds = ()
    if F.needs_bounds:
        bounds = _bounds_from(F, (p.x, p.y, q.x, q.y, c.x, c.y, C.radius_sq))
    nums = []
    for lam_num in (-B - root, -B + root):
        nums += (p.x * A + v[0] * lam_num, p.y * A + v[1] * lam_num)
    vals = divide_all(F, nums, A, bounds)
    if vals is None:
        return Undefined("out-of-ring", "line-circle point is not finitely bounded")
    return (Point(vals[0], vals[1]), Point(vals[2], vals[3]))


def divide_all(F, nums, den, bounds=()):
    """``[n / den for n in nums]``, or None if any quotient is undefined."""
    if not F.needs_bounds:
        r = F.recip(den)
        return None if r is None else [n * r for n in nums]
    vals = [F.div(n, den, bounds) for n in nums]
    return None if any(v is None for v in vals) else vals


def circle_quotient_bound(C: Circle, K: Circle):
    """The bound ``z = r + R + c`` for the quotients in :func:`intersect_circles`."""
    F = C.center.field
    r = F.sqrt(C.radius_sq)
    R = F.sqrt(K.radius_sq)
    c = F.sqrt(dist_sq(C.center, K.center))
    return r + R + c


def circle_quotients(C: Circle, K: Circle):
    """Numerators and the common denominator of the circle-circle solution.

    Returns ``(numerators, denominator, radicand)``.  The four numerators are
    the x and y offsets from the center of ``C`` to the first and second
    point, already including the square root of ``radicand``.  Each offset
    is at most the radius ``r`` in size, so every quotient is bounded by
    ``r + R + c``.  None if the circles do not meet.
    """
    a, b = C.center, K.center
    F = a.field
    delta = vec(a, b)
    d2 = dot(delta, delta)
    if d2.is_zero():
        return None
    n = C.radius_sq - K.radius_sq + d2
    w = 4 * C.radius_sq * d2 - n * n
    if w.sign() < 0:
        return None
    h = F.sqrt(w)
    fx = delta[0] * n
    fy = delta[1] * n
    # first point: offset along the clockwise normal (delta_y, -delta_x)
    ox = delta[1] * h
    oy = -delta[0] * h
    return ((fx + ox, fy + oy, fx - ox, fy - oy), 2 * d2, w)


@strict
def intersect_circles(C: Circle, K: Circle):
    """Both intersection points; the first is the left turn seen from the centers.

    With centers ``a`` and ``b``, the first point ``p`` has
    ``(a - b) x (p - b) > 0``.
    """
    a, b = C.center, K.center
    F = a.field
    if dist_sq(a, b).is_zero():
        if (C.radius_sq - K.radius_sq).is_zero():
            return Undefined("coincident", "circles coincide")
        return Undefined("concentric-distinct", "concentric circles never meet")
    q = circle_quotients(C, K)
    if q is None:
        return Undefined("disjoint", "circles do not meet")
    nums, den, _ = q
    bounds = (circle_quotient_bound(C, K),) if F.needs_bounds else ()
    vals = divide_all(F, nums, den, bounds)
    if vals is None:
        return Undefined("out-of-ring", "circle-circle point is not finitely bounded")
    return (Point(a.x + vals[0], a.y + vals[1]), Point(a.x + vals[2], a.y + vals[3]))


def _component(pair, i):
    if isinstance(pair, Undefined):
        return pair
    return pair[i]


def ilc1(L, C):
    return _component(intersect_line_circle(L, C), 0)


def ilc2(L, C):
    return _component(intersect_line_circle(L, C), 1)


def ic1(C, K):
    return _component(intersect_circles(C, K), 0)


def ic2(C, K):
    return _component(intersect_circles(C, K), 1)


# ---------------------------------------------------------------- order and angles


def same_order(p: Point, q: Point, s: Point, t: Point) -> bool:
    """The signed parameter of ``s`` along ``(p, q)`` is at most that of ``t``."""
    if p == q:
        raise ContractError("sameOrder needs p != q")
    L = Line(p, q)
    if not (on_line(s, L) and on_line(t, L)):
        raise ContractError("sameOrder needs s and t on Line(p, q)")
    return dot(vec(s, t), vec(p, q)).sign() >= 0


def perp_at(K: Line, L: Line, m: Point) -> bool:
    if not (on_line(m, K) and on_line(m, L)):
        raise ContractError("perpAt needs m on both lines")
    return dot(K.direction, L.direction).is_zero()


# ---------------------------------------------------------------- extension


@strict
def extend(a: Point, b: Point, c: Point, d: Point):
    """The point ``x`` beyond ``b`` on ``Line(a, b)`` with ``|bx| = |cd|``."""
    return ilc2(line(a, b), circle3(b, c, d))


def base_points(F):
    """The fixed distinct points alpha = (0, 1) and beta = (1, 0)."""
    return Point(F.zero, F.one), Point(F.one, F.zero)


@strict
def distinct_from(x: Point, alpha: Point | None = None, beta: Point | None = None):
    """A point guaranteed different from ``x``: extend alpha-beta by |alpha x|."""
    if alpha is None or beta is None:
        alpha, beta = base_points(x.field)
    return extend(alpha, beta, alpha, x)


@strict
def transfer_segment(a: Point, b: Point, c: Point):
    """A point ``d`` with ``|ad| = |bc|``, defined even when ``a = b``."""
    return extend(distinct_from(a), a, b, c)


# ---------------------------------------------------------------- inner Pasch


def inner_pasch(a: Point, p: Point, c: Point, b: Point, q: Point):
    """The point ``z`` with B(a, z, q) and B(b, z, p), given B(a, p, c) and B(b, q, c).

    Translate ``a`` to the origin and apply the reflection-scaling
    ``[[p1, p2], [p2, -p1]]`` that sends ``p`` to ``(p1**2 + p2**2, 0)``.  In
    those coordinates ``z = q * (p x b) / (q x (b - p))``; the ratio is a
    bounded quotient (it lies strictly between 0 and 1) and is unchanged by
    linear maps, so mapping back needs no division.
    """
    if not (betw(a, p, c) and betw(b, q, c)):
        raise HypothesisViolated("inner Pasch needs B(a,p,c) and B(b,q,c)")
    if p == b or q == a:
        raise HypothesisViolated("inner Pasch needs p != b and q != a")
    if on_line(b, Line(a, c)):
        raise HypothesisViolated("inner Pasch needs b off Line(a, c)")
    F = a.field
    p1, p2 = vec(a, p)
    b1, b2 = vec(a, b)
    q1, q2 = vec(a, q)

    def rot(x, y):
        return (p1 * x + p2 * y, p2 * x - p1 * y)

    pr = rot(p1, p2)
    br = rot(b1, b2)
    qr = rot(q1, q2)
    num = cross(pr, br)
    den = cross(qr, (br[0] - pr[0], br[1] - pr[1]))
    lam = F.div(num, den, (F.one,))
    if lam is None:
        return Undefined("out-of-ring", "inner Pasch quotient is not bounded")
    return Point(a.x + lam * q1, a.y + lam * q2)
