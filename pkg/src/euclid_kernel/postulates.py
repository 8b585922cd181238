"""Instance checks for Euclid 5, the strong parallel postulate and Playfair.

A :class:`ParallelInstance` names the six points of the postulate figures.
Hypotheses are computed from the points, never assumed, and each attempt
reports what happened to ``IntersectLines(L, M)`` on the instance's backend.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContractError, HypothesisViolated
from .field.backend import PuiseuxField, get_backend
from .geometry.partial import Undefined
from .geometry.primitives import (
    Line,
    Point,
    base_points,
    betw,
    circle,
    circle3,
    cong,
    cross,
    extensionally_equal,
    ilc2,
    intersect_lines,
    line,
    on_line,
    parallel,
)
from .geometry.uniform import midpoint

MEETS_WITH_BETWEENNESS = "meets-with-betweenness"
MEETS_WRONG_SIDE = "meets-wrong-side"
MEETS = "meets"
UNDEFINED = "undefined"


def point_text(F, p: Point) -> list[str]:
    return [F.to_expr(p.x), F.to_expr(p.y)]


# ---------------------------------------------------------------- AIE


def check_aie(p: Point, q: Point, L: Line, K: Line):
    """Witnesses ``(r, t, s)`` that ``pq`` makes alternate interior angles equal with K and L.

    ``r`` is laid off on ``K`` from ``p``, ``t`` is the midpoint of ``pq``
    and ``s`` is the reflection of ``r`` through ``t``; AIE holds exactly
    when ``s`` then lands on ``L``.
    """
    if not on_line(p, K) or not on_line(q, L):
        raise ContractError("check_aie needs p on K and q on L")
    if p == q:
        raise ContractError("check_aie needs p != q")
    if on_line(q, K):
        return Undefined("coincident", "q lies on K")
    alpha, beta = base_points(p.field)
    r = ilc2(K, circle3(p, alpha, beta))
    t = midpoint(p, q)
    s = ilc2(line(r, t), circle(t, r))
    for v in (r, t, s):
        if isinstance(v, Undefined):
            return v
    ok = (
        on_line(s, L)
        and betw(r, t, s)
        and betw(p, t, q)
        and r != p
        and q != s
        and cong(p, t, q, t)
        and cong(r, t, s, t)
    )
    if not ok:
        return Undefined("not-alternate", "the reflected witness is not on L")
    return (r, t, s)


# ---------------------------------------------------------------- instances


@dataclass
class ParallelInstance:
    """The named points of the parallel-postulate figures.

    ``K = Line(p, r)``, ``L = Line(s, q)`` and ``M = Line(p, a)``.
    """

    p: Point
    q: Point
    r: Point
    s: Point
    t: Point
    a: Point
    name: str = ""

    @property
    def field(self):
        return self.p.field

    @property
    def K(self):
        return line(self.p, self.r)

    @property
    def L(self):
        return line(self.s, self.q)

    @property
    def M(self):
        return line(self.p, self.a)

    def points(self) -> dict:
        return {k: getattr(self, k) for k in "pqrsta"}

    def common_hypotheses(self) -> dict:
        p, q, r, s, t = self.p, self.q, self.r, self.s, self.t
        lines_ok = all(not isinstance(x, Undefined) for x in (self.K, self.L, self.M))
        return {
            "B(p,t,q)": betw(p, t, q),
            "B(s,t,r)": betw(s, t, r),
            "pt=qt": cong(p, t, q, t),
            "rt=st": cong(r, t, s, t),
            "p!=r": p != r,
            "lines defined": lines_ok,
            "not on(p,L)": lines_ok and not on_line(p, self.L),
        }

    def euclid5_hypotheses(self) -> dict:
        h = self.common_hypotheses()
        h["B(q,a,r)"] = betw(self.q, self.a, self.r)
        return h

    def spp_hypotheses(self) -> dict:
        h = self.common_hypotheses()
        h["not on(a,K)"] = h["lines defined"] and not on_line(self.a, self.K)
        return h

    @property
    def euclid5_hyp(self) -> bool:
        return all(self.euclid5_hypotheses().values())

    @property
    def spp_hyp(self) -> bool:
        return all(self.spp_hypotheses().values())

    @property
    def aie(self) -> bool:
        if isinstance(self.K, Undefined) or isinstance(self.L, Undefined):
            return False
        if self.p == self.q or not on_line(self.q, self.L):
            return False
        return not isinstance(check_aie(self.p, self.q, self.L, self.K), Undefined)

    def over(self, backend) -> "ParallelInstance":
        """The same points coerced into another backend."""
        def conv(pt):
            return Point(backend.coerce(pt.x), backend.coerce(pt.y))

        return ParallelInstance(*(conv(getattr(self, k)) for k in "pqrsta"), name=self.name)

    def to_dict(self) -> dict:
        F = self.field
        return {
            "name": self.name,
            "field": F.name,
            "points": {k: point_text(F, v) for k, v in self.points().items()},
        }


def instance_from_dict(data: dict, backend=None) -> ParallelInstance:
    if backend is None:
        backend = get_backend(data.get("field", "constructible"))
    pts = {}
    for k in "pqrsta":
        try:
            x, y = data["points"][k]
        except (KeyError, TypeError, ValueError) as exc:
            raise ContractError(f"instance is missing point {k!r}") from exc
        pts[k] = Point(backend.parse(str(x)), backend.parse(str(y)))
    return ParallelInstance(**pts, name=data.get("name", ""))


def load_instance(path, backend=None) -> ParallelInstance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_dict(json.load(fh), backend)


def dehn_instance(backend, eps=None) -> ParallelInstance:
    """Euclid-5 configuration whose line M has slope ``eps``.

    ``K`` is the line y = 1, ``L`` the x-axis and ``a = (-u, u)`` with
    ``u = 1/(1 + eps)`` on segment ``qr``.  M meets L at ``x = -1/eps``:
    at infinity in the ring when ``eps`` is infinitesimal.
    """
    F = backend
    if eps is None:
        eps = F.t if isinstance(F, PuiseuxField) else F.parse("1/1000")
    eps = F.coerce(eps)
    if F.sign(eps) <= 0:
        raise ContractError("the slope must be positive")
    u = F.div(F.one, F.one + eps, (F.one,))

    def P(x, y):
        return Point(F.coerce(x), F.coerce(y))

    half = F.div(F.one, F.coerce(2), (F.one,))
    return ParallelInstance(
        p=P(0, 1), q=P(0, 0), r=P(-1, 1), s=P(1, 0), t=P(0, half), a=P(-u, u),
        name="dehn",
    )


# ---------------------------------------------------------------- attempts


@dataclass
class PostulateReport:
    postulate: str
    verdict: str
    field_name: str
    point: Point | None = None
    undefined: Undefined | None = None
    escape: list | None = None
    hypotheses: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def to_dict(self, backend) -> dict:
        out = {
            "postulate": self.postulate,
            "field": self.field_name,
            "verdict": self.verdict,
            "hypotheses": dict(self.hypotheses),
            "checks": dict(self.checks),
        }
        if self.point is not None:
            out["point"] = point_text(backend, self.point)
        if self.undefined is not None:
            out["undefined"] = {"reason": self.undefined.reason, "detail": self.undefined.detail}
        if self.escape is not None:
            out["full_field_point"] = self.escape
        return out


def _full_field_point(inst: ParallelInstance):
    """Where L and M meet in the full series field, as text, or None."""
    F = inst.field
    if not (isinstance(F, PuiseuxField) and F.bounded):
        return None
    full = PuiseuxField(F.trunc_order, bounded=False)
    wide = inst.over(full)
    X = intersect_lines(wide.L, wide.M)
    if isinstance(X, Undefined):
        return None
    return point_text(full, X)


def _intersection(inst: ParallelInstance):
    return intersect_lines(inst.L, inst.M)


def try_euclid5(inst: ParallelInstance) -> PostulateReport:
    """Attempt the intersection promised by Euclid 5 and check both sides."""
    hyps = inst.euclid5_hypotheses()
    if not all(hyps.values()):
        bad = [k for k, v in hyps.items() if not v]
        raise HypothesisViolated(f"Euclid 5 hypotheses fail: {', '.join(bad)}")
    F = inst.field
    X = _intersection(inst)
    if isinstance(X, Undefined):
        return PostulateReport("euclid5", UNDEFINED, F.name, undefined=X,
                               escape=_full_field_point(inst), hypotheses=hyps)
    checks = {"B(p,a,X)": betw(inst.p, inst.a, X), "B(s,q,X)": betw(inst.s, inst.q, X)}
    verdict = MEETS_WITH_BETWEENNESS if all(checks.values()) else MEETS_WRONG_SIDE
    return PostulateReport("euclid5", verdict, F.name, point=X, hypotheses=hyps, checks=checks)


def try_strong_parallel(inst: ParallelInstance) -> PostulateReport:
    """Attempt the intersection promised by the strong parallel postulate."""
    hyps = inst.spp_hypotheses()
    if not all(hyps.values()):
        bad = [k for k, v in hyps.items() if not v]
        raise HypothesisViolated(f"SPP hypotheses fail: {', '.join(bad)}")
    F = inst.field
    X = _intersection(inst)
    if isinstance(X, Undefined):
        return PostulateReport("spp", UNDEFINED, F.name, undefined=X,
                               escape=_full_field_point(inst), hypotheses=hyps)
    checks = {"on(X,L)": on_line(X, inst.L), "on(X,M)": on_line(X, inst.M)}
    return PostulateReport("spp", MEETS, F.name, point=X, hypotheses=hyps, checks=checks)


@dataclass
class PlayfairReport:
    hypothesis: bool
    coincident: bool
    k_parallel: bool
    m_parallel: bool
    m_meets_l: object

    @property
    def holds(self) -> bool:
        """The instance of the implication ``Parallel(K,L) and Parallel(M,L) -> K = M``."""
        return not self.hypothesis or self.coincident

    def to_dict(self, backend) -> dict:
        meet = self.m_meets_l
        if isinstance(meet, Undefined):
            meet = {"undefined": meet.reason}
        else:
            meet = point_text(backend, meet)
        return {
            "Parallel(K,L)": self.k_parallel,
            "Parallel(M,L)": self.m_parallel,
            "K = M": self.coincident,
            "implication holds": self.holds,
            "IntersectLines(M,L)": meet,
        }


def check_playfair(L: Line, p: Point, K: Line, M: Line) -> PlayfairReport:
    """Decide one instance of Playfair's axiom exactly.

    Parallelism is the exact cross-product test, so over the bounded ring
    it is decided as in the full field.
    """
    if not (on_line(p, K) and on_line(p, M)):
        raise ContractError("Playfair needs p on K and on M")
    if on_line(p, L):
        raise ContractError("Playfair needs p off L")
    kp, mp = parallel(K, L), parallel(M, L)
    return PlayfairReport(kp and mp, extensionally_equal(K, M), kp, mp, intersect_lines(M, L))


def playfair_family(backend, slopes=None) -> list[tuple]:
    """Playfair instances for every pair of slopes of K and M through (0, 1).

    ``L`` is the x-axis.  Returns ``(k_slope, m_slope, report)`` triples.
    """
    F = backend
    if slopes is None:
        texts = ["0", "1", "-1", "1/2", "sqrt(2)"]
        if isinstance(F, PuiseuxField):
            texts += ["t", "-t", "t^2"]
        slopes = [F.parse(s) for s in texts]
    O, I = Point(F.zero, F.zero), Point(F.one, F.zero)
    L = Line(O, I)
    p = Point(F.zero, F.one)
    out = []
    for k in slopes:
        K = Line(p, Point(F.one, F.one + k))
        for m in slopes:
            M = Line(p, Point(F.one, F.one + m))
            out.append((k, m, check_playfair(L, p, K, M)))
    return out


def dehn_playfair(backend) -> PlayfairReport:
    """K horizontal and M of slope ``t`` through (0, 1): not parallel, yet never meeting in the ring."""
    F = backend
    eps = F.t if isinstance(F, PuiseuxField) else F.parse("1/1000")
    p = Point(F.zero, F.one)
    L = Line(Point(F.zero, F.zero), Point(F.one, F.zero))
    K = Line(p, Point(F.one, F.one))
    M = Line(p, Point(F.one, F.one + eps))
    return check_playfair(L, p, K, M)


def random_instance(rng, backend) -> ParallelInstance:
    """A random Euclid-5 configuration with rational coordinates.

    ``L`` is a random line, ``r`` the reflection of ``s`` through the
    midpoint ``t`` of a random transversal ``pq``, and ``a`` is strictly
    inside segment ``qr``.
    """
    F = backend

    def rnd(lo=-5, hi=5):
        return F.coerce(Fraction(rng.randint(lo * 8, hi * 8), 8))

    while True:
        q = Point(rnd(), rnd())
        s_dir = (rnd(), rnd())
        p = Point(rnd(), rnd())
        s = Point(q.x + s_dir[0], q.y + s_dir[1])
        if s == q or cross((s_dir[0], s_dir[1]), (p.x - q.x, p.y - q.y)).is_zero():
            continue
        half = F.coerce(Fraction(1, 2))
        t = Point((p.x + q.x) * half, (p.y + q.y) * half)
        r = Point(2 * t.x - s.x, 2 * t.y - s.y)
        lam = F.coerce(Fraction(rng.randint(1, 15), 16))
        a = Point(q.x + lam * (r.x - q.x), q.y + lam * (r.y - q.y))
        inst = ParallelInstance(p, q, r, s, t, a, name="random")
        if inst.euclid5_hyp:
            return inst
