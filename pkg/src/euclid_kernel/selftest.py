"""Invariant suites run by ``euclid-kernel selftest``.

Each suite takes a :class:`SuiteContext` and returns a :class:`SuiteResult`.
Suites that are generic in the backend use ``ctx.backend``; the rest pin the
backend their invariant is about (circle-circle continuity on the bounded
ring, the arithmetic oracle on the constructible reals).  Results on the
Puiseux backends carry an "up to truncation" qualifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import sampling
from .errors import EuclidError
from .field.axioms import check_ef_axioms
from .field.backend import CONSTRUCTIBLE, PuiseuxField, get_backend
from .geometry import arithmetic as ar
from .geometry import primitives as pr
from .geometry.frame import Frame
from .geometry.partial import Undefined
from .geometry.primitives import Line, Point, circle, cross, dot, vec
from .postulates import (
    MEETS,
    MEETS_WITH_BETWEENNESS,
    UNDEFINED,
    dehn_instance,
    dehn_playfair,
    playfair_family,
    random_instance,
    try_euclid5,
    try_strong_parallel,
)


@dataclass
class SuiteContext:
    backend: object = CONSTRUCTIBLE
    seed: int | None = None
    scale: float = 1.0  # multiplies case counts; the CLI uses 1, tests may use less

    def rng(self, stream: str):
        return sampling.rng_for(self.seed, stream)

    def count(self, n: int) -> int:
        return max(1, int(n * self.scale))

    def bounded(self) -> PuiseuxField:
        B = self.backend
        order = B.trunc_order if isinstance(B, PuiseuxField) else 16
        return get_backend("puiseux-bounded", order)


@dataclass
class SuiteResult:
    name: str
    backend: str
    cases: int = 0
    failures: list = field(default_factory=list)
    qualifier: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        if len(self.failures) < 5:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... and more (last: {message})"

    def to_dict(self) -> dict:
        return {"suite": self.name, "backend": self.backend, "passed": self.passed,
                "cases": self.cases, "failures": list(self.failures), "qualifier": self.qualifier}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        q = f" ({self.qualifier})" if self.qualifier else ""
        out = f"{status}  {self.name:<22} {self.cases:>4} cases on {self.backend}{q}"
        for msg in self.failures:
            out += f"\n      {msg}"
        return out


def _result(name: str, B) -> SuiteResult:
    return SuiteResult(name, B.name, qualifier="up to truncation" if B.up_to_truncation else "")


def _reflect(p: Point, L: Line) -> Point:
    """Exact reflection of ``p`` in ``L`` by the projection formula."""
    F = p.field
    d = L.direction
    ap = vec(L.a, p)
    k = F.div(2 * dot(ap, d), dot(d, d), (F.coerce(4),))
    return Point(2 * L.a.x + k * d[0] - p.x, 2 * L.a.y + k * d[1] - p.y)


# ---------------------------------------------------------------- suites


def suite_field_axioms(ctx: SuiteContext) -> SuiteResult:
    B = ctx.backend
    res = _result("field-axioms", B)
    report = check_ef_axioms(B)
    res.cases = sum(r.instances for r in report.results.values())
    expected = ["EF1"] if getattr(B, "bounded", False) else []
    if report.failing() != expected:
        res.fail(f"failing axioms {report.failing()}, expected {expected}")
    return res


def suite_field_identities(ctx: SuiteContext) -> SuiteResult:
    B = ctx.backend
    res = _result("field-identities", B)
    rng = ctx.rng("identities")
    for _ in range(ctx.count(40)):
        x, y, z = (sampling.scalar(rng, B) for _ in range(3))
        res.cases += 1
        if not ((x + y) + z - (x + (y + z))).is_zero():
            res.fail(f"associativity of + at {B.to_expr(x)}, {B.to_expr(y)}, {B.to_expr(z)}")
        if not (x * (y + z) - (x * y + x * z)).is_zero():
            res.fail(f"distributivity at {B.to_expr(x)}, {B.to_expr(y)}, {B.to_expr(z)}")
        if not (x * y - y * x).is_zero():
            res.fail(f"commutativity of * at {B.to_expr(x)}, {B.to_expr(y)}")
        s = B.sqrt(x * x)
        if s is None or not (s - abs(x)).is_zero():
            res.fail(f"sqrt(x^2) != |x| at {B.to_expr(x)}")
        r = B.recip(x)
        if r is not None and not (r * x - B.one).is_zero():
            res.fail(f"x * recip(x) != 1 at {B.to_expr(x)}")
        if r is None and not x.is_zero() and not getattr(B, "bounded", False):
            res.fail(f"no reciprocal for nonzero {B.to_expr(x)}")
    return res


def suite_orientation(ctx: SuiteContext, intersect_circles=None) -> SuiteResult:
    """Circle-circle components by the cross-product rule; line-circle order along the line.

    ``intersect_circles`` can be replaced to check that a defective
    implementation is caught.
    """
    ic = intersect_circles or pr.intersect_circles
    B = ctx.backend
    res = _result("orientation", B)
    rng = ctx.rng("orientation")
    n = ctx.count(60)
    while res.cases < n:
        a = sampling.rational_point(rng, B)
        b = sampling.rational_point(rng, B)
        p = sampling.point(rng, B)
        if a == b or pr.on_line(p, Line(a, b)):
            continue
        res.cases += 1
        C, K = circle(a, p), circle(b, p)
        pair = ic(C, K)
        if isinstance(pair, Undefined):
            res.fail(f"circles through a common point undefined: {pair.reason}")
            continue
        first, second = pair
        if cross(vec(b, a), vec(b, first)).sign() <= 0:
            res.fail("first circle-circle component is not the left turn")
        if cross(vec(b, a), vec(b, second)).sign() >= 0:
            res.fail("second circle-circle component is not the right turn")
        center_line = Line(a, b)
        if _reflect(first, center_line) != second or _reflect(second, center_line) != first:
            res.fail("reflection in the center line does not swap the components")
        # line-circle: a random line through the center meets the circle twice
        d = sampling.rational_point(rng, B)
        if d == a:
            continue
        L = Line(d, a)
        lc = pr.intersect_line_circle(L, C)
        if isinstance(lc, Undefined):
            res.fail("line through the center missed the circle")
            continue
        if not (pr.same_order(d, a, lc[0], lc[1]) and not pr.same_order(d, a, lc[1], lc[0])):
            res.fail("line-circle points are not ordered along the line")
    return res


def suite_euclid_i2(ctx: SuiteContext) -> SuiteResult:
    B = ctx.backend
    res = _result("euclid-i2", B)
    rng = ctx.rng("euclid-i2")
    # nested radicals in series coefficients are slow; keep constants rational there
    kind = "rational" if B.up_to_truncation else None
    for k in range(ctx.count(40)):
        a = sampling.point(rng, B, kind)
        b = a if k % 4 == 0 else sampling.point(rng, B, kind)
        c = sampling.point(rng, B, kind)
        res.cases += 1
        e = pr.distinct_from(a)
        if isinstance(e, Undefined) or e == a:
            res.fail("distinctFrom failed to separate")
            continue
        d = pr.transfer_segment(a, b, c)
        if isinstance(d, Undefined):
            res.fail(f"transfer_segment undefined: {d.reason}")
        elif not pr.cong(a, d, b, c):
            res.fail("|ad| != |bc|")
    return res


def _bounded_scalar(rng, B, positive=False):
    x = sampling.scalar(rng, B)
    if positive:
        x = abs(x) + B.coerce(Fraction(rng.randint(1, 8), 4))
    return x


def suite_circle_circle_bounded(ctx: SuiteContext) -> SuiteResult:
    B = ctx.bounded()
    res = _result("circle-circle-bounded", B)
    rng = ctx.rng("circle-circle")
    for _ in range(ctx.count(25)):
        res.cases += 1
        a = sampling.point(rng, B)
        r = _bounded_scalar(rng, B, positive=True)
        R = _bounded_scalar(rng, B, positive=True)
        lo, hi = abs(R - r), r + R
        lam = B.coerce(Fraction(rng.randint(0, 8), 8))
        c = lo + lam * (hi - lo)
        if c.is_zero():
            c = hi
        # unit direction (1 - m^2, 2m) / (1 + m^2) with rational m
        m = Fraction(rng.randint(-6, 6), 3)
        ux, uy = (1 - m * m) / (1 + m * m), 2 * m / (1 + m * m)
        b = Point(a.x + c * B.coerce(ux), a.y + c * B.coerce(uy))
        C = pr.Circle(a, Point(a.x + r, a.y), a)
        K = pr.Circle(b, Point(b.x + R, b.y), b)
        pair = pr.intersect_circles(C, K)
        if isinstance(pair, Undefined):
            res.fail(f"undefined ({pair.reason}) with r={B.to_expr(r)}, R={B.to_expr(R)}, c={B.to_expr(c)}")
            continue
        for pt in pair:
            if not (B.contains(pt.x) and B.contains(pt.y)):
                res.fail("a coordinate left the bounded ring")
            if not (pr.on_circle(pt, C) and pr.on_circle(pt, K)):
                res.fail("intersection point is off a circle")
        nums, den, _ = pr.circle_quotients(C, K)
        z = pr.circle_quotient_bound(C, K)
        if not (z - (r + R + c)).is_zero():
            res.fail("quotient bound differs from r + R + c")
        for num in nums:
            if (abs(den) * z - abs(num)).sign() < 0:
                res.fail("a numerator exceeds |den| * (r + R + c)")
    return res


def _segment_meet(a, q, b, p):
    """Intersection of segments aq and bp by Cramer's rule, or None if they miss."""
    F = a.field
    u, v = vec(a, q), vec(b, p)
    den = cross(u, v)
    if den.is_zero():
        return None
    s = F.div(cross(vec(a, b), v), den, (F.one,))
    w = F.div(cross(vec(a, b), u), den, (F.one,))
    if s is None or w is None:
        return None
    if not (s.sign() > 0 and (F.one - s).sign() > 0 and w.sign() > 0 and (F.one - w).sign() > 0):
        return None
    return Point(a.x + s * u[0], a.y + s * u[1])


def inner_pasch_config(rng, B):
    """Random a, p, c, b, q with B(a,p,c), B(b,q,c) and b off Line(a,c)."""
    while True:
        a = sampling.point(rng, B)
        c = sampling.point(rng, B)
        b = sampling.point(rng, B)
        if a == c or pr.on_line(b, Line(a, c)):
            continue
        lam = B.coerce(Fraction(rng.randint(1, 15), 16))
        mu = B.coerce(Fraction(rng.randint(1, 15), 16))
        p = Point(a.x + lam * (c.x - a.x), a.y + lam * (c.y - a.y))
        q = Point(b.x + mu * (c.x - b.x), b.y + mu * (c.y - b.y))
        return a, p, c, b, q


def suite_inner_pasch(ctx: SuiteContext) -> SuiteResult:
    res = None
    for B, n in ((CONSTRUCTIBLE, 30), (ctx.bounded(), 10)):
        part = _result("inner-pasch", B)
        rng = ctx.rng(f"inner-pasch:{B.name}")
        for _ in range(ctx.count(n)):
            a, p, c, b, q = inner_pasch_config(rng, B)
            part.cases += 1
            z = pr.inner_pasch(a, p, c, b, q)
            if isinstance(z, Undefined):
                part.fail(f"undefined: {z.reason}")
                continue
            if not (pr.betw(a, z, q) and pr.betw(b, z, p)):
                part.fail("z is not between a,q and b,p")
            w = _segment_meet(a, q, b, p)
            if w is None or w != z:
                part.fail("disagrees with the segment-intersection oracle")
        if res is None:
            res = part
        else:
            res.cases += part.cases
            res.failures += part.failures
            res.backend += f", {B.name}"
            res.qualifier = part.qualifier
    return res


def suite_arithmetic(ctx: SuiteContext) -> SuiteResult:
    B = CONSTRUCTIBLE
    res = _result("arithmetic", B)
    rng = ctx.rng("arithmetic")
    f = Frame.standard(B)
    for _ in range(ctx.count(12)):
        x, y = sampling.scalar(rng, B), sampling.scalar(rng, B)
        X, Y = f.axis_point(x), f.axis_point(y)
        res.cases += 1
        checks = {
            "add": (ar.geo_add(X, Y, f), x + y),
            "mul": (ar.geo_mul(X, Y, f), x * y),
            "reciprocal": (ar.geo_reciprocal(X, f), B.recip(x)),
            "sqrt": (ar.geo_square_root(X, f), B.sqrt(x) if x.sign() >= 0 else None),
        }
        for name, (got, want) in checks.items():
            if want is None:
                if not isinstance(got, Undefined):
                    res.fail(f"{name}({B.to_expr(x)}) should be undefined")
            elif isinstance(got, Undefined):
                res.fail(f"{name} undefined ({got.reason}) at {B.to_expr(x)}, {B.to_expr(y)}")
            elif not (f.value_of(got) - want).is_zero() or not got.y.is_zero():
                res.fail(f"{name} disagrees with the field at {B.to_expr(x)}, {B.to_expr(y)}")
    return res


def suite_uniformity(ctx: SuiteContext) -> SuiteResult:
    from .script.probe import continuity_probe, uniformity_families

    res = _result("uniformity", CONSTRUCTIBLE)
    for name, (script, family, expect) in uniformity_families().items():
        rep = continuity_probe(script, family)
        res.cases += 1
        if rep.continuous != expect:
            res.fail(f"{name}: continuous={rep.continuous}, ratios {rep.ratios}")
        if expect and rep.boundary is None:
            res.fail(f"{name}: undefined at the case boundary")
    return res


def suite_dsl(ctx: SuiteContext) -> SuiteResult:
    from .script import evaluate, load_corpus, parse, parse_args, pretty_print

    B = ctx.backend
    res = _result("dsl-corpus", B)
    domains = {
        "midpoint": "a=(0,0);b=(2,0)",
        "perp": "x=(1/2,0);a=(0,0);b=(1,0)",
        "m": "a=(1,0);b=(1,0);p=(0,0);q=(1,0)",
        "reciprocal": "a=(2,0)",
        "squareroot": "G=(2,0)",
        "other": "p=(1,0);L=Line((1,0),(0,1));C=Circle((0,0),(1,0))",
        "other2": "p=(1,0);C=Circle((0,0),(1,0));K=Circle((1,1),(1,0))",
    }
    for name, script in load_corpus().items():
        res.cases += 1
        if parse(pretty_print(script)) != script:
            res.fail(f"{name}: pretty-print round trip changed the script")
        r = evaluate(script, parse_args(domains[name], B), B)
        if not r.defined:
            res.fail(f"{name}: undefined on its domain ({r.result.reason})")
    r = evaluate(load_corpus(["squareroot"])["squareroot"], parse_args("G=(-1,0)", B), B)
    step = r.first_undefined_step()
    res.cases += 1
    if r.defined or step is None or step.name != "I":
        res.fail("SquareRoot(-1) is not undefined at the discriminant step")
    return res


def suite_postulates(ctx: SuiteContext) -> SuiteResult:
    res = _result("postulates", CONSTRUCTIBLE)
    rng = ctx.rng("postulates")
    for _ in range(ctx.count(30)):
        inst = random_instance(rng, CONSTRUCTIBLE)
        res.cases += 1
        if try_euclid5(inst).verdict != MEETS_WITH_BETWEENNESS:
            res.fail("Euclid 5 instance does not meet on the promised side")
        if inst.spp_hyp and try_strong_parallel(inst).verdict != MEETS:
            res.fail("SPP instance does not meet")
    Bd = ctx.bounded()
    res.cases += 3
    dehn = dehn_instance(Bd)
    if try_euclid5(dehn).verdict != UNDEFINED or try_strong_parallel(dehn).verdict != UNDEFINED:
        res.fail("infinitesimal-slope instance meets in the bounded ring")
    if not all(rep.holds for _, _, rep in playfair_family(Bd)) or not dehn_playfair(Bd).holds:
        res.fail("Playfair implication fails on the bounded family")
    X = try_euclid5(dehn_instance(CONSTRUCTIBLE)).point
    if X is None or X != Point(CONSTRUCTIBLE.coerce(-1000), CONSTRUCTIBLE.zero):
        res.fail("constructible Dehn instance does not meet at (-1000, 0)")
    res.qualifier = "bounded part up to truncation"
    return res


SUITES = {
    "field-axioms": suite_field_axioms,
    "field-identities": suite_field_identities,
    "orientation": suite_orientation,
    "euclid-i2": suite_euclid_i2,
    "circle-circle-bounded": suite_circle_circle_bounded,
    "inner-pasch": suite_inner_pasch,
    "arithmetic": suite_arithmetic,
    "uniformity": suite_uniformity,
    "dsl-corpus": suite_dsl,
    "postulates": suite_postulates,
}


def run_suites(ctx: SuiteContext, names=None, overrides: dict | None = None) -> list[SuiteResult]:
    """Run suites in a fixed order; an exception inside a suite is a failure, not a crash."""
    overrides = overrides or {}
    out = []
    for name in names or SUITES:
        fn = overrides.get(name, SUITES[name])
        try:
            out.append(fn(ctx))
        except (EuclidError, ArithmeticError, TypeError, ValueError) as exc:
            r = _result(name, ctx.backend)
            r.fail(f"raised {type(exc).__name__}: {exc}")
            out.append(r)
    return out
