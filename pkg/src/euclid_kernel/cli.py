"""``euclid-kernel`` command line.

Exit status: 0 on success (an undefined construction result is a
successful run), 1 on script, contract or file errors, 2 on usage errors
including malformed ``--args``.  ``selftest`` exits 1 when a suite fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import sampling
from .errors import ContractError, EuclidError, HypothesisViolated
from .field.axioms import check_ef_axioms
from .field.backend import BACKEND_NAMES, CONSTRUCTIBLE, get_backend
from .field.constructible import set_precision_cap
from .geometry.partial import Undefined
from .geometry.primitives import Circle, Line, Point
from .postulates import (
    dehn_instance,
    dehn_playfair,
    load_instance,
    playfair_family,
    try_euclid5,
    try_strong_parallel,
)
from .render import render_svg
from .script import ArgsError, ParseError, corpus_path, evaluate, load_script, parse_args

USAGE_ERROR = 2
RUN_ERROR = 1


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- argument types


def _trunc_order(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if q <= 0:
        raise argparse.ArgumentTypeError("truncation order must be positive")
    return q


def _precision_cap(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 64:
        raise argparse.ArgumentTypeError("precision cap must be at least 64 bits")
    return n


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", choices=BACKEND_NAMES, default=None,
                   help="scalar backend (default: constructible)")
    p.add_argument("--trunc-order", type=_trunc_order, default=Fraction(16),
                   help="Puiseux truncation order (default 16)")
    p.add_argument("--precision-cap", type=_precision_cap, default=4096,
                   help="interval refinement cap in bits before exact sign fallback")
    p.add_argument("--seed", type=int, default=None,
                   help=f"seed for property sampling; {sampling.SEED_ENV} overrides it")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="euclid-kernel",
        description="Exact ruler-and-compass constructions over pluggable fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    run = sub.add_parser("run", parents=[common], help="evaluate a construction script")
    run.add_argument("script", help="a .geo file, or the stem of a bundled script")
    run.add_argument("--args", default="", help='arguments, e.g. "a=(0,0);b=(2,0)"')
    run.add_argument("--svg", metavar="PATH", help="also write a diagram to PATH")

    render = sub.add_parser("render", parents=[common], help="draw a script evaluation as SVG")
    render.add_argument("script")
    render.add_argument("--args", default="")
    render.add_argument("--svg", metavar="PATH", help="output file (default: standard output)")

    dehn = sub.add_parser("dehn", parents=[common],
                          help="Playfair holds but Euclid 5 fails on the bounded ring")
    dehn.add_argument("--slope", default="t",
                      help="slope of M as a scalar expression (default t)")

    sub.add_parser("check-axioms", parents=[common], help="check EF0-EF8 on sample elements")

    st = sub.add_parser("selftest", parents=[common], help="run the invariant suites")
    st.add_argument("--suite", action="append", default=None,
                    help="run only this suite (repeatable)")
    st.add_argument("--scale", type=float, default=1.0, help="multiply case counts")

    ck = sub.add_parser("checker", parents=[common],
                        help="check parallel postulates on instance files")
    ck.add_argument("instances", nargs="*",
                    help="instance .json files or bundled names (default: all bundled)")
    return parser


# ---------------------------------------------------------------- output helpers


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _scalar(B, x) -> str:
    return B.to_expr(x)


def value_text(B, v) -> str:
    if isinstance(v, Undefined):
        where = f" at {v.origin}" if v.origin else ""
        return f"undefined({v.reason}){where}" + (f": {v.detail}" if v.detail else "")
    if isinstance(v, Point):
        return f"({_scalar(B, v.x)}, {_scalar(B, v.y)})"
    if isinstance(v, Line):
        return f"Line({value_text(B, v.a)}, {value_text(B, v.b)})"
    if isinstance(v, Circle):
        return f"Circle(center {value_text(B, v.center)}, radius^2 {_scalar(B, v.radius_sq)})"
    return repr(v)


def _backend(ns, default: str = "constructible"):
    return get_backend(ns.field or default, ns.trunc_order)


# ---------------------------------------------------------------- commands


def _evaluate(ns):
    B = _backend(ns)
    script = load_script(ns.script)
    try:
        args = parse_args(ns.args, B)
    except ArgsError as exc:
        raise UsageError(f"malformed --args: {exc}")
    return evaluate(script, args, B)


def cmd_run(ns, out) -> int:
    r = _evaluate(ns)
    B = r.backend
    if ns.svg:
        Path(ns.svg).write_text(render_svg(r), encoding="utf-8")
    if ns.json:
        out.write(_dump(r.to_dict()) + "\n")
        return 0
    head = f"{r.script.name} on {B.name}" + (" (up to truncation)" if B.up_to_truncation else "")
    out.write(head + "\n")
    for t in r.trace:
        v = r.result if t.name == "return" else r.bindings[t.name]
        out.write(f"  {t.step:>2} {t.name} = {t.expr}\n       -> {value_text(B, v)}\n")
    out.write(f"result: {value_text(B, r.result)}\n")
    return 0


def cmd_render(ns, out) -> int:
    svg = render_svg(_evaluate(ns))
    if ns.svg:
        Path(ns.svg).write_text(svg, encoding="utf-8")
    else:
        out.write(svg)
    return 0


def dehn_report(slope_text: str = "t", trunc_order=16) -> dict:
    """The four-part Playfair-versus-Euclid-5 demonstration as a dict."""
    Bd = get_backend("puiseux-bounded", trunc_order)
    axioms = check_ef_axioms(Bd)
    try:
        slope = Bd.parse(slope_text)
    except ValueError as exc:
        raise UsageError(f"bad --slope: {exc}")
    inst = dehn_instance(Bd, slope)
    e5 = try_euclid5(inst)
    spp = try_strong_parallel(inst)
    family = playfair_family(Bd)
    try:
        finite_slope = CONSTRUCTIBLE.parse(slope_text)
    except ValueError:
        finite_slope = CONSTRUCTIBLE.parse("1/1000")
    cinst = dehn_instance(CONSTRUCTIBLE, finite_slope)
    return {
        "field": Bd.name,
        "trunc_order": str(Bd.trunc_order),
        "slope": Bd.to_expr(slope),
        "axioms": axioms.to_dict(),
        "euclid5": e5.to_dict(Bd),
        "spp": spp.to_dict(Bd),
        "playfair": {
            "family_size": len(family),
            "implication_holds": all(rep.holds for _, _, rep in family),
            "infinitesimal_slope": dehn_playfair(Bd).to_dict(Bd),
        },
        "constructible": {
            "slope": CONSTRUCTIBLE.to_expr(finite_slope),
            "euclid5": try_euclid5(cinst).to_dict(CONSTRUCTIBLE),
        },
        "_axiom_text": axioms.to_text(),
    }


def _dehn_text(rep: dict) -> str:
    lines = [f"(i) {rep['_axiom_text']}"]
    e5 = rep["euclid5"]
    lines.append(f"(ii) Euclid 5 on {rep['field']} with slope {rep['slope']}: {e5['verdict']}")
    if "undefined" in e5:
        lines.append(f"     IntersectLines(L, M) is undefined({e5['undefined']['reason']})")
    if "full_field_point" in e5:
        x, y = e5["full_field_point"]
        lines.append(f"     in the full series field L and M meet at ({x}, {y})")
    if "point" in e5:
        x, y = e5["point"]
        lines.append(f"     L and M meet at ({x}, {y})")
    lines.append(f"     strong parallel postulate: {rep['spp']['verdict']}")
    pf = rep["playfair"]
    inf = pf["infinitesimal_slope"]
    meet = inf["IntersectLines(M,L)"]
    meet = f"undefined({meet['undefined']})" if isinstance(meet, dict) else f"({', '.join(meet)})"
    lines.append(
        f"(iii) Playfair: implication holds on all {pf['family_size']} instances of the family: "
        f"{'yes' if pf['implication_holds'] else 'NO'}"
    )
    lines.append(
        f"      slope-t line M through (0,1): Parallel(M,L) = {inf['Parallel(M,L)']}, "
        f"IntersectLines(M,L) = {meet}"
    )
    c = rep["constructible"]["euclid5"]
    where = f" at ({', '.join(c['point'])})" if "point" in c else ""
    lines.append(
        f"(iv) constructible with slope {rep['constructible']['slope']}: {c['verdict']}{where}"
    )
    return "\n".join(lines) + "\n"


def cmd_dehn(ns, out) -> int:
    rep = dehn_report(ns.slope, ns.trunc_order)
    if ns.json:
        rep = {k: v for k, v in rep.items() if not k.startswith("_")}
        out.write(_dump(rep) + "\n")
    else:
        out.write(_dehn_text(rep))
    return 0


def cmd_check_axioms(ns, out) -> int:
    report = check_ef_axioms(_backend(ns))
    out.write((_dump(report.to_dict()) if ns.json else report.to_text()) + "\n")
    return 0


def cmd_selftest(ns, out) -> int:
    from .selftest import SUITES, SuiteContext, run_suites

    names = ns.suite
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    seed = sampling.resolve_seed(ns.seed)
    ctx = SuiteContext(_backend(ns), seed=seed, scale=ns.scale)
    results = run_suites(ctx, names)
    ok = all(r.passed for r in results)
    if ns.json:
        out.write(_dump({"seed": seed, "passed": ok, "suites": [r.to_dict() for r in results]}) + "\n")
    else:
        out.write(f"selftest seed {seed}\n")
        for r in results:
            out.write(r.line() + "\n")
        out.write(("all suites pass" if ok else "SOME SUITES FAIL") + "\n")
    return 0 if ok else RUN_ERROR


def _instance_files(names) -> list[Path]:
    if not names:
        return sorted(corpus_path("instances").glob("*.json"))
    out = []
    for n in names:
        p = Path(n)
        if not p.exists():
            p = corpus_path("instances") / (p.name if p.suffix else f"{p.name}.json")
        if not p.exists():
            raise FileNotFoundError(f"no instance file {n!r}")
        out.append(p)
    return out


def cmd_checker(ns, out) -> int:
    reports = []
    for path in _instance_files(ns.instances):
        data = json.loads(path.read_text(encoding="utf-8"))
        B = get_backend(ns.field or data.get("field", "constructible"), ns.trunc_order)
        inst = load_instance(path, B)
        entry = {"instance": data.get("name", path.stem), "file": path.name, "field": B.name,
                 "aie": inst.aie, "euclid5_hyp": inst.euclid5_hyp, "spp_hyp": inst.spp_hyp,
                 "reports": []}
        for post in data.get("postulates", ["euclid5", "spp"]):
            attempt = {"euclid5": try_euclid5, "spp": try_strong_parallel}.get(post)
            if attempt is None:
                raise ContractError(f"{path.name}: unknown postulate {post!r}")
            try:
                entry["reports"].append(attempt(inst).to_dict(B))
            except HypothesisViolated as exc:
                entry["reports"].append({"postulate": post, "verdict": "hypotheses-fail",
                                         "detail": str(exc)})
        reports.append(entry)
    if ns.json:
        out.write(_dump(reports) + "\n")
    else:
        for e in reports:
            out.write(f"{e['instance']} on {e['field']}: aie={e['aie']} "
                      f"euclid5_hyp={e['euclid5_hyp']} spp_hyp={e['spp_hyp']}\n")
            for r in e["reports"]:
                extra = ""
                if "point" in r:
                    extra = f" at ({', '.join(r['point'])})"
                elif "full_field_point" in r:
                    extra = f"; full field meets at ({', '.join(r['full_field_point'])})"
                out.write(f"  {r['postulate']}: {r['verdict']}{extra}\n")
    return 0


COMMANDS = {
    "run": cmd_run,
    "render": cmd_render,
    "dehn": cmd_dehn,
    "check-axioms": cmd_check_axioms,
    "selftest": cmd_selftest,
    "checker": cmd_checker,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    set_precision_cap(ns.precision_cap)
    try:
        return COMMANDS[ns.command](ns, out)
    except UsageError as exc:
        err.write(f"euclid-kernel {ns.command}: {exc}\n")
        return USAGE_ERROR
    except ParseError as exc:
        err.write(f"{ns.script}:{exc}\n")
        return RUN_ERROR
    except (OSError, EuclidError) as exc:
        err.write(f"euclid-kernel {ns.command}: {exc}\n")
        return RUN_ERROR


if __name__ == "__main__":
    sys.exit(main())
