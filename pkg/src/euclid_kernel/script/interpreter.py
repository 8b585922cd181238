"""Strict evaluation of checked scripts.

Bindings are evaluated in order.  An undefined argument makes the call
undefined without running it, and keeps the name of the binding where the
undefinedness first arose.  A construction whose precondition fails at run
time (for example ``Other`` with a point off the circle) yields
``undefined(precondition)`` rather than an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import ContractError
from ..field.backend import CONSTRUCTIBLE
from ..geometry.frame import Frame
from ..geometry.partial import Undefined
from ..geometry.primitives import Circle, Line, Point
from .ast import Name, Script
from .ops import FRAME_CONSTANTS, frame_value, resolve, sort_of
from .printer import expr_text


@dataclass
class TraceEntry:
    step: int
    name: str
    expr: str
    defined: bool
    sort: str | None = None
    reason: str | None = None
    origin: str | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"step": self.step, "name": self.name, "expr": self.expr, "defined": self.defined}
        if self.defined:
            d["sort"] = self.sort
        else:
            d.update(reason=self.reason, origin=self.origin, detail=self.detail)
        return d


@dataclass
class EvalResult:
    script: Script
    backend: object
    bindings: dict
    result: object
    trace: list = field(default_factory=list)
    arguments: dict = field(default_factory=dict)

    @property
    def defined(self) -> bool:
        return not isinstance(self.result, Undefined)

    def first_undefined_step(self) -> TraceEntry | None:
        for t in self.trace:
            if not t.defined and t.origin == t.name:
                return t
        return None

    def to_dict(self, digits: int = 17) -> dict:
        B = self.backend
        return {
            "script": self.script.name,
            "field": B.name,
            "up_to_truncation": B.up_to_truncation,
            "defined": self.defined,
            "result": value_to_dict(B, self.result, digits),
            "bindings": {k: value_to_dict(B, v, digits) for k, v in self.bindings.items()},
            "trace": [t.to_dict() for t in self.trace],
        }


def scalar_to_dict(B, x, digits: int = 17) -> dict:
    text, err = B.approx(x, digits)
    return {"expr": B.to_expr(x), "approx": text, "error": err}


def value_to_dict(B, v, digits: int = 17) -> dict:
    if isinstance(v, Undefined):
        return {"defined": False, "reason": v.reason, "origin": v.origin, "detail": v.detail}
    if isinstance(v, Point):
        return {"defined": True, "sort": "Point",
                "x": scalar_to_dict(B, v.x, digits), "y": scalar_to_dict(B, v.y, digits)}
    if isinstance(v, Line):
        return {"defined": True, "sort": "Line",
                "a": value_to_dict(B, v.a, digits), "b": value_to_dict(B, v.b, digits)}
    if isinstance(v, Circle):
        return {"defined": True, "sort": "Circle",
                "center": value_to_dict(B, v.center, digits),
                "radius_sq": scalar_to_dict(B, v.radius_sq, digits)}
    raise TypeError(f"not a geometric value: {v!r}")


def _infer_backend(values):
    for v in values:
        if isinstance(v, Point):
            return v.field
        if isinstance(v, Line):
            return v.a.field
        if isinstance(v, Circle):
            return v.center.field
    return CONSTRUCTIBLE


def evaluate(script: Script, args, backend=None, frame: Frame | None = None) -> EvalResult:
    """Evaluate ``script`` on ``args`` (a sequence, or a dict by parameter name)."""
    names = script.param_names()
    if isinstance(args, dict):
        missing = [n for n in names if n not in args]
        extra = [n for n in args if n not in names]
        if missing or extra:
            raise ContractError(
                f"{script.name} expects arguments {', '.join(names) or '(none)'}"
                + (f"; missing {', '.join(missing)}" if missing else "")
                + (f"; unknown {', '.join(extra)}" if extra else "")
            )
        values = [args[n] for n in names]
    else:
        values = list(args)
        if len(values) != len(names):
            raise ContractError(f"{script.name} takes {len(names)} arguments, got {len(values)}")
    for prm, v in zip(script.params, values):
        s = sort_of(v)
        if s != prm.sort:
            raise ContractError(f"argument {prm.name} must be a {prm.sort}, got {s or type(v).__name__}")
    if backend is None:
        backend = frame.field if frame is not None else _infer_backend(values)
    if frame is None:
        frame = Frame.standard(backend)

    env = dict(zip(names, values))
    bound = set(names) | {b.name for b in script.body}
    constants = {k for k in FRAME_CONSTANTS if k not in bound}

    def ev(e, where: str):
        if isinstance(e, Name):
            if e.ident in env:
                return env[e.ident]
            if e.ident in constants:
                return frame_value(frame, e.ident)
            raise ContractError(f"unbound identifier {e.ident!r}")
        vals = [ev(a, where) for a in e.args]
        for v in vals:
            if isinstance(v, Undefined):
                return v
        sig = resolve(e.op, tuple(sort_of(v) for v in vals))
        if sig is None:
            raise ContractError(f"no overload {e.op} for these arguments")
        try:
            out = sig.fn(frame, *vals) if sig.uses_frame else sig.fn(*vals)
        except ContractError as exc:
            return Undefined("precondition", f"{e.op}: {exc}", where)
        if isinstance(out, Undefined):
            detail = out.detail
            if out.origin is not None and out.origin != where:
                detail = f"{detail} (inside {e.op} at {out.origin})".strip()
            return replace(out, origin=where, detail=detail)
        return out

    trace = []
    bindings = {}
    steps = [(b.name, b.expr) for b in script.body] + [("return", script.result)]
    result = None
    for k, (name, expr) in enumerate(steps, 1):
        v = ev(expr, name)
        entry = TraceEntry(k, name, expr_text(expr), not isinstance(v, Undefined))
        if isinstance(v, Undefined):
            entry.reason, entry.origin, entry.detail = v.reason, v.origin, v.detail
        else:
            entry.sort = sort_of(v)
        trace.append(entry)
        if name == "return":
            result = v
        else:
            env[name] = v
            bindings[name] = v
    return EvalResult(script, backend, bindings, result, trace, dict(zip(names, values)))
