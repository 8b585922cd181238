"""Wire syntax for script arguments: ``a=(0,0);b=(2,sqrt(2))``.

Points are ``(x,y)`` with exact scalar expressions.  Lines and circles are
written ``Line(p,q)``, ``Circle(center,through)`` and
``Circle3(center,p,q)`` with points as above.
"""

from __future__ import annotations

from ..errors import EuclidError
from ..geometry.primitives import Point, circle, circle3, line
from ..geometry.partial import Undefined


class ArgsError(EuclidError, ValueError):
    pass


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ArgsError(f"unbalanced ')' in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ArgsError(f"unbalanced '(' in {text!r}")
    parts.append("".join(cur))
    return parts


def _inner(text: str, prefix: str) -> str:
    body = text[len(prefix):].strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ArgsError(f"expected {prefix}(...), got {text!r}")
    return body[1:-1]


def parse_point(text: str, backend) -> Point:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ArgsError(f"a point is written (x,y), got {text!r}")
    coords = _split_top(text[1:-1], ",")
    if len(coords) != 2:
        raise ArgsError(f"a point needs two coordinates, got {text!r}")
    try:
        x, y = (backend.parse(c.strip()) for c in coords)
    except ValueError as exc:
        raise ArgsError(str(exc)) from exc
    return Point(x, y)


def parse_value(text: str, backend):
    text = text.strip()
    for ctor, n, fn in (("Line", 2, line), ("Circle3", 3, circle3), ("Circle", 2, circle)):
        if text.startswith(ctor + "("):
            pts = [parse_point(p, backend) for p in _split_top(_inner(text, ctor), ",")]
            if len(pts) != n:
                raise ArgsError(f"{ctor} takes {n} points, got {len(pts)}")
            v = fn(*pts)
            if isinstance(v, Undefined):
                raise ArgsError(f"{text!r} is undefined: {v.reason}")
            return v
    return parse_point(text, backend)


def parse_args(text: str, backend) -> dict:
    out = {}
    if not text or not text.strip():
        return out
    for item in _split_top(text, ";"):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ArgsError(f"expected name=value, got {item!r}")
        name, value = item.split("=", 1)
        name = name.strip()
        if not name.isidentifier():
            raise ArgsError(f"bad argument name {name!r}")
        if name in out:
            raise ArgsError(f"argument {name!r} given twice")
        out[name] = parse_value(value, backend)
    return out
