"""Undefined construction results and strict propagation."""

from __future__ import annotations

import functools
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Undefined:
    """An undefined construction result.

    ``reason`` is a short tag such as ``parallel`` or ``out-of-ring``.
    ``origin`` names the step where the undefinedness arose, when known.
    """

    reason: str
    detail: str = ""
    origin: str | None = None

    def __bool__(self):
        return False

    def at(self, origin: str) -> "Undefined":
        """Same reason, tagged with the step that produced it (first tag wins)."""
        return self if self.origin is not None else replace(self, origin=origin)

    def __str__(self):
        where = f" at {self.origin}" if self.origin else ""
        extra = f" ({self.detail})" if self.detail else ""
        return f"undefined({self.reason}){where}{extra}"


def is_defined(value) -> bool:
    return not isinstance(value, Undefined)


def first_undefined(values):
    for v in values:
        if isinstance(v, Undefined):
            return v
        if isinstance(v, tuple):
            inner = first_undefined(v)
            if inner is not None:
                return inner
    return None


def strict(fn):
    """Return the first undefined positional argument instead of calling ``fn``."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        for a in args:
            if isinstance(a, Undefined):
                return a
        return fn(*args, **kwargs)

    return wrapper
