"""Syntax tree of construction scripts.

Source positions and comments ride along but positions do not take part in
equality, so a script equals its pretty-printed and re-parsed self.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SORTS = ("Point", "Line", "Circle")


@dataclass(frozen=True)
class Name:
    ident: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Param:
    name: str
    sort: str


@dataclass(frozen=True)
class Binding:
    name: str
    expr: object
    comment: str | None = None
    leading: tuple = ()
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Script:
    name: str
    params: tuple
    body: tuple
    result: object
    return_sort: str | None = None
    header: tuple = ()
    result_comment: str | None = None
    result_leading: tuple = ()
    trailing: tuple = ()
    # Sorts inferred by the checker: binding name -> sort, and the result sort.
    sorts: dict = field(default_factory=dict, compare=False, hash=False)
    result_sort_inferred: str | None = field(default=None, compare=False)

    def param_names(self) -> list[str]:
        return [p.name for p in self.params]

    def binding(self, name: str) -> Binding:
        for b in self.body:
            if b.name == name:
                return b
        raise KeyError(name)


def free_names(expr) -> list[str]:
    """Identifiers referenced by ``expr``, in order of first use."""
    out: list[str] = []

    def walk(e):
        if isinstance(e, Name):
            if e.ident not in out:
                out.append(e.ident)
        else:
            for a in e.args:
                walk(a)

    walk(expr)
    return out
