"""Canonical text form of a script: one binding per line, two-space indent."""

from __future__ import annotations

from .ast import Name, Script


def expr_text(e) -> str:
    if isinstance(e, Name):
        return e.ident
    return f"{e.op}({', '.join(expr_text(a) for a in e.args)})"


def pretty_print(s: Script) -> str:
    out = [f"// {c}" if c else "//" for c in s.header]
    params = ", ".join(f"{p.sort} {p.name}" for p in s.params)
    head = f"{s.name}({params})"
    out.append(f"{s.return_sort} {head}" if s.return_sort else head)
    out.append("{")

    def emit(text, comment, leading):
        for c in leading:
            out.append(f"  // {c}" if c else "  //")
        out.append(f"  {text}  // {comment}" if comment else f"  {text}")

    for b in s.body:
        emit(f"{b.name} = {expr_text(b.expr)};", b.comment, b.leading)
    emit(f"return {expr_text(s.result)};", s.result_comment, s.result_leading)
    for c in s.trailing:
        out.append(f"  // {c}" if c else "  //")
    out.append("}")
    return "\n".join(out) + "\n"

