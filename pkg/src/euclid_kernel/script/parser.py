"""Recursive-descent parser and checker for construction scripts.

Grammar (semicolons optional, ``//`` comments to end of line)::

    script  := [Sort] name '(' [param {',' param}] ')' '{' stmt* 'return' expr [';'] '}'
    param   := [Sort] name              -- the sort defaults to Point
    stmt    := name '=' expr [';']
    expr    := name | '0' | '1' | op '(' [expr {',' expr}] ')'

After parsing, every identifier is checked to be bound before use and every
call is resolved against the overloads in :mod:`.ops`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from ..errors import EuclidError
from .ast import SORTS, Binding, Call, Name, Param, Script
from .ops import FRAME_CONSTANTS, OPS, arities, resolve


class ParseError(EuclidError, ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass
class Token:
    kind: str  # ident, number, punct, comment, end
    text: str
    line: int
    col: int
    own_line: bool = False


_TOKEN = re.compile(r"\s*(?://(?P<comment>[^\n]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<number>\d+)|(?P<punct>[(){},;=]))")


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    line, line_start = 1, 0
    last_code_line = 0
    n = len(source)
    while True:
        # Skip whitespace by hand to keep line numbers right.
        while pos < n and source[pos] in " \t\r\n":
            if source[pos] == "\n":
                line += 1
                line_start = pos + 1
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        col = m.start(m.lastgroup) - line_start + 1
        kind = m.lastgroup
        if kind == "comment":
            tokens.append(Token("comment", m.group("comment").strip(), line, col,
                                own_line=last_code_line != line))
        else:
            tokens.append(Token(kind, m.group(kind), line, col))
            last_code_line = line
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.code = [t for t in tokens if t.kind != "comment"]
        self.comments = [t for t in tokens if t.kind == "comment"]
        self.i = 0

    # token helpers --------------------------------------------------------

    def peek(self, k: int = 0) -> Token:
        return self.code[min(self.i + k, len(self.code) - 1)]

    def next(self) -> Token:
        t = self.peek()
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.text != text or t.kind not in ("punct", "ident"):
            found = t.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", t.line, t.col)
        return self.next()

    def ident(self, what: str) -> Token:
        t = self.peek()
        if t.kind != "ident":
            found = t.text or "end of input"
            raise ParseError(f"expected {what}, found {found!r}", t.line, t.col)
        return self.next()

    def accept(self, text: str) -> bool:
        t = self.peek()
        if t.kind == "punct" and t.text == text:
            self.i += 1
            return True
        return False

    # grammar --------------------------------------------------------------

    def sort_then_name(self, what: str):
        """``[Sort] name``; returns (sort or None, name token)."""
        first = self.ident(what)
        second = self.peek()
        if second.kind == "ident" and second.text != "return":
            if first.text not in SORTS:
                raise ParseError(f"unknown sort {first.text!r}", first.line, first.col)
            return first.text, self.next()
        return None, first

    def script(self):
        return_sort, name = self.sort_then_name("script name")
        self.expect("(")
        params = []
        if not self.accept(")"):
            while True:
                sort, pname = self.sort_then_name("parameter name")
                params.append((Param(pname.text, sort or "Point"), pname))
                if self.accept(")"):
                    break
                self.expect(",")
        open_brace = self.expect("{")
        stmts = []
        result = None
        while True:
            t = self.peek()
            if t.kind == "punct" and t.text == "}":
                if result is None:
                    raise ParseError("missing return statement", t.line, t.col)
                self.next()
                break
            if t.kind == "end":
                raise ParseError("missing closing '}'", t.line, t.col)
            if result is not None:
                raise ParseError("statement after return", t.line, t.col)
            if t.kind == "ident" and t.text == "return":
                self.next()
                result = (self.expr(), t)
                self.accept(";")
                continue
            target = self.ident("binding name")
            if target.text in OPS and self.peek().text == "(":
                raise ParseError("a binding needs the form name = expression", target.line, target.col)
            self.expect("=")
            expr = self.expr()
            self.accept(";")
            stmts.append((target, expr))
        end = self.peek()
        if end.kind != "end":
            raise ParseError(f"unexpected {end.text!r} after script", end.line, end.col)
        return return_sort, name, params, open_brace, stmts, result

    def expr(self):
        t = self.next()
        if t.kind == "number":
            if t.text not in ("0", "1"):
                raise ParseError(f"only 0 and 1 may appear as constants, not {t.text}", t.line, t.col)
            return Name(t.text, t.line, t.col)
        if t.kind != "ident" or t.text == "return":
            found = t.text or "end of input"
            raise ParseError(f"expected an expression, found {found!r}", t.line, t.col)
        if not self.accept("("):
            return Name(t.text, t.line, t.col)
        args = []
        if not self.accept(")"):
            while True:
                args.append(self.expr())
                if self.accept(")"):
                    break
                self.expect(",")
        return Call(t.text, tuple(args), t.line, t.col)


def _attach_comments(comments, header_line, stmt_lines, result_line):
    """Distribute comments: header, per-statement leading/trailing, tail."""
    header: list[str] = []
    leading = [[] for _ in stmt_lines]
    trailing: list[str | None] = [None] * len(stmt_lines)
    result_leading: list[str] = []
    result_trailing = None
    tail: list[str] = []
    lines = list(stmt_lines) + [result_line]
    for c in comments:
        if c.line < header_line or (c.line == header_line and c.own_line):
            header.append(c.text)
            continue
        # Index of the statement that starts on or before the comment's line.
        idx = None
        for k, ln in enumerate(lines):
            if ln <= c.line:
                idx = k
        same_line = idx is not None and lines[idx] == c.line and not c.own_line
        if same_line:
            if idx < len(stmt_lines):
                if trailing[idx] is None:
                    trailing[idx] = c.text
                else:
                    trailing[idx] += " " + c.text
            elif result_trailing is None:
                result_trailing = c.text
            else:
                result_trailing += " " + c.text
            continue
        nxt = idx + 1 if idx is not None else 0
        if nxt < len(stmt_lines):
            leading[nxt].append(c.text)
        elif nxt == len(stmt_lines):
            result_leading.append(c.text)
        else:
            tail.append(c.text)
    return header, leading, trailing, result_leading, result_trailing, tail


def parse(source: str, frame_constants: bool = True) -> Script:
    """Parse and check a script.

    With ``frame_constants`` the names 0, 1, I and L refer to the frame
    unless the script binds them itself.
    """
    tokens = tokenize(source)
    p = _Parser(tokens)
    return_sort, name, params, brace, stmts, result = p.script()
    result_expr, result_tok = result
    stmt_lines = [t.line for t, _ in stmts]
    header, leading, trailing, res_lead, res_trail, tail = _attach_comments(
        p.comments, name.line, stmt_lines, result_tok.line
    )
    body = tuple(
        Binding(t.text, e, trailing[k], tuple(leading[k]), t.line) for k, (t, e) in enumerate(stmts)
    )
    script = Script(
        name=name.text,
        params=tuple(pp for pp, _ in params),
        body=body,
        result=result_expr,
        return_sort=return_sort,
        header=tuple(header),
        result_comment=res_trail,
        result_leading=tuple(res_lead),
        trailing=tuple(tail),
    )
    return check(script, frame_constants, {pp.name: tok for pp, tok in params}, stmts)


def check(script: Script, frame_constants: bool = True, param_tokens=None, stmts=None) -> Script:
    """Scope and sort check; returns the script with inferred sorts filled in."""
    bound_names = {b.name for b in script.body} | set(script.param_names())
    env: dict[str, str] = {}
    for k, prm in enumerate(script.params):
        if prm.name in env:
            tok = (param_tokens or {}).get(prm.name)
            raise ParseError(f"duplicate parameter {prm.name!r}",
                             tok.line if tok else 0, tok.col if tok else 0)
        if prm.sort not in SORTS:
            raise ParseError(f"unknown sort {prm.sort!r}", 0, 0)
        env[prm.name] = prm.sort
    constants = {}
    if frame_constants:
        constants = {k: v for k, v in FRAME_CONSTANTS.items() if k not in bound_names}

    def sort_of(e) -> str:
        if isinstance(e, Name):
            if e.ident in env:
                return env[e.ident]
            if e.ident in constants:
                return constants[e.ident]
            if e.ident in FRAME_CONSTANTS and not frame_constants:
                raise ParseError(f"frame constant {e.ident!r} used without a frame", e.line, e.col)
            raise ParseError(f"unbound identifier {e.ident!r}", e.line, e.col)
        if e.op not in OPS:
            raise ParseError(f"unknown construction {e.op!r}", e.line, e.col)
        sorts = tuple(sort_of(a) for a in e.args)
        sig = resolve(e.op, sorts)
        if sig is None:
            ar = arities(e.op)
            if len(sorts) not in ar:
                want = " or ".join(str(a) for a in ar)
                raise ParseError(f"{e.op} takes {want} arguments, got {len(sorts)}", e.line, e.col)
            raise ParseError(f"no overload {e.op}({', '.join(sorts)})", e.line, e.col)
        return sig.result

    sorts = {}
    for k, b in enumerate(script.body):
        if b.name in env:
            tok = stmts[k][0] if stmts else None
            raise ParseError(f"{b.name!r} is already bound", tok.line if tok else b.line,
                             tok.col if tok else 0)
        s = sort_of(b.expr)
        env[b.name] = s
        sorts[b.name] = s
    rs = sort_of(script.result)
    if script.return_sort is not None and script.return_sort != rs:
        e = script.result
        raise ParseError(f"script declares {script.return_sort} but returns {rs}",
                         getattr(e, "line", 0), getattr(e, "col", 0))
    return replace(script, sorts=sorts, result_sort_inferred=rs)
