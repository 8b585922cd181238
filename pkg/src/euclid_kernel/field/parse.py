"""Parser for exact scalar expression strings such as ``(1+sqrt(5))/2`` or ``1 - t^2``."""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ScalarSyntaxError

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|(sqrt|t)\b|(.))")


def _tokens(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, word, sym = m.groups()
        if num is not None:
            out.append(("num", num))
        elif word is not None:
            out.append(("word", word))
        elif sym is not None and not sym.isspace():
            out.append(("sym", sym))
        pos = m.end()
    out.append(("end", ""))
    return out


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ScalarSyntaxError(f"unexpected {tok[1] or 'end of input'!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        self.take("end")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                v = v * rhs
            else:
                q = self.field.div(v, rhs)
                if q is None:
                    raise ScalarSyntaxError(f"division by zero in {self.text!r}")
                v = q
        return v

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base_is_t = self.peek() == ("word", "t")
        v = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            e = self.exponent()
            if base_is_t and hasattr(self.field, "monomial"):
                return self.field.monomial(1, e)
            if e.denominator != 1 or e < 0:
                raise ScalarSyntaxError(f"only nonnegative integer powers allowed in {self.text!r}")
            result = self.field.one
            for _ in range(int(e)):
                result = result * v
            return result
        return v

    def exponent(self) -> Fraction:
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        if self.peek() == ("sym", "("):
            self.take()
            num = Fraction(self.take("num")[1])
            if self.peek() == ("sym", "/"):
                self.take()
                num = num / Fraction(self.take("num")[1])
            self.take("sym", ")")
            return sign * num
        return sign * Fraction(self.take("num")[1])

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return self.field.coerce(Fraction(tok[1]))
        if tok == ("word", "sqrt"):
            self.take()
            self.take("sym", "(")
            inner = self.expr()
            self.take("sym", ")")
            r = self.field.sqrt(inner)
            if r is None:
                raise ScalarSyntaxError(f"square root of a negative value in {self.text!r}")
            return r
        if tok == ("word", "t"):
            self.take()
            if not hasattr(self.field, "monomial"):
                raise ScalarSyntaxError("the infinitesimal t needs a Puiseux backend")
            return self.field.monomial(1, 1)
        if tok == ("sym", "("):
            self.take()
            v = self.expr()
            self.take("sym", ")")
            return v
        raise ScalarSyntaxError(f"unexpected {tok[1] or 'end of input'!r} in {self.text!r}")


def parse_scalar(text: str, field):
    """Parse ``text`` into an exact element of ``field``."""
    return _Parser(text, field).parse()
