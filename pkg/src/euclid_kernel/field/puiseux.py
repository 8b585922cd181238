"""Truncated Puiseux series in a positive infinitesimal ``t``.

A series stores finitely many coefficients ``c_k`` of ``t**(k/denom)`` (each a
:class:`Constructible`) below an absolute truncation order.  Terms at or
beyond the truncation order are unknown, so "zero" means zero up to
truncation and is reported as such.

The field of all series is non-Archimedean and Euclidean.  The subring of
series with valuation >= 0 (the finitely bounded elements) is exposed by
:class:`~euclid_kernel.field.backend.PuiseuxField` with ``bounded=True``;
it is a view over the same arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .constructible import Constructible

_ZERO = Constructible(0)
_ONE = Constructible(1)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PuiseuxSeries:
    """Immutable truncated Puiseux series.

    ``coeffs`` maps integer ``k`` to the coefficient of ``t**(k/denom)``;
    only nonzero coefficients below ``trunc`` are kept.
    """

    __slots__ = ("field", "denom", "coeffs", "trunc")

    def __init__(self, field, coeffs, denom: int = 1, trunc=None):
        trunc = field.trunc_order if trunc is None else min(_frac(trunc), field.trunc_order)
        clean = {}
        for k, c in coeffs.items():
            c = Constructible.coerce(c)
            if not c.is_zero() and Fraction(k, denom) < trunc:
                clean[k] = c
        if clean:
            g = denom
            for k in clean:
                g = math.gcd(g, k)
            if g > 1:
                clean = {k // g: c for k, c in clean.items()}
                denom //= g
        else:
            denom = 1
        self.field = field
        self.denom = denom
        self.coeffs = clean
        self.trunc = trunc

    # construction ---------------------------------------------------------

    @classmethod
    def constant(cls, field, value) -> "PuiseuxSeries":
        return cls(field, {0: value})

    @classmethod
    def monomial(cls, field, coeff, exponent) -> "PuiseuxSeries":
        e = _frac(exponent)
        return cls(field, {e.numerator: coeff}, e.denominator)

    def with_field(self, field) -> "PuiseuxSeries":
        return PuiseuxSeries(field, self.coeffs, self.denom, self.trunc)

    # structure --------------------------------------------------------------

    def terms(self):
        """Pairs ``(exponent, coefficient)`` in increasing exponent order."""
        return [(Fraction(k, self.denom), self.coeffs[k]) for k in sorted(self.coeffs)]

    def valuation(self):
        """Least exponent with a nonzero coefficient, or None when zero up to truncation."""
        if not self.coeffs:
            return None
        return Fraction(min(self.coeffs), self.denom)

    def _val_bound(self) -> Fraction:
        v = self.valuation()
        return self.trunc if v is None else v

    def leading(self):
        if not self.coeffs:
            return None
        return self.coeffs[min(self.coeffs)]

    def coefficient(self, exponent) -> Constructible:
        e = _frac(exponent) * self.denom
        if e.denominator != 1:
            return _ZERO
        return self.coeffs.get(int(e), _ZERO)

    def standard_part(self) -> Constructible:
        v = self.valuation()
        if v is not None and v < 0:
            raise ValueError("series is not finitely bounded")
        return self.coefficient(0)

    def sign(self) -> int:
        """Sign of the leading coefficient; 0 means zero up to truncation."""
        lead = self.leading()
        return 0 if lead is None else lead.sign()

    def is_zero(self) -> bool:
        return not self.coeffs

    # arithmetic -------------------------------------------------------------

    def _other(self, other):
        if isinstance(other, PuiseuxSeries):
            return other
        try:
            return PuiseuxSeries.constant(self.field, Constructible.coerce(other))
        except TypeError:
            return None

    def _aligned(self, other):
        d = self.denom * other.denom // math.gcd(self.denom, other.denom)
        fa, fb = d // self.denom, d // other.denom
        return (d, {k * fa: c for k, c in self.coeffs.items()},
                {k * fb: c for k, c in other.coeffs.items()})

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d, a, b = self._aligned(o)
        out = dict(a)
        for k, c in b.items():
            out[k] = out[k] + c if k in out else c
        return PuiseuxSeries(self.field, out, d, min(self.trunc, o.trunc))

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxSeries(self.field, {k: -c for k, c in self.coeffs.items()},
                             self.denom, self.trunc)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        trunc = min(self.trunc + o._val_bound(), o.trunc + self._val_bound())
        d, a, b = self._aligned(o)
        limit = trunc * d
        out = {}
        for i, ci in a.items():
            for j, cj in b.items():
                k = i + j
                if k >= limit:
                    continue
                p = ci * cj
                out[k] = out[k] + p if k in out else p
        return PuiseuxSeries(self.field, out, d, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = PuiseuxSeries.constant(self.field, 1)
        for _ in range(n):
            result = result * self
        return result

    def _normalized(self):
        """Split as ``c * t**v * (1 + u)``; returns (c, v, u-coefficients, count)."""
        k0 = min(self.coeffs)
        c = self.coeffs[k0]
        cinv = c.recip()
        rel = self.trunc - Fraction(k0, self.denom)
        count = math.ceil(rel * self.denom)
        u = [_ZERO] * max(count, 1)
        for k, ck in self.coeffs.items():
            n = k - k0
            if 0 < n < count:
                u[n] = ck * cinv
        return c, k0, u, count

    def recip(self):
        """Series inverse, or None when zero up to truncation."""
        if not self.coeffs:
            return None
        c, k0, u, count = self._normalized()
        w = [_ONE] + [_ZERO] * (count - 1)
        for n in range(1, count):
            acc = _ZERO
            for i in range(1, n + 1):
                if not u[i].is_zero() and not w[n - i].is_zero():
                    acc = acc + u[i] * w[n - i]
            w[n] = -acc
        cinv = c.recip()
        coeffs = {n - k0: w[n] * cinv for n in range(count) if not w[n].is_zero()}
        v = Fraction(k0, self.denom)
        return PuiseuxSeries(self.field, coeffs, self.denom, self.trunc - 2 * v)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        r = o.recip()
        if r is None:
            raise ZeroDivisionError("division by a series that is zero up to truncation")
        return self * r

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def sqrt(self):
        """Square root with positive leading coefficient, or None when negative."""
        if not self.coeffs:
            return PuiseuxSeries(self.field, {}, 1, self.trunc / 2)
        c, k0, u, count = self._normalized()
        rc = c.sqrt()
        if rc is None:
            return None
        w = [_ONE] + [_ZERO] * (count - 1)
        for n in range(1, count):
            acc = u[n]
            for i in range(1, n):
                if not w[i].is_zero() and not w[n - i].is_zero():
                    acc = acc - w[i] * w[n - i]
            w[n] = acc * Fraction(1, 2)
        # t**(k0/(2d)) times a series in t**(1/d)
        denom = 2 * self.denom
        coeffs = {k0 + 2 * n: w[n] * rc for n in range(count) if not w[n].is_zero()}
        v = Fraction(k0, self.denom)
        return PuiseuxSeries(self.field, coeffs, denom, self.trunc - v / 2)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # comparison ------------------------------------------------------------

    def _cmp(self, other):
        o = self._other(other)
        if o is None:
            return None
        return (self - o).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __ne__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c != 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    # text -------------------------------------------------------------------

    def to_text(self) -> str:
        """Text such as ``1 - 1/2*t + 3*t^(1/2) + O(t^16)``."""
        parts = []
        for e, c in self.terms():
            neg = c.sign() < 0
            mag = -c if neg else c
            coeff = _coeff_text(mag)
            if e == 0:
                body = coeff
            else:
                power = "t" if e == 1 else (f"t^{e}" if e.denominator == 1 else f"t^({e})")
                body = power if coeff == "1" else f"{coeff}*{power}"
            parts.append(("-" if neg else "+", body))
        tail = self.trunc
        tail_text = f"O(t^{tail})" if tail.denominator == 1 else f"O(t^({tail}))"
        if not parts:
            return f"0 + {tail_text}"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return f"{out} + {tail_text}"

    def __repr__(self):
        return f"PuiseuxSeries({self.to_text()})"

    __str__ = to_text


def _coeff_text(c: Constructible) -> str:
    if c.is_rational():
        f = c.as_fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return c.to_expr()
