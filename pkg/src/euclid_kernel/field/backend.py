"""Backend-neutral field interface consumed by the geometry modules.

Scalars support ``+ - *`` and comparisons directly.  Division and square
roots are partial, so they go through the backend and return ``None`` when
undefined.  Three backends exist:

``constructible``
    exact constructible reals, a Euclidean field.
``puiseux``
    truncated Puiseux series, a non-Archimedean Euclidean field.
``puiseux-bounded``
    the series of valuation >= 0 inside it, a Playfair ring in which
    reciprocals of infinitesimals do not exist.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import PreconditionViolated
from .constructible import Constructible
from .parse import parse_scalar
from .puiseux import PuiseuxSeries

BACKEND_NAMES = ("constructible", "puiseux", "puiseux-bounded")


class ConstructibleField:
    name = "constructible"
    needs_bounds = False
    up_to_truncation = False

    def __init__(self):
        self.zero = Constructible(0)
        self.one = Constructible(1)

    def coerce(self, value) -> Constructible:
        return Constructible.coerce(value)

    def owns(self, x) -> bool:
        return isinstance(x, Constructible)

    def sign(self, x) -> int:
        return x.sign()

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def recip(self, x):
        return x.recip()

    # With one Kripke node, "no reciprocal anywhere" means no reciprocal here.
    leaf_recip = recip

    def sqrt(self, x):
        return x.sqrt()

    def div(self, a, b, bounds=()):
        r = b.recip()
        return None if r is None else a * r

    def bounded_quotient(self, a, b, bound):
        if abs(a) > abs(b) * bound:
            raise PreconditionViolated("|a| <= |b|*bound does not hold")
        if b.is_zero():
            return self.zero
        return a / b

    def contains(self, x) -> bool:
        return True

    def parse(self, text: str):
        return parse_scalar(text, self)

    def to_expr(self, x) -> str:
        return x.to_expr()

    def approx(self, x, digits: int = 17) -> tuple[str, str]:
        return x.approx(digits)

    def to_fraction(self, x, prec: int = 96) -> Fraction:
        lo, hi = x.interval(prec)
        return (lo + hi) / 2

    def __repr__(self):
        return "ConstructibleField()"


class PuiseuxField:
    """Truncated Puiseux series; ``bounded=True`` gives the finitely bounded view."""

    up_to_truncation = True

    def __init__(self, trunc_order=16, bounded: bool = False):
        trunc_order = Fraction(trunc_order)
        if trunc_order <= 0:
            raise ValueError("truncation order must be positive")
        self.trunc_order = trunc_order
        self.bounded = bounded
        self.name = "puiseux-bounded" if bounded else "puiseux"
        self.needs_bounds = bounded
        self.zero = PuiseuxSeries.constant(self, 0)
        self.one = PuiseuxSeries.constant(self, 1)
        self.t = PuiseuxSeries.monomial(self, 1, 1)

    def coerce(self, value) -> PuiseuxSeries:
        if isinstance(value, PuiseuxSeries):
            return value if value.field is self else value.with_field(self)
        return PuiseuxSeries.constant(self, Constructible.coerce(value))

    def monomial(self, coeff, exponent) -> PuiseuxSeries:
        return PuiseuxSeries.monomial(self, Constructible.coerce(coeff), exponent)

    def series(self, coeffs: dict, denom: int = 1) -> PuiseuxSeries:
        return PuiseuxSeries(self, coeffs, denom)

    def owns(self, x) -> bool:
        return isinstance(x, PuiseuxSeries)

    def sign(self, x) -> int:
        return x.sign()

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def contains(self, x) -> bool:
        v = x.valuation()
        return not self.bounded or v is None or v >= 0

    def recip(self, x):
        if self.bounded and x.valuation() != 0:
            return None
        return x.recip()

    def leaf_recip(self, x):
        """Reciprocal in the full series field (the top node of the Kripke model)."""
        return x.recip()

    def sqrt(self, x):
        return x.sqrt()

    def bounded_quotient(self, a, b, bound):
        """The ``z`` with ``a = b*z`` given ``|a| <= |b|*bound``.

        Raises PreconditionViolated when the bound fails; returns None when
        ``b`` is zero up to truncation and ``a`` is not.
        """
        if (abs(b) * bound - abs(a)).sign() < 0:
            raise PreconditionViolated("|a| <= |b|*bound does not hold")
        if a.is_zero():
            return self.zero
        if b.is_zero():
            return None
        return a * b.recip()

    def div(self, a, b, bounds=()):
        if not self.bounded:
            r = b.recip()
            return None if r is None else a * r
        if a.is_zero():
            return self.zero
        if b.is_zero():
            return None
        for bound in bounds:
            try:
                return self.bounded_quotient(a, b, bound)
            except PreconditionViolated:
                continue
        # Last candidate: the integer witnessing finite boundedness of the quotient.
        q = a * b.recip()
        v = q.valuation()
        if v is not None and v < 0:
            return None
        lead = q.standard_part()
        n = math.floor(abs(float(lead))) + 2
        return self.bounded_quotient(a, b, self.coerce(n))

    def parse(self, text: str):
        return parse_scalar(text, self)

    def to_expr(self, x) -> str:
        return x.to_text()

    def approx(self, x, digits: int = 17) -> tuple[str, str]:
        """Decimal approximation of the standard part (the value at t = 0)."""
        v = x.valuation()
        if v is not None and v < 0:
            return ("inf" if x.sign() > 0 else "-inf", "inf")
        return x.coefficient(0).approx(digits)

    def to_fraction(self, x, prec: int = 96) -> Fraction:
        v = x.valuation()
        if v is not None and v < 0:
            raise ValueError("series is not finitely bounded")
        lo, hi = x.coefficient(0).interval(prec)
        return (lo + hi) / 2

    def __repr__(self):
        return f"PuiseuxField(trunc_order={self.trunc_order}, bounded={self.bounded})"


CONSTRUCTIBLE = ConstructibleField()


def get_backend(name: str = "constructible", trunc_order=16):
    """Backend by CLI name."""
    if name == "constructible":
        return CONSTRUCTIBLE
    if name == "puiseux":
        return PuiseuxField(trunc_order, bounded=False)
    if name == "puiseux-bounded":
        return PuiseuxField(trunc_order, bounded=True)
    raise ValueError(f"unknown backend {name!r}; expected one of {', '.join(BACKEND_NAMES)}")


def field_of(x):
    """The backend owning scalar ``x``."""
    if isinstance(x, PuiseuxSeries):
        return x.field
    return CONSTRUCTIBLE
