"""Decimal rendering of rigorous enclosures."""

from __future__ import annotations

import decimal
from fractions import Fraction


def _fraction_to_decimal(q: Fraction, ctx: decimal.Context) -> decimal.Decimal:
    return ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))


def decimal_with_error(lo: Fraction, hi: Fraction, digits: int) -> tuple[str, str]:
    """Midpoint of ``[lo, hi]`` to ``digits`` significant digits, plus an error bound.

    The bound covers both the enclosure width and the rounding of the
    printed midpoint, and is itself rounded up.
    """
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    mid = (lo + hi) / 2
    shown = _fraction_to_decimal(mid, ctx)
    if shown == 0:
        shown = decimal.Decimal(0)
    exact_shown = Fraction(shown)
    err = max(abs(exact_shown - lo), abs(hi - exact_shown))
    up = decimal.Context(prec=2, rounding=decimal.ROUND_UP)
    err_text = "0" if err == 0 else format(_fraction_to_decimal(err, up), "E")
    text = format(shown, "f") if abs(shown) >= decimal.Decimal("1e-6") or shown == 0 else format(shown, "E")
    if "." in text and "E" not in text:
        text = text.rstrip("0").rstrip(".") or "0"
    return text, err_text


def significant(q: Fraction, digits: int = 12) -> str:
    """Deterministic fixed-significance rendering used in SVG output."""
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    d = _fraction_to_decimal(q, ctx)
    if d == 0:
        return "0"
    text = format(d, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text
