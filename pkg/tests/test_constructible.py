from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclid_kernel.errors import ScalarSyntaxError
from euclid_kernel.field import kernel
from euclid_kernel.field.constructible import (
    Constructible,
    get_precision_cap,
    set_precision_cap,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicands = st.sampled_from([2, 3, 5, 6, 7])


@st.composite
def quadratic(draw):
    """a + b*sqrt(k) with rational a, b."""
    a, b, k = draw(rationals), draw(rationals), draw(radicands)
    return Constructible(a) + Constructible(b) * Constructible(k).sqrt(), (a, b, k)


def test_sqrt_two_squared(F):
    s = F.sqrt(F.coerce(2))
    assert s * s == 2
    assert not s.is_rational()
    assert F.to_expr(s) == "(sqrt 2)"


def test_redundant_adjunction_is_detected(F):
    s2, s8 = F.sqrt(F.coerce(2)), F.sqrt(F.coerce(8))
    assert s8 == 2 * s2
    assert F.to_expr(s8) == "(* 2 (sqrt 2))"
    # sqrt(3 + 2 sqrt 2) = 1 + sqrt 2 denests
    assert F.sqrt(3 + 2 * s2) == 1 + s2
    assert F.sqrt(F.coerce(6)) == F.sqrt(F.coerce(2)) * F.sqrt(F.coerce(3))


def test_partial_operations(F):
    assert F.recip(F.zero) is None
    assert F.sqrt(F.coerce(-1)) is None
    assert F.sqrt(F.zero) == 0
    assert F.recip(F.coerce(4)) == Fraction(1, 4)


def test_signs_close_to_zero(F):
    s2 = F.sqrt(F.coerce(2))
    # 1.4142 < sqrt 2 < 1.41422, separation about 1e-5
    assert F.sign(s2 - F.parse("1.4142")) == 1
    assert F.sign(s2 - F.parse("1.41422")) == -1
    # (sqrt 2 - 1)^20 is tiny but positive
    tiny = (s2 - 1) ** 20
    assert tiny.sign() == 1
    assert (tiny - tiny).is_zero()


def test_sign_past_precision_cap_uses_exact_fallback(F):
    old = get_precision_cap()
    try:
        set_precision_cap(64)
        s2 = F.sqrt(F.coerce(2))
        tiny = (s2 - 1) ** 80  # about 2^-102, below what 64-bit intervals separate
        assert tiny.sign() == 1
        assert (s2 * s2 - 2).sign() == 0
    finally:
        set_precision_cap(old)


def test_precision_cap_floor():
    with pytest.raises(ValueError):
        set_precision_cap(32)


def test_parse_and_expression_text(F):
    phi = F.parse("(1+sqrt(5))/2")
    assert phi * phi == phi + 1
    assert F.to_expr(phi) == "(+ (/ 1 2) (* (/ 1 2) (sqrt 5)))"
    assert F.parse("-3/4") == Fraction(-3, 4)
    assert F.parse("2^3") == 8
    with pytest.raises(ScalarSyntaxError):
        F.parse("sqrt(-2)")
    with pytest.raises(ScalarSyntaxError):
        F.parse("1 +")


def test_approximation_carries_error_bound(F):
    text, err = F.approx(F.parse("sqrt(2)"), 12)
    assert text == "1.41421356237"
    assert Fraction(err) < Fraction(1, 10**10)
    assert F.approx(F.parse("7/2")) == ("3.5", "0")


@given(quadratic(), quadratic(), quadratic())
def test_field_laws(xa, ya, za):
    x, y, z = xa[0], ya[0], za[0]
    assert (x + y) + z == x + (y + z)
    assert x * (y * z) == (x * y) * z
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if not x.is_zero():
        assert x * x.recip() == 1


@given(quadratic())
def test_sign_matches_float_oracle(xa):
    x, (a, b, k) = xa
    approx = float(a) + float(b) * k ** 0.5
    if abs(approx) > 1e-9:
        assert x.sign() == (1 if approx > 0 else -1)
    assert abs(float(x) - approx) < 1e-9


@given(quadratic())
def test_sqrt_of_square(xa):
    x = xa[0]
    r = (x * x).sqrt()
    assert r == abs(x)
    assert r.sign() >= 0


@given(rationals, rationals)
def test_rational_ordering_matches_fraction(a, b):
    A, B = Constructible(a), Constructible(b)
    assert (A < B) == (a < b)
    assert (A == B) == (a == b)
    assert (A + B).as_fraction() == a + b


def test_kernel_is_selected():
    assert kernel.impl.__name__.endswith(("_tower_ext", "_tower_py"))
    assert kernel.COMPILED == kernel.impl.__name__.endswith("_tower_ext")
