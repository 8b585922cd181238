from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euclid_kernel.errors import PreconditionViolated
from euclid_kernel.field.backend import get_backend

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exponents = st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)])


@st.composite
def series(draw, field, min_terms=1):
    F = field
    x = F.zero
    for _ in range(draw(st.integers(min_terms, 3))):
        x = x + F.monomial(draw(small), draw(exponents))
    return x


def coeffs(x, upto):
    return [x.coefficient(Fraction(k)) for k in range(upto)]


def test_geometric_series(P):
    r = P.recip(1 + P.t)
    assert coeffs(r, 6) == [1, -1, 1, -1, 1, -1]
    assert r * (1 + P.t) == 1


def test_binomial_sqrt(P):
    s = P.sqrt(1 + P.t)
    want = [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16), Fraction(-5, 128)]
    assert coeffs(s, 5) == want
    assert s * s == 1 + P.t


def test_fractional_exponents(P):
    h = P.sqrt(P.t)
    assert h.valuation() == Fraction(1, 2)
    assert h * h == P.t
    assert P.parse("t^(1/2)") == h


def test_sign_is_sign_of_leading_coefficient(P):
    t = P.t
    assert (t - t * t).sign() == 1
    assert (t * t - t).sign() == -1
    assert (1 - 1000 * t).sign() == 1  # t is below every positive rational
    assert (P.coerce(Fraction(1, 10**6)) - t).sign() == 1


def test_bounded_ring_partiality(Bd):
    t = Bd.t
    assert Bd.recip(t) is None
    assert Bd.leaf_recip(t) is not None
    assert Bd.recip(1 + t) * (1 + t) == 1
    assert Bd.div(t, t * t) is None
    assert Bd.div(t * t, t) == t
    assert not Bd.contains(Bd.leaf_recip(t))


def test_bounded_quotient_checks_its_bound(Bd):
    t = Bd.t
    assert Bd.bounded_quotient(t, 2 * t, Bd.one) == Fraction(1, 2)
    with pytest.raises(PreconditionViolated):
        Bd.bounded_quotient(Bd.one, t, Bd.coerce(10**6))


def test_text_form(P):
    assert P.to_expr(P.parse("1 - t^2")) == "1 - t^2 + O(t^8)"
    assert P.to_expr(1 / P.t) == "t^-1 + O(t^6)"


def test_truncation_order_bounds_precision():
    lo = get_backend("puiseux", 3)
    r = lo.recip(1 + lo.t)
    assert r.coefficient(Fraction(2)) == 1
    assert r.coefficient(Fraction(3)) == 0  # beyond the order, dropped
    with pytest.raises(ValueError):
        get_backend("puiseux", 0)


@given(st.data())
def test_ring_laws(data):
    P = get_backend("puiseux", 6)
    x, y, z = (data.draw(series(P)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(st.data())
def test_reciprocal_and_sqrt(data):
    P = get_backend("puiseux", 6)
    x = data.draw(series(P))
    if not x.is_zero():
        assert x * P.recip(x) == 1
    if x.sign() >= 0:
        r = P.sqrt(x)
        assert r is not None and r * r == x
    else:
        assert P.sqrt(x) is None
