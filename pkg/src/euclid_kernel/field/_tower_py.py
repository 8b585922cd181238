"""Pure-Python arithmetic on raw quadratic-tower values.

A raw value at level 0 is a ``gmpy2.mpq``.  A raw value at level ``k`` is a
pair ``(a, b)`` of level ``k-1`` values standing for ``a + b*g`` where ``g``
is the square root of the level's radicand ``rads[k-1]``.  The compiled
extension ``_tower_ext`` implements the same functions.
"""

from gmpy2 import isqrt, mpq

_ZERO = mpq(0)
_ONE = mpq(1)
_zeros = [_ZERO]
_ones = [_ONE]


def zero(level):
    while len(_zeros) <= level:
        z = _zeros[-1]
        _zeros.append((z, z))
    return _zeros[level]


def one(level):
    while len(_ones) <= level:
        _ones.append((_ones[-1], zero(len(_ones) - 1)))
    return _ones[level]


def is_zero(x):
    if type(x) is tuple:
        return is_zero(x[0]) and is_zero(x[1])
    return not x


def add(x, y):
    if type(x) is tuple:
        return (add(x[0], y[0]), add(x[1], y[1]))
    return x + y


def sub(x, y):
    if type(x) is tuple:
        return (sub(x[0], y[0]), sub(x[1], y[1]))
    return x - y


def neg(x):
    if type(x) is tuple:
        return (neg(x[0]), neg(x[1]))
    return -x


def scale(x, q):
    if type(x) is tuple:
        return (scale(x[0], q), scale(x[1], q))
    return x * q


def mul(x, y, rads, k):
    if k == 0:
        return x * y
    a, b = x
    c, e = y
    k1 = k - 1
    if is_zero(b):
        if is_zero(e):
            return (mul(a, c, rads, k1), e)
        return (mul(a, c, rads, k1), mul(a, e, rads, k1))
    if is_zero(e):
        return (mul(a, c, rads, k1), mul(b, c, rads, k1))
    be = mul(b, e, rads, k1)
    first = add(mul(a, c, rads, k1), mul(be, rads[k1], rads, k1))
    second = add(mul(a, e, rads, k1), mul(b, c, rads, k1))
    return (first, second)


def inv(x, rads, k):
    """Multiplicative inverse of a nonzero raw value."""
    if k == 0:
        return 1 / x
    a, b = x
    k1 = k - 1
    if is_zero(b):
        return (inv(a, rads, k1), b)
    norm = sub(mul(a, a, rads, k1), mul(mul(b, b, rads, k1), rads[k1], rads, k1))
    ninv = inv(norm, rads, k1)
    return (mul(a, ninv, rads, k1), neg(mul(b, ninv, rads, k1)))


def lift(x, frm, to):
    while frm < to:
        x = (x, zero(frm))
        frm += 1
    return x


def rational_interval(q, prec):
    n = q.numerator << prec
    d = q.denominator
    return (n // d, -((-n) // d))


def interval(x, gens, k, prec):
    """Enclosure ``(lo, hi)`` of ``x`` scaled by ``2**prec``.

    ``gens[j]`` encloses the generator of level ``j+1`` at the same scale.
    """
    if k == 0:
        return rational_interval(x, prec)
    alo, ahi = interval(x[0], gens, k - 1, prec)
    b = x[1]
    if is_zero(b):
        return (alo, ahi)
    blo, bhi = interval(b, gens, k - 1, prec)
    glo, ghi = gens[k - 1]
    p1 = blo * glo
    p2 = blo * ghi
    p3 = bhi * glo
    p4 = bhi * ghi
    lo = min(p1, p2, p3, p4) >> prec
    hi = -((-max(p1, p2, p3, p4)) >> prec)
    return (alo + lo, ahi + hi)


def sqrt_interval(lo, hi, prec):
    if lo < 0:
        lo = 0
    return (isqrt(lo << prec), isqrt(hi << prec) + 1)
