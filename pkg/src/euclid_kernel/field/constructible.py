"""Exact constructible real numbers.

A value is an element of a tower of quadratic extensions

    Q = F0 < F1 = F0(sqrt d1) < ... < Fk = F(k-1)(sqrt dk)

where every radicand ``dj`` is a positive element of ``F(j-1)`` that is not
a square there.  Because each adjunction is genuinely new, the recursive
coefficient representation is canonical: a value is zero exactly when all
its rational leaves are zero.  Square roots first look for a root inside the
current tower (redundant adjunctions are detected, e.g. sqrt(6) inside
Q(sqrt 2, sqrt 3)) and only adjoin a new radical when none exists.

Towers are interned and shared between values.  Combining values from
different towers merges them, re-expressing the second tower's radicals
in the first.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from numbers import Rational

from gmpy2 import is_square, isqrt, mpq, mpz

from ..errors import PrecisionExhausted
from . import kernel as K

__all__ = [
    "Constructible",
    "Tower",
    "set_precision_cap",
    "get_precision_cap",
]

_lock = threading.RLock()
_precision_cap = 4096
_START_PREC = 96

_SMALL_PRIMES = [p for p in range(2, 400) if all(p % q for q in range(2, int(p**0.5) + 1))]


def set_precision_cap(bits: int) -> None:
    """Set the interval-refinement cap, in bits, before exact sign fallback."""
    global _precision_cap
    if bits < 64:
        raise ValueError("precision cap must be at least 64 bits")
    _precision_cap = int(bits)


def get_precision_cap() -> int:
    return _precision_cap


class Tower:
    """An interned chain of quadratic extensions of Q."""

    __slots__ = ("radicands", "depth", "prefixes", "_gens", "_sqrt_cache", "__weakref__")

    _registry: dict = {}

    def __init__(self, radicands: tuple, prefixes: tuple):
        self.radicands = radicands
        self.depth = len(radicands)
        self.prefixes = prefixes + (self,)
        self._gens = {}
        self._sqrt_cache = {}

    @classmethod
    def root(cls) -> "Tower":
        return ROOT

    @property
    def parent(self) -> "Tower":
        return self.prefixes[-2]

    def extend(self, radicand) -> "Tower":
        key = self.radicands + (radicand,)
        with _lock:
            t = Tower._registry.get(key)
            if t is None:
                t = Tower(key, self.prefixes)
                Tower._registry[key] = t
        return t

    def has_prefix(self, other: "Tower") -> bool:
        return other.depth <= self.depth and self.prefixes[other.depth] is other

    def generator_intervals(self, prec: int) -> list:
        gens = self._gens.get(prec)
        if gens is None:
            if self.depth == 0:
                gens = []
            else:
                base = self.parent.generator_intervals(prec)
                k = self.depth - 1
                lo, hi = K.interval(self.radicands[k], base, k, prec)
                gens = base + [K.sqrt_interval(lo, hi, prec)]
            self._gens[prec] = gens
        return gens

    def __repr__(self) -> str:
        return f"Tower(depth={self.depth})"


ROOT = Tower((), ())
Tower._registry[()] = ROOT


# ---------------------------------------------------------------- merging


class _Embedding:
    """Maps raw values of a source tower into a target tower."""

    __slots__ = ("src_depth", "dst", "images")

    def __init__(self, src_depth, dst, images=None):
        self.src_depth = src_depth
        self.dst = dst
        self.images = images

    def __call__(self, raw):
        if self.images is None:
            return K.lift(raw, self.src_depth, self.dst.depth)
        return self._convert(raw, self.src_depth)

    def _convert(self, raw, level):
        n = self.dst.depth
        if level == 0:
            return K.lift(raw, 0, n)
        a, b = raw
        out = self._convert(a, level - 1)
        if not K.is_zero(b):
            out = K.add(out, K.mul(self._convert(b, level - 1), self.images[level - 1],
                                   self.dst.radicands, n))
        return out


_merge_cache: dict = {}


def _merge(t1: Tower, t2: Tower):
    if t1 is t2:
        e = _Embedding(t1.depth, t1)
        return t1, e, e
    if t2.has_prefix(t1):
        return t2, _Embedding(t1.depth, t2), _Embedding(t2.depth, t2)
    if t1.has_prefix(t2):
        return t1, _Embedding(t1.depth, t1), _Embedding(t2.depth, t1)
    key = (t1, t2)
    hit = _merge_cache.get(key)
    if hit is not None:
        return hit
    target = t1
    images = []
    partial = _Embedding(0, target, images)
    for j, rad in enumerate(t2.radicands):
        partial.src_depth = j
        partial.dst = target
        rc = partial._convert(rad, j) if j else K.lift(rad, 0, target.depth)
        root = _sqrt_in(target, rc, target.depth)
        if root is not None:
            images.append(root)
            continue
        n = target.depth
        target = target.extend(rc)
        for i, im in enumerate(images):
            images[i] = (im, K.zero(n))
        images.append((K.zero(n), K.one(n)))
    result = (target, _Embedding(t1.depth, target), _Embedding(t2.depth, target, list(images)))
    with _lock:
        _merge_cache[key] = result
    return result


# ---------------------------------------------------------------- signs


def _sign_raw(tower: Tower, raw, k: int) -> int:
    if K.is_zero(raw):
        return 0
    if k == 0:
        return 1 if raw > 0 else -1
    prec = _START_PREC
    while prec <= _precision_cap:
        lo, hi = K.interval(raw, tower.generator_intervals(prec), k, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2
    return _exact_sign(tower, raw, k)


def _exact_sign(tower: Tower, raw, k: int) -> int:
    """Sign of ``a + b*sqrt(d)`` by comparing ``a**2`` with ``b**2 * d``."""
    if k == 0:
        return (raw > 0) - (raw < 0)
    a, b = raw
    k1 = k - 1
    sb = _sign_raw(tower, b, k1)
    sa = _sign_raw(tower, a, k1)
    if sb == 0 or sa == sb:
        return sa
    if sa == 0:
        return sb
    rads = tower.radicands
    t = K.sub(K.mul(a, a, rads, k1), K.mul(K.mul(b, b, rads, k1), rads[k1], rads, k1))
    st = _sign_raw(tower, t, k1)
    if st == 0:
        raise PrecisionExhausted("radicand is a square: inconsistent tower")
    return sa if st > 0 else sb


# ---------------------------------------------------------------- roots


def _rational_sqrt_parts(q):
    """Write sqrt(q) = c * sqrt(s) with c rational and s a positive integer."""
    n, d = q.numerator, q.denominator
    m = mpz(n * d)
    if is_square(m):
        return mpq(isqrt(m), d), 1
    square = mpz(1)
    rest = m
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > rest:
            break
        while rest % pp == 0:
            rest //= pp
            square *= p
    if is_square(rest):
        square *= isqrt(rest)
        rest = mpz(1)
    return mpq(square, d), rest


def _sqrt_in(tower: Tower, x, k: int):
    """Nonnegative square root of ``x`` inside level ``k`` of ``tower``, or None."""
    if k == 0:
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        if is_square(n) and is_square(d):
            return mpq(isqrt(n), isqrt(d))
        return None
    key = (k, x)
    cache = tower._sqrt_cache
    if key in cache:
        return cache[key]
    root = _sqrt_in_uncached(tower, x, k)
    with _lock:
        if len(cache) > 50000:
            cache.clear()
        cache[key] = root
    return root


def _sqrt_in_uncached(tower: Tower, x, k: int):
    a, b = x
    k1 = k - 1
    rads = tower.radicands
    d = rads[k1]
    if K.is_zero(b):
        r = _sqrt_in(tower, a, k1)
        if r is not None:
            return (r, b)
        # x = v**2 * d  gives  sqrt(x) = v * sqrt(d)
        v = _sqrt_in(tower, K.mul(a, K.inv(d, rads, k1), rads, k1), k1)
        if v is not None:
            return (K.zero(k1), v)
        return None
    norm = K.sub(K.mul(a, a, rads, k1), K.mul(K.mul(b, b, rads, k1), d, rads, k1))
    n = _sqrt_in(tower, norm, k1)
    if n is None:
        return None
    half = mpq(1, 2)
    for cand in (K.scale(K.add(a, n), half), K.scale(K.sub(a, n), half)):
        u = _sqrt_in(tower, cand, k1)
        if u is None or K.is_zero(u):
            continue
        v = K.mul(b, K.inv(K.scale(u, mpq(2)), rads, k1), rads, k1)
        root = (u, v)
        if _sign_raw(tower, root, k) < 0:
            root = K.neg(root)
        return root
    return None


# ---------------------------------------------------------------- values


def _to_mpq(value):
    if isinstance(value, bool):
        return mpq(int(value))
    if isinstance(value, int):
        return mpq(value)
    if type(value).__name__ == "mpq":
        return value
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(Fraction(value))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class Constructible:
    """An exact constructible real number.

    Supports ``+ - *`` and ``/`` by nonzero values, exact comparison, and the
    partial operations :meth:`sqrt` and :meth:`recip`, which return ``None``
    when undefined.
    """

    __slots__ = ("tower", "raw")

    def __init__(self, value=0):
        if isinstance(value, Constructible):
            self.tower, self.raw = value.tower, value.raw
        else:
            self.tower = ROOT
            self.raw = _to_mpq(value)

    @classmethod
    def _make(cls, tower: Tower, raw) -> "Constructible":
        k = tower.depth
        while k and K.is_zero(raw[1]):
            raw = raw[0]
            k -= 1
        tower = tower.prefixes[k]
        obj = object.__new__(cls)
        obj.tower = tower
        obj.raw = raw
        return obj

    @classmethod
    def coerce(cls, value) -> "Constructible":
        if isinstance(value, Constructible):
            return value
        return cls(value)

    # arithmetic -----------------------------------------------------------

    def _align(self, other):
        if self.tower is other.tower:
            return self.tower, self.raw, other.raw
        t, ex, ey = _merge(self.tower, other.tower)
        return t, ex(self.raw), ey(other.raw)

    def _other(self, other):
        if isinstance(other, Constructible):
            return other
        try:
            return Constructible(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        t, x, y = self._align(o)
        return Constructible._make(t, K.add(x, y))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        t, x, y = self._align(o)
        return Constructible._make(t, K.sub(x, y))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Constructible._make(self.tower, K.neg(self.raw))

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.tower.depth == 0:
            return Constructible._make(self.tower, K.scale(self.raw, o.raw))
        if self.tower.depth == 0:
            return Constructible._make(o.tower, K.scale(o.raw, self.raw))
        t, x, y = self._align(o)
        return Constructible._make(t, K.mul(x, y, t.radicands, t.depth))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        r = o.recip()
        if r is None:
            raise ZeroDivisionError("division by zero constructible")
        return self * r

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            r = self.recip()
            if r is None:
                raise ZeroDivisionError("negative power of zero")
            return r ** (-n)
        result = Constructible(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def recip(self):
        """Multiplicative inverse, or None for zero."""
        if K.is_zero(self.raw):
            return None
        t = self.tower
        return Constructible._make(t, K.inv(self.raw, t.radicands, t.depth))

    def sqrt(self):
        """Nonnegative square root, or None for negative values."""
        s = self.sign()
        if s < 0:
            return None
        if s == 0:
            return Constructible(0)
        t = self.tower
        if t.depth == 0:
            c, rest = _rational_sqrt_parts(self.raw)
            if rest == 1:
                return Constructible(c)
            nt = ROOT.extend(mpq(rest))
            return Constructible._make(nt, (mpq(0), c))
        root = _sqrt_in(t, self.raw, t.depth)
        if root is not None:
            return Constructible._make(t, root)
        nt = t.extend(self.raw)
        return Constructible._make(nt, (K.zero(t.depth), K.one(t.depth)))

    # predicates -----------------------------------------------------------

    def sign(self) -> int:
        return _sign_raw(self.tower, self.raw, self.tower.depth)

    def is_zero(self) -> bool:
        return K.is_zero(self.raw)

    def is_rational(self) -> bool:
        return self.tower.depth == 0

    def as_fraction(self) -> Fraction:
        if self.tower.depth:
            raise ValueError("value is irrational")
        return Fraction(int(self.raw.numerator), int(self.raw.denominator))

    def __bool__(self):
        return not K.is_zero(self.raw)

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

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # approximation and text -----------------------------------------------

    def interval(self, prec: int = 128) -> tuple[Fraction, Fraction]:
        """Rigorous enclosure ``(lo, hi)`` with rational endpoints."""
        t = self.tower
        lo, hi = K.interval(self.raw, t.generator_intervals(prec), t.depth, prec)
        scale = 1 << prec
        return Fraction(int(lo), scale), Fraction(int(hi), scale)

    def __float__(self):
        lo, hi = self.interval(96)
        return float((lo + hi) / 2)

    def approx(self, digits: int = 17) -> tuple[str, str]:
        """Decimal approximation and an upper bound on its absolute error."""
        from .text import decimal_with_error

        prec = max(96, int(digits * 3.33) + 40)
        lo, hi = self.interval(prec)
        return decimal_with_error(lo, hi, digits)

    def to_expr(self) -> str:
        """Prefix expression text such as ``(sqrt (/ 3 2))``."""
        return _raw_expr(self.raw, self.tower.radicands, self.tower.depth)

    def __repr__(self):
        return f"Constructible({self.to_expr()})"

    def __str__(self):
        return self.to_expr()


def _rational_expr(q) -> str:
    n, d = int(q.numerator), int(q.denominator)
    if d == 1:
        return str(n)
    return f"(/ {n} {d})"


def _raw_expr(raw, rads, k) -> str:
    if k == 0:
        return _rational_expr(raw)
    a, b = raw
    k1 = k - 1
    terms = []
    if not K.is_zero(a):
        terms.append(_raw_expr(a, rads, k1))
    if not K.is_zero(b):
        root = f"(sqrt {_raw_expr(rads[k1], rads, k1)})"
        if b == K.one(k1):
            terms.append(root)
        elif b == K.neg(K.one(k1)):
            terms.append(f"(- {root})")
        else:
            terms.append(f"(* {_raw_expr(b, rads, k1)} {root})")
    if not terms:
        return "0"
    if len(terms) == 1:
        return terms[0]
    return f"(+ {terms[0]} {terms[1]})"
