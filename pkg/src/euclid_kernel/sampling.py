"""Seeded random scalars, points and configurations for the property suites.

Everything draws from a ``random.Random`` passed in by the caller, so a seed
fixes every sample.  Constructible samples mix grid rationals in [-4, 4]
with square-root expressions; Puiseux samples add small multiples of
``t`` and ``t^(1/2)`` to such constants.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction

from .field.backend import PuiseuxField
from .geometry.primitives import Point

DEFAULT_SEED = 20240611
SEED_ENV = "EUCLID_KERNEL_SEED"

_RADICANDS = (2, 3, 5)


def resolve_seed(seed: int | None = None) -> int:
    """The environment variable wins over ``seed``; then the default."""
    env = os.environ.get(SEED_ENV)
    if env is not None and env.strip():
        return int(env)
    return DEFAULT_SEED if seed is None else int(seed)


def rng_for(seed: int | None = None, stream: str = "") -> random.Random:
    """An independent generator per named stream, all derived from one seed."""
    return random.Random(f"{resolve_seed(seed)}:{stream}")


def grid_rational(rng, lo=-4, hi=4, denominators=(1, 2, 3, 4, 8)) -> Fraction:
    d = rng.choice(denominators)
    return Fraction(rng.randint(lo * d, hi * d), d)


def scalar(rng, backend, kind: str | None = None):
    """One random scalar: ``zero``, ``rational`` or ``sqrt`` (a + b*sqrt(k)) kinds."""
    F = backend
    kind = kind or rng.choices(("zero", "rational", "sqrt"), (1, 4, 4))[0]
    if kind == "zero":
        base = F.zero
    elif kind == "rational":
        base = F.coerce(grid_rational(rng))
    else:
        k = rng.choice(_RADICANDS)
        a = grid_rational(rng, -2, 2)
        b = grid_rational(rng, -1, 1, (1, 2))
        if b == 0:
            b = Fraction(1)
        base = F.coerce(a) + F.coerce(b) * F.sqrt(F.coerce(k))
        if abs(float(F.to_fraction(base))) > 4:
            base = F.coerce(b) * F.sqrt(F.coerce(k))
    if isinstance(F, PuiseuxField) and kind != "zero" and rng.random() < 0.5:
        c = F.coerce(grid_rational(rng, -2, 2, (1, 2)))
        e = rng.choice((Fraction(1), Fraction(1, 2), Fraction(2)))
        base = base + c * F.monomial(1, e)
    return base


def nonneg_scalar(rng, backend):
    x = scalar(rng, backend)
    return -x if backend.sign(x) < 0 else x


def point(rng, backend, kind: str | None = None) -> Point:
    return Point(scalar(rng, backend, kind), scalar(rng, backend, kind))


def rational_point(rng, backend, lo=-4, hi=4) -> Point:
    F = backend
    return Point(F.coerce(grid_rational(rng, lo, hi)), F.coerce(grid_rational(rng, lo, hi)))
