"""Selects the raw tower kernel: compiled when available, else pure Python.

Set ``EUCLID_KERNEL_PURE=1`` to force the pure-Python implementation.
"""

import os

if os.environ.get("EUCLID_KERNEL_PURE"):
    from . import _tower_py as impl
else:
    try:
        from . import _tower_ext as impl
    except ImportError:
        from . import _tower_py as impl

COMPILED = impl.__name__.rsplit(".", 1)[-1] == "_tower_ext"

zero = impl.zero
one = impl.one
is_zero = impl.is_zero
add = impl.add
sub = impl.sub
neg = impl.neg
scale = impl.scale
mul = impl.mul
inv = impl.inv
lift = impl.lift
interval = impl.interval
sqrt_interval = impl.sqrt_interval
rational_interval = impl.rational_interval
