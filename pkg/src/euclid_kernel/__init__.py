"""Exact ruler-and-compass geometry over constructible reals and Puiseux series.

Subpackages: ``field`` (number backends), ``geometry`` (primitives, uniform
constructions, arithmetic on a line), ``script`` (the construction language).
The command line lives in ``euclid_kernel.cli``.
"""

__version__ = "0.1.0"
