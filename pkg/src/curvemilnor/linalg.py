"""Kernel selection and the thin vector helpers built on top of it.

The compiled kernel is used when it imports; setting CURVEMILNOR_PURE=1 forces
the pure-Python fallback.
"""
from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

from . import _echelon_py

_compiled = None
if os.environ.get("CURVEMILNOR_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _echelon as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

kernel = _compiled if _compiled is not None else _echelon_py
BACKEND = kernel.BACKEND
_MOD_LIMIT = 1 << 31


def make_echelon(ncols: int, p: int | None, backend=None):
    """Echelon accumulator over F_p, or over Q when *p* is None."""
    mod = backend if backend is not None else kernel
    if p is None:
        return mod.IntEchelon(ncols)
    if p >= _MOD_LIMIT:
        return _echelon_py.ModEchelon(ncols, p)
    return mod.ModEchelon(ncols, p)


def integral(vec, p: int | None):
    """Scale a vector of field values to integers with the same span."""
    if p is not None:
        return [int(x) for x in vec]
    dens = [x.denominator for x in vec if isinstance(x, Fraction) and x]
    m = lcm(*dens) if dens else 1
    if m == 1:
        return [int(x) for x in vec]
    return [int(x * m) for x in vec]


def rank_of(rows, ncols: int, p: int | None) -> int:
    ech = make_echelon(ncols, p)
    for r in rows:
        ech.insert(r)
    return ech.rank
