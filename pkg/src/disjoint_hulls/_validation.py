"""Exact conversion of array-like input to rational points."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Integral, Rational, Real

import numpy as np


def _exact(value) -> Fraction:
    if isinstance(value, (Integral, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, (Real, np.floating)):
        f = float(value)
        if not math.isfinite(f):
            raise ValueError(f"non-finite value {value!r} in input")
        return Fraction(f)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact number")


def exact_points(X) -> list[tuple[Fraction, Fraction]]:
    """Rows of a two-column array-like as exact coordinate pairs.

    Object arrays of :class:`~fractions.Fraction` are kept exact; floats are
    converted without rounding.
    """
    arr = np.asarray(X, dtype=object)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an array of shape (n_samples, 2), got {arr.shape}")
    return [(_exact(x), _exact(y)) for x, y in arr]
