"""Exact scalar arithmetic: arbitrary-precision integers and rationals.

Python integers are already arbitrary precision, and ``fractions.Fraction``
is already the normalized rational we need (positive denominator, reduced to
lowest terms, canonical zero ``0/1``), so this module only adds the two
combinatorial scalars used throughout and re-exports the coefficient type
under its domain name.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for n, k >= 0.

    Returns 0 when k > n, so identity sums can run over uniform index
    ranges without clamping.
    """
    return math.comb(n, k)
