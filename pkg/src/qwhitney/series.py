"""Truncated formal power series in t with BiPoly coefficients.

A ``Series`` is an exact truncation: it carries its order N and the
coefficients of t^0 .. t^N.  Addition and multiplication require matching
orders (mixing truncations silently would corrupt the high coefficients),
and ``exp`` is the formal exponential of a series with zero constant term,
computed through the standard derivative recurrence

    b_0 = 1,   n * b_n = sum_{j=1..n} j * a_j * b_{n-j}   for f = exp(a).

On top of the generic type sit the generating functions used by the
verification suites.  With L(t) = ln(1 + q*t) / q, whose coefficients are
[t^n] L = (-1)^(n+1) * q^(n-1) / n for n >= 1:

    column k of the first-kind triangle:  (1 + q*t)^(-r/q) * L^k / k!
    first Cauchy polynomials:             (1 + q*t)^(-r/q) * sum_k L^k / (k+1)!
    second Cauchy polynomials:            (1 + q*t)^(r/q) * (exp(-L) - 1) / (-L)

where (1 + q*t)^(a/q) means exp(a * L), which is polynomial in q and r at
every order.  ``egf_term`` extracts n! * [t^n], the value the triangles
and polynomial constructors must reproduce.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import factorial
from .poly import ONE, ZERO, BiPoly


class Series:
    """Power series truncated at a fixed order, inclusive."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: tuple[BiPoly, ...] | list[BiPoly]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(coeffs)
        if len(cs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(cs)}")
        self._order = order
        self._coeffs = cs

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls(order, (ZERO,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls(order, (ONE,) + (ZERO,) * order)

    @property
    def order(self) -> int:
        return self._order

    def coeff(self, n: int) -> BiPoly:
        if not 0 <= n <= self._order:
            raise ValueError(f"coefficient {n} out of range for order {self._order}")
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def _check_order(self, other: Series) -> None:
        if self._order != other._order:
            raise ValueError(f"order mismatch: {self._order} vs {other._order}")

    def __add__(self, other: Series) -> Series:
        self._check_order(other)
        return Series(self._order, tuple(a + b for a, b in zip(self._coeffs, other._coeffs)))

    def __sub__(self, other: Series) -> Series:
        self._check_order(other)
        return Series(self._order, tuple(a - b for a, b in zip(self._coeffs, other._coeffs)))

    def __mul__(self, other: Series) -> Series:
        self._check_order(other)
        n = self._order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(n, tuple(out))

    def scale(self, c: Fraction | int) -> Series:
        return Series(self._order, tuple(p.scale(c) for p in self._coeffs))

    def scale_poly(self, p: BiPoly) -> Series:
        return Series(self._order, tuple(c * p for c in self._coeffs))

    def exp(self) -> Series:
        """Formal exponential; requires zero constant term."""
        if not self._coeffs[0].is_zero():
            raise ValueError("exp requires a series with zero constant term")
        n = self._order
        out = [ZERO] * (n + 1)
        out[0] = ONE
        for m in range(1, n + 1):
            acc = ZERO
            for j in range(1, m + 1):
                a = self._coeffs[j]
                if not a.is_zero():
                    acc = acc + (a * out[m - j]).scale(j)
            out[m] = acc.scale(Fraction(1, m))
        return Series(n, tuple(out))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self._coeffs) if not c.is_zero())
        return f"Series(order={self._order}, {body or '0'})"


def log1p_qt_over_q(order: int) -> Series:
    """L(t) = ln(1 + q*t) / q, with [t^n] = (-1)^(n+1) * q^(n-1) / n."""
    coeffs = [ZERO]
    for n in range(1, order + 1):
        sign = 1 if n % 2 == 1 else -1
        coeffs.append(BiPoly({(n - 1, 0): Fraction(sign, n)}))
    return Series(order, tuple(coeffs))


def binomial_power(a: BiPoly, order: int) -> Series:
    """(1 + q*t)^(a/q) = exp(a * L(t)), polynomial in q and r at every order."""
    return log1p_qt_over_q(order).scale_poly(a).exp()


def expm1_div(s: Series) -> Series:
    """(exp(s) - 1) / s for a series s with zero constant term.

    Computed directly as sum_{k>=0} s^k / (k+1)!, which needs no division:
    the quotient is taken termwise on the powers of s.
    """
    if not s.coeff(0).is_zero():
        raise ValueError("expm1_div requires a series with zero constant term")
    n = s.order
    total = Series.zero(n)
    power = Series.one(n)
    for k in range(n + 1):
        total = total + power.scale(Fraction(1, factorial(k + 1)))
        power = power * s
    return total


def whitney_column_egf(k: int, order: int) -> Series:
    """EGF of column k of the first-kind triangle: (1+q*t)^(-r/q) * L^k / k!."""
    if k < 0:
        raise ValueError("column index must be nonnegative")
    L = log1p_qt_over_q(order)
    power = Series.one(order)
    for _ in range(k):
        power = power * L
    minus_r = BiPoly({(0, 1): -1})
    return binomial_power(minus_r, order) * power.scale(Fraction(1, factorial(k)))


def cauchy_first_egf(order: int) -> Series:
    """EGF of the first Cauchy polynomials: (1+q*t)^(-r/q) * sum_k L^k/(k+1)!."""
    L = log1p_qt_over_q(order)
    minus_r = BiPoly({(0, 1): -1})
    return binomial_power(minus_r, order) * expm1_div(L)


def cauchy_second_egf(order: int) -> Series:
    """EGF of the second Cauchy polynomials: (1+q*t)^(r/q) * (exp(-L)-1)/(-L)."""
    L = log1p_qt_over_q(order)
    r = BiPoly({(0, 1): 1})
    return binomial_power(r, order) * expm1_div(L.scale(-1))


def egf_term(s: Series, n: int) -> BiPoly:
    """n! * [t^n] s, the exponential coefficient at index n."""
    return s.coeff(n).scale(factorial(n))
