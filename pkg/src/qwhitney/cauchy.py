"""Cauchy polynomials with a q parameter, their oracles, and identity checks.

The first-kind polynomial is the exact integral of the generalized falling
factorial over the unit interval,

    c_n(r) = integral_0^1 (x - r | q)_n dx,

and the second kind integrates (-x + r | q)_n instead.  Expanding the
integrands in powers of x turns both into weighted row sums of the
first-kind triangle:

    c_n(r)       = sum_k w(n, k) / (k + 1)
    chat_n(-r)   = sum_k (-1)^k w(n, k) / (k + 1)

so ``cauchy_second`` substitutes r -> -r into the alternating sum.  Each
construction has an independent oracle: the ``*_integral`` functions build
the defining product factor by factor and integrate it termwise, and
``cauchy_first_via_stirling`` uses the closed double sum over Stirling
numbers.  Agreement of the code paths is what the oracle suites check.

Setting q = 1 and r = 0 gives the classical Cauchy numbers of both kinds
(1, 1/2, -1/6, 1/4, ... and 1, -1/2, 5/6, -9/4, ...); keeping q symbolic
and only sending r to 0 gives the one-parameter numbers

    c_n^q    = sum_k q^(n-k) s(n, k) / (k + 1)
    chat_n^q = sum_k (-1)^k q^(n-k) s(n, k) / (k + 1).

The ``verify_*`` functions check the remaining identities: the shift law

    c_n(r + s) = sum_j (-1)^(n-j) C(n, j) [r|q]_(n-j) c_j(s),

its entrywise analogue on the first-kind triangle, the mutual-inverse
relations against the second-kind triangle

    sum_k W(n, k) c_k(r) = 1/(n+1),
    sum_k W(n, k) chat_k(-r) = (-1)^n/(n+1),

and the q = 1 specialization of the shift law where the right side is a
binomial convolution of classical Cauchy numbers.  Each verifier has a
``*_counterexample`` twin that returns None on success and a description
of the first failing case otherwise; the boolean form just wraps it.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from . import triangles
from .arith import binomial
from .poly import ONE, Q, R, ZERO, BiPoly, XPoly
from .triangles import rising_factorial, stirling_first_row


class CauchyKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


def cauchy_first(n: int) -> BiPoly:
    """c_n(r) as a polynomial in q and r, from the first-kind triangle row."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = triangles.whitney_first(n).row(n)
    total = ZERO
    for k, w_nk in enumerate(row):
        total = total + w_nk.scale(Fraction(1, k + 1))
    return total


def cauchy_second(n: int) -> BiPoly:
    """chat_n(r), via the alternating row sum evaluated at -r."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = triangles.whitney_first(n).row(n)
    total = ZERO
    for k, w_nk in enumerate(row):
        total = total + w_nk.scale(Fraction((-1) ** k, k + 1))
    return total.subst_r(-1, 0)


def cauchy_poly(kind: CauchyKind, n: int) -> BiPoly:
    """Dispatch on kind: c_n(r) or chat_n(r)."""
    return cauchy_first(n) if kind is CauchyKind.FIRST else cauchy_second(n)


def cauchy_first_integral(n: int) -> BiPoly:
    """Oracle for c_n(r): expand (x - r | q)_n and integrate over [0, 1].

    Independent of the triangle recurrence; only the factored product and
    termwise integration are used.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return triangles.falling_factorial_x(n).integrate01()


def cauchy_second_integral(n: int) -> BiPoly:
    """Oracle for chat_n(r): expand (-x + r | q)_n and integrate over [0, 1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = XPoly.one()
    for j in range(n):
        acc = acc.mul_linear(-1, R - Q.scale(j))
    return acc.integrate01()


def cauchy_first_via_stirling(n: int) -> BiPoly:
    """c_n(r) from the closed double sum over Stirling numbers.

    c_n(r) = sum_{i=0..n} sum_{k=0..i} C(n, i) (-1)^(n-i) q^(i-k)
             [r|q]_(n-i) s(i, k) / (k + 1).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for i in range(n + 1):
        rise = rising_factorial(n - i)
        srow = stirling_first_row(i)
        sign = -1 if (n - i) % 2 == 1 else 1
        c_ni = binomial(n, i) * sign
        inner = ZERO
        for k in range(i + 1):
            s_ik = srow[k]
            if s_ik:
                inner = inner + BiPoly({(i - k, 0): Fraction(c_ni * s_ik, k + 1)})
        if not inner.is_zero():
            total = total + inner * rise
    return total


def cauchy_number(kind: CauchyKind, n: int) -> Fraction:
    """Classical Cauchy number of the given kind: the value at q = 1, r = 0."""
    return cauchy_poly(kind, n).eval_at(1, 0)


def q_cauchy_number(kind: CauchyKind, n: int) -> BiPoly:
    """Cauchy number with q parameter: the r = 0 value, polynomial in q alone.

    Computed from the Stirling sum sum_k (+-1)^k q^(n-k) s(n, k) / (k + 1),
    not by substituting into the polynomials; the specialization checks in
    the reductions suite compare the two routes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = ZERO
    for k, s_nk in enumerate(stirling_first_row(n)):
        if not s_nk:
            continue
        c = Fraction(s_nk, k + 1)
        if kind is CauchyKind.SECOND and k % 2 == 1:
            c = -c
        total = total + BiPoly({(n - k, 0): c})
    return total


# -- identity verifiers --------------------------------------------------------


def shift_counterexample(n: int, s: Fraction | int) -> str | None:
    """Check c_n(r + s) = sum_j (-1)^(n-j) C(n, j) [r|q]_(n-j) c_j(s).

    The left side substitutes r -> r + s; on the right, c_j(s) is the
    polynomial with r replaced by the constant s (a polynomial in q only),
    while the rising factorial carries the r dependence.
    """
    s = Fraction(s)
    lhs = cauchy_first(n).subst_r(1, s)
    rhs = ZERO
    for j in range(n + 1):
        c = binomial(n, j) * (-1 if (n - j) % 2 == 1 else 1)
        rhs = rhs + (rising_factorial(n - j) * cauchy_first(j).subst_r(0, s)).scale(c)
    if lhs == rhs:
        return None
    return f"shift law fails at n={n}, s={s}: lhs={lhs}, rhs={rhs}"


def verify_shift(n: int, s: Fraction | int) -> bool:
    return shift_counterexample(n, s) is None


def inversion_counterexample(n: int) -> str | None:
    """Check both row sums against the second-kind triangle.

    sum_k W(n, k) c_k(r) must collapse to the constant 1/(n+1), and
    sum_k W(n, k) chat_k(-r) to (-1)^n/(n+1).
    """
    w2 = triangles.whitney_second(n)
    lhs_first = ZERO
    lhs_second = ZERO
    for k in range(n + 1):
        entry = w2.entry(n, k)
        lhs_first = lhs_first + entry * cauchy_first(k)
        lhs_second = lhs_second + entry * cauchy_second(k).subst_r(-1, 0)
    target_first = BiPoly.const(Fraction(1, n + 1))
    target_second = BiPoly.const(Fraction((-1) ** n, n + 1))
    if lhs_first != target_first:
        return f"first-kind inversion fails at n={n}: got {lhs_first}"
    if lhs_second != target_second:
        return f"second-kind inversion fails at n={n}: got {lhs_second}"
    return None


def verify_inversion(n: int) -> bool:
    return inversion_counterexample(n) is None


def cheon_counterexample(n: int, s: Fraction | int) -> str | None:
    """Check the entrywise shift law on the first-kind triangle.

    With w_a(n, k) the entry at parameter r = a, for every k <= n:

        w_{r+s}(n, k) = sum_j (-1)^(n-j) C(n, j) [r|q]_(n-j) w_s(j, k).
    """
    s = Fraction(s)
    tri = triangles.whitney_first(n)
    shifted = [tri.entry(n, k).subst_r(1, s) for k in range(n + 1)]
    at_s = [[tri.entry(j, k).subst_r(0, s) for k in range(j + 1)] for j in range(n + 1)]
    rise = [rising_factorial(m) for m in range(n + 1)]
    for k in range(n + 1):
        rhs = ZERO
        for j in range(k, n + 1):
            c = binomial(n, j) * (-1 if (n - j) % 2 == 1 else 1)
            rhs = rhs + (rise[n - j] * at_s[j][k]).scale(c)
        if rhs != shifted[k]:
            return (
                f"triangle shift law fails at n={n}, k={k}, s={s}: "
                f"lhs={shifted[k]}, rhs={rhs}"
            )
    return None


def verify_cheon(n: int, s: Fraction | int) -> bool:
    return cheon_counterexample(n, s) is None


def classical_shift_counterexample(n: int) -> str | None:
    """Check the q = 1 shift law against classical Cauchy numbers.

    c_n(r) at q = 1 must equal
    sum_i C(n, i) (-1)^(n-i) [r|1]_(n-i) c_i with c_i the classical numbers.
    """
    lhs = cauchy_first(n).subst_q(0, 1)
    rhs = ZERO
    for i in range(n + 1):
        c = binomial(n, i) * (-1 if (n - i) % 2 == 1 else 1)
        value = cauchy_number(CauchyKind.FIRST, i) * c
        rhs = rhs + rising_factorial(n - i, step=ONE).scale(value)
    if lhs == rhs:
        return None
    return f"classical shift law fails at n={n}: lhs={lhs}, rhs={rhs}"


def verify_classical_shift(n: int) -> bool:
    return classical_shift_counterexample(n) is None
