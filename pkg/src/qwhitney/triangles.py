"""Triangular arrays of connection coefficients, with exact entries.

The two central triangles tie the monomial basis {x^n} to the generalized
falling-factorial basis

    (x - r | q)_n = (x - r) * (x - r - q) * ... * (x - r - (n-1)q).

First kind (w):   (x - r | q)_n = sum_k w(n, k) * x^k
    w(n+1, k) = w(n, k-1) - (n*q + r) * w(n, k),      w(0, 0) = 1.

Second kind (W):  x^n = sum_k W(n, k) * (x - r | q)_k
    W(n+1, k) = W(n, k-1) + (k*q + r) * W(n, k),      W(0, 0) = 1.

Setting q = 1, r = 0 in the first kind gives the signed Stirling numbers of
the first kind; q = 1, r = r0 gives the r-Stirling variant shifted so that
entry (n, k) holds the coefficient tied to (n + r0, k + r0) in the doubly
shifted convention.  Entries are BiPoly values; ``*_values`` builders run
the same recurrences over plain Fractions for fast evaluation at a rational
point.  ``row_poly`` reassembles sum_k w(n, k) x^k as an XPoly so callers
can check it against the defining product, and ``whitney_first_cheon``
computes a single first-kind entry from the closed double-sum form

    w(n, k) = sum_{i} C(n, i) * (-1)^(n-i) * q^(i-k) * [r|q]_(n-i) * s(i, k)

with [r|q]_m the rising factorial r * (r + q) * ... * (r + (m-1)q) and
s(i, k) the signed Stirling numbers.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from .arith import binomial
from .poly import ONE, Q, R, ZERO, BiPoly, XPoly


class TriangleKind(enum.Enum):
    WHITNEY_FIRST = "w"
    WHITNEY_SECOND = "W"
    STIRLING_FIRST = "s"
    R_STIRLING_FIRST = "sr"


class Triangle:
    """Rows 0..n_max of a connection-coefficient triangle.

    ``entry(n, k)`` returns the BiPoly at row n, column k, and is zero for
    k outside 0..n.  ``r0`` is the shift parameter of the r-Stirling kind
    and None for the other kinds.
    """

    __slots__ = ("_kind", "_n_max", "_rows", "_r0")

    def __init__(
        self,
        kind: TriangleKind,
        n_max: int,
        rows: tuple[tuple[BiPoly, ...], ...],
        r0: int | None = None,
    ):
        self._kind = kind
        self._n_max = n_max
        self._rows = rows
        self._r0 = r0

    @property
    def kind(self) -> TriangleKind:
        return self._kind

    @property
    def n_max(self) -> int:
        return self._n_max

    @property
    def r0(self) -> int | None:
        return self._r0

    def entry(self, n: int, k: int) -> BiPoly:
        if not 0 <= n <= self._n_max:
            raise ValueError(f"row {n} out of range 0..{self._n_max}")
        if 0 <= k <= n:
            return self._rows[n][k]
        return ZERO

    def row(self, n: int) -> tuple[BiPoly, ...]:
        if not 0 <= n <= self._n_max:
            raise ValueError(f"row {n} out of range 0..{self._n_max}")
        return self._rows[n]

    def row_poly(self, n: int) -> XPoly:
        """Row n as a polynomial in x: sum_k entry(n, k) * x^k."""
        return XPoly(self.row(n))


def _whitney_first_rows(n_max: int) -> tuple[tuple[BiPoly, ...], ...]:
    rows: list[tuple[BiPoly, ...]] = [(ONE,)]
    for n in range(n_max):
        prev = rows[-1]
        factor = Q.scale(n) + R
        row = []
        for k in range(n + 2):
            entry = prev[k - 1] if k >= 1 else ZERO
            if k <= n:
                entry = entry - factor * prev[k]
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


def _whitney_second_rows(n_max: int) -> tuple[tuple[BiPoly, ...], ...]:
    rows: list[tuple[BiPoly, ...]] = [(ONE,)]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            entry = prev[k - 1] if k >= 1 else ZERO
            if k <= n:
                entry = entry + (Q.scale(k) + R) * prev[k]
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _substituted_rows(base: str, n_max: int, r0: int) -> tuple[tuple[BiPoly, ...], ...]:
    """First- or second-kind rows with q = 1 and r = r0 substituted."""
    builder = _whitney_first_rows if base == "w" else _whitney_second_rows
    return tuple(
        tuple(p.subst_q(0, 1).subst_r(0, r0) for p in row) for row in builder(n_max)
    )


def whitney_first(n_max: int) -> Triangle:
    """First-kind triangle with symbolic q and r, rows 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return Triangle(TriangleKind.WHITNEY_FIRST, n_max, _whitney_first_rows(n_max))


def whitney_second(n_max: int) -> Triangle:
    """Second-kind triangle with symbolic q and r, rows 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return Triangle(TriangleKind.WHITNEY_SECOND, n_max, _whitney_second_rows(n_max))


def stirling_first(n_max: int) -> Triangle:
    """Signed Stirling numbers of the first kind (q = 1, r = 0)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return Triangle(TriangleKind.STIRLING_FIRST, n_max, _substituted_rows("w", n_max, 0))


def r_stirling_first(n_max: int, r0: int) -> Triangle:
    """Signed r-Stirling numbers of the first kind (q = 1, r = r0 >= 0)."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if r0 < 0:
        raise ValueError("r0 must be a nonnegative integer")
    return Triangle(
        TriangleKind.R_STIRLING_FIRST, n_max, _substituted_rows("w", n_max, r0), r0=r0
    )


def whitney_first_values(n_max: int, q0: Fraction | int, r0: Fraction | int) -> list[list[Fraction]]:
    """First-kind rows evaluated at a rational point, via the same recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    q0 = Fraction(q0)
    r0 = Fraction(r0)
    rows = [[Fraction(1)]]
    for n in range(n_max):
        prev = rows[-1]
        factor = n * q0 + r0
        row = []
        for k in range(n + 2):
            entry = prev[k - 1] if k >= 1 else Fraction(0)
            if k <= n:
                entry = entry - factor * prev[k]
            row.append(entry)
        rows.append(row)
    return rows


def whitney_second_values(n_max: int, q0: Fraction | int, r0: Fraction | int) -> list[list[Fraction]]:
    """Second-kind rows evaluated at a rational point, via the same recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    q0 = Fraction(q0)
    r0 = Fraction(r0)
    rows = [[Fraction(1)]]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            entry = prev[k - 1] if k >= 1 else Fraction(0)
            if k <= n:
                entry = entry + (k * q0 + r0) * prev[k]
            row.append(entry)
        rows.append(row)
    return rows


def triangle(kind: TriangleKind, n_max: int, r0: int | None = None) -> Triangle:
    """Build a triangle by kind; r0 applies to the r-Stirling kind only."""
    if kind is TriangleKind.WHITNEY_FIRST:
        if r0 is not None:
            raise ValueError("r0 only applies to the r-Stirling kind")
        return whitney_first(n_max)
    if kind is TriangleKind.WHITNEY_SECOND:
        if r0 is not None:
            raise ValueError("r0 only applies to the r-Stirling kind")
        return whitney_second(n_max)
    if kind is TriangleKind.STIRLING_FIRST:
        if r0 is not None:
            raise ValueError("r0 only applies to the r-Stirling kind")
        return stirling_first(n_max)
    return r_stirling_first(n_max, 0 if r0 is None else r0)


# -- factorial polynomials -----------------------------------------------------


def rising_factorial(m: int, y: BiPoly = R, step: BiPoly = Q) -> BiPoly:
    """[y|step]_m = y * (y + step) * ... * (y + (m-1)*step); defaults to [r|q]_m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    acc = ONE
    for j in range(m):
        acc = acc * (y + step.scale(j))
    return acc


def falling_factorial(m: int, y: BiPoly = R, step: BiPoly = Q) -> BiPoly:
    """(y|step)_m = y * (y - step) * ... * (y - (m-1)*step); defaults to (r|q)_m."""
    return rising_factorial(m, y, -step)


def falling_factorial_x(m: int) -> XPoly:
    """(x - r | q)_m = (x - r) * (x - r - q) * ... * (x - r - (m-1)q)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    acc = XPoly.one()
    for j in range(m):
        acc = acc.mul_linear(1, -(R + Q.scale(j)))
    return acc


@lru_cache(maxsize=None)
def stirling_first_row(n: int) -> tuple[int, ...]:
    """Row n of the signed first-kind Stirling triangle, as plain integers.

    Computed by its own integer recurrence, independent of the symbolic
    triangles, so it can serve as an oracle for them.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (1,)
    prev = stirling_first_row(n - 1)
    m = n - 1
    row = []
    for k in range(n + 1):
        entry = prev[k - 1] if k >= 1 else 0
        if k <= m:
            entry -= m * prev[k]
        row.append(entry)
    return tuple(row)


def whitney_first_cheon(n: int, k: int) -> BiPoly:
    """First-kind entry (n, k) from the closed Stirling-sum form.

    w(n, k) = sum_{i=k..n} C(n, i) * (-1)^(n - i) * q^(i - k)
              * [r|q]_(n - i) * s(i, k).

    Independent of the recurrence: uses only binomials, rising factorials,
    and the integer Stirling rows.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return ZERO
    total = ZERO
    for i in range(k, n + 1):
        s_ik = stirling_first_row(i)[k]
        if not s_ik:
            continue
        c = binomial(n, i) * s_ik
        if (n - i) % 2 == 1:
            c = -c
        term = BiPoly({(i - k, 0): c}) * rising_factorial(n - i)
        total = total + term
    return total
