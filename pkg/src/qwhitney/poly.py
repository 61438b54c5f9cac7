"""Sparse bivariate polynomials in q and r over exact rationals.

A ``BiPoly`` stores its terms as a dict mapping exponent pairs ``(dq, dr)``
to nonzero ``Fraction`` coefficients.  The representation is canonical (no
zero coefficients are ever stored, the zero polynomial is the empty map),
so structural equality coincides with mathematical equality; every golden
test in the suite relies on that.

``XPoly`` is a univariate polynomial in an extra variable x whose
coefficients are ``BiPoly`` values.  It exists to carry the defining
integrals: products of linear factors in x are accumulated with
``mul_linear`` and integrated exactly over [0, 1] with ``integrate01``
(termwise antiderivative, coefficient 1/(k+1) for x^k — no numerical
quadrature anywhere).

The canonical term order used for serialization and for the record form is
descending total degree, then descending r-degree, then descending
q-degree.  The human-readable renderings group terms by powers of r, which
is how these polynomials are conventionally written ("r^2 + (q - 1)*r -
(1/2)*q + 1/3").
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .arith import binomial

Key = tuple[int, int]  # (dq, dr)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class BiPoly:
    """Polynomial in the indeterminates q and r over Fraction.

    Instances are immutable by convention: every operation returns a new
    polynomial, so values are safe to share between threads.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, Fraction | int] | None = None):
        normalized: dict[Key, Fraction] = {}
        if terms:
            for (dq, dr), coeff in terms.items():
                if dq < 0 or dr < 0:
                    raise ValueError(f"negative exponent in key ({dq}, {dr})")
                c = _as_fraction(coeff)
                if c:
                    normalized[(dq, dr)] = c
        self._terms = normalized

    @classmethod
    def const(cls, value: Fraction | int) -> BiPoly:
        return cls({(0, 0): _as_fraction(value)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_const(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def const_value(self) -> Fraction:
        """The value of a constant polynomial; raises otherwise."""
        if not self._terms:
            return Fraction(0)
        if not self.is_const():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms[(0, 0)]

    def coeff(self, dq: int, dr: int) -> Fraction:
        return self._terms.get((dq, dr), Fraction(0))

    def r_degree(self) -> int:
        """Highest power of r, or -1 for the zero polynomial."""
        return max((dr for _, dr in self._terms), default=-1)

    def q_degree(self) -> int:
        return max((dq for dq, _ in self._terms), default=-1)

    def r_coefficient(self, dr: int) -> BiPoly:
        """The coefficient of r^dr, as a polynomial in q."""
        return BiPoly({(dq, 0): c for (dq, d), c in self._terms.items() if d == dr})

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        """Terms in canonical order (total degree, then dr, then dq, all descending)."""
        return sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][1], -kv[0][0]))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: BiPoly | Fraction | int) -> BiPoly:
        if not isinstance(other, BiPoly):
            other = BiPoly.const(_as_fraction(other))
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        result = BiPoly.__new__(BiPoly)
        result._terms = {key: -c for key, c in self._terms.items()}
        return result

    def __sub__(self, other: BiPoly | Fraction | int) -> BiPoly:
        if not isinstance(other, BiPoly):
            other = BiPoly.const(_as_fraction(other))
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> BiPoly:
        return BiPoly.const(_as_fraction(other)) + (-self)

    def __mul__(self, other: BiPoly | Fraction | int) -> BiPoly:
        if not isinstance(other, BiPoly):
            return self.scale(_as_fraction(other))
        out: dict[Key, Fraction] = {}
        for (aq, ar), ca in self._terms.items():
            for (bq, br), cb in other._terms.items():
                key = (aq + bq, ar + br)
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = out
        return result

    def __rmul__(self, other: Fraction | int) -> BiPoly:
        return self.scale(_as_fraction(other))

    def scale(self, c: Fraction | int) -> BiPoly:
        c = _as_fraction(c)
        result = BiPoly.__new__(BiPoly)
        result._terms = {} if not c else {key: v * c for key, v in self._terms.items()}
        return result

    def __pow__(self, n: int) -> BiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        acc = ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitution and evaluation ----------------------------------------

    def subst_r(self, a: Fraction | int, b: Fraction | int) -> BiPoly:
        """Replace r by a*r + b (rational a, b), expanded to canonical form."""
        a = _as_fraction(a)
        b = _as_fraction(b)
        out: dict[Key, Fraction] = {}
        for (dq, dr), c in self._terms.items():
            # (a*r + b)^dr expanded by the binomial theorem
            for i in range(dr + 1):
                w = c * binomial(dr, i) * a**i * b ** (dr - i)
                if not w:
                    continue
                key = (dq, i)
                s = out.get(key, Fraction(0)) + w
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = out
        return result

    def subst_q(self, a: Fraction | int, b: Fraction | int) -> BiPoly:
        """Replace q by a*q + b (rational a, b), expanded to canonical form."""
        a = _as_fraction(a)
        b = _as_fraction(b)
        out: dict[Key, Fraction] = {}
        for (dq, dr), c in self._terms.items():
            for i in range(dq + 1):
                w = c * binomial(dq, i) * a**i * b ** (dq - i)
                if not w:
                    continue
                key = (i, dr)
                s = out.get(key, Fraction(0)) + w
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = out
        return result

    def eval_at(self, q0: Fraction | int, r0: Fraction | int) -> Fraction:
        """Exact value at the rational point (q0, r0)."""
        q0 = _as_fraction(q0)
        r0 = _as_fraction(r0)
        total = Fraction(0)
        for (dq, dr), c in self._terms.items():
            total += c * q0**dq * r0**dr
        return total

    # -- serialization -------------------------------------------------------

    def to_records(self) -> list[dict[str, int]]:
        """Canonically ordered list of {dq, dr, num, den} records."""
        return [
            {"dq": dq, "dr": dr, "num": c.numerator, "den": c.denominator}
            for (dq, dr), c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, int]]) -> BiPoly:
        terms: dict[Key, Fraction] = {}
        for rec in records:
            key = (rec["dq"], rec["dr"])
            if key in terms:
                raise ValueError(f"duplicate exponent pair {key}")
            terms[key] = Fraction(rec["num"], rec["den"])
        return cls(terms)

    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"


ZERO = BiPoly()
ONE = BiPoly.const(1)
Q = BiPoly({(1, 0): 1})
R = BiPoly({(0, 1): 1})


# -- rendering ---------------------------------------------------------------
#
# Polynomials are displayed collected in r: groups of descending r-power,
# each with its q-coefficient polynomial, then the r-free terms.  A
# multi-term coefficient is parenthesized with its leading sign pulled out,
# e.g. "-r^3 - (3*q - 3/2)*r^2 - ...".


def _frac_atom(c: Fraction, latex: bool, standalone: bool) -> str:
    """Positive rational as a rendering atom.

    ``standalone`` means the value is a term of its own; otherwise it
    multiplies a variable part and non-integers get grouped: "(1/2)*q".
    """
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    if standalone:
        return f"{c.numerator}/{c.denominator}"
    return f"({c.numerator}/{c.denominator})"


def _var_part(dq: int, dr: int, latex: bool) -> str:
    parts = []
    if dq == 1:
        parts.append("q")
    elif dq > 1:
        parts.append(f"q^{dq}")
    if dr == 1:
        parts.append("r")
    elif dr > 1:
        parts.append(f"r^{dr}")
    return ("" if latex else "*").join(parts)


def _monomial(c: Fraction, dq: int, dr: int, latex: bool) -> str:
    """Unsigned monomial body for a positive coefficient c."""
    variables = _var_part(dq, dr, latex)
    if not variables:
        return _frac_atom(c, latex, standalone=True)
    if c == 1:
        return variables
    sep = "" if latex else "*"
    return f"{_frac_atom(c, latex, standalone=False)}{sep}{variables}"


def _join_signed(chunks: list[tuple[int, str]]) -> str:
    out: list[str] = []
    for i, (sign, body) in enumerate(chunks):
        if i == 0:
            out.append(f"-{body}" if sign < 0 else body)
        else:
            out.append(f" - {body}" if sign < 0 else f" + {body}")
    return "".join(out)


def _render(p: BiPoly, latex: bool) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    by_dr: dict[int, list[tuple[int, Fraction]]] = {}
    for (dq, dr), c in terms:
        by_dr.setdefault(dr, []).append((dq, c))
    chunks: list[tuple[int, str]] = []
    for dr in sorted(by_dr, reverse=True):
        group = sorted(by_dr[dr], key=lambda t: -t[0])
        if dr == 0:
            for dq, c in group:
                sign = -1 if c < 0 else 1
                chunks.append((sign, _monomial(abs(c), dq, 0, latex)))
        elif len(group) == 1:
            dq, c = group[0]
            sign = -1 if c < 0 else 1
            chunks.append((sign, _monomial(abs(c), dq, dr, latex)))
        else:
            lead_sign = -1 if group[0][1] < 0 else 1
            inner = _join_signed(
                [(-1 if c * lead_sign < 0 else 1, _monomial(abs(c), dq, 0, latex)) for dq, c in group]
            )
            sep = "" if latex else "*"
            chunks.append((lead_sign, f"({inner}){sep}{_var_part(0, dr, latex)}"))
    return _join_signed(chunks)


# -- univariate carrier for the integral oracles ------------------------------


class XPoly:
    """Polynomial in x with BiPoly coefficients; coeffs[k] multiplies x^k."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[BiPoly] = ()):  # trailing zeros stripped
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def one(cls) -> XPoly:
        return cls((ONE,))

    def degree(self) -> int:
        """Degree in x, or -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> BiPoly:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else ZERO

    def coefficients(self) -> tuple[BiPoly, ...]:
        return self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: XPoly) -> XPoly:
        n = max(len(self._coeffs), len(other._coeffs))
        return XPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def scale(self, c: BiPoly | Fraction | int) -> XPoly:
        return XPoly(p * c for p in self._coeffs)

    def mul_linear(self, sign: int, c: BiPoly) -> XPoly:
        """Multiply by the linear factor (sign*x + c), sign in {+1, -1}."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        n = len(self._coeffs)
        out = [ZERO] * (n + 1)
        for k, p in enumerate(self._coeffs):
            out[k + 1] = out[k + 1] + p.scale(sign)
            out[k] = out[k] + p * c
        return XPoly(out)

    def subst_x(self, value: BiPoly) -> BiPoly:
        """Evaluate at x = value (a polynomial in q, r), by Horner's rule."""
        acc = ZERO
        for p in reversed(self._coeffs):
            acc = acc * value + p
        return acc

    def integrate01(self) -> BiPoly:
        """Exact integral over [0, 1]: sum of coeffs[k] / (k + 1)."""
        total = ZERO
        for k, p in enumerate(self._coeffs):
            total = total + p.scale(Fraction(1, k + 1))
        return total

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in reversed(range(len(self._coeffs))):
            p = self._coeffs[k]
            if p.is_zero():
                continue
            xpow = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({p}){f'*{xpow}' if xpow else ''}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({self})"
