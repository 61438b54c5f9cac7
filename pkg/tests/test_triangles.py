from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwhitney import (
    ONE,
    Q,
    R,
    ZERO,
    BiPoly,
    Triangle,
    TriangleKind,
    XPoly,
    falling_factorial,
    falling_factorial_x,
    r_stirling_first,
    rising_factorial,
    stirling_first,
    stirling_first_row,
    triangle,
    whitney_first,
    whitney_first_cheon,
    whitney_first_values,
    whitney_second,
    whitney_second_values,
)

points = st.fractions(min_value=F(-5), max_value=F(5), max_denominator=6)


class TestWhitneyFirst:
    def test_row_two(self):
        tri = whitney_first(2)
        assert tri.row(2) == (R * R + Q * R, -(R.scale(2) + Q), ONE)

    def test_diagonal_is_one(self):
        tri = whitney_first(8)
        for n in range(9):
            assert tri.entry(n, n) == ONE

    def test_rows_match_the_defining_product(self):
        tri = whitney_first(8)
        for n in range(9):
            assert tri.row_poly(n) == falling_factorial_x(n)

    def test_entries_are_homogeneous(self):
        tri = whitney_first(10)
        for n in range(11):
            for k in range(n + 1):
                terms = tri.entry(n, k).sorted_terms()
                assert all(dq + dr == n - k for (dq, dr), _ in terms)
                assert len(terms) <= n - k + 1

    def test_out_of_range(self):
        tri = whitney_first(3)
        assert tri.entry(2, 3) == ZERO
        with pytest.raises(ValueError):
            tri.row(4)
        with pytest.raises(ValueError):
            whitney_first(-1)


class TestWhitneySecond:
    def test_small_rows(self):
        tri = whitney_second(2)
        assert tri.row(1) == (R, ONE)
        assert tri.row(2) == (R * R, R.scale(2) + Q, ONE)

    def test_diagonal_is_one(self):
        tri = whitney_second(8)
        for n in range(9):
            assert tri.entry(n, n) == ONE

    def test_rows_reassemble_the_monomial(self):
        tri = whitney_second(8)
        for n in range(9):
            total = XPoly(())
            for k in range(n + 1):
                total = total + falling_factorial_x(k).scale(tri.entry(n, k))
            assert total == XPoly((ZERO,) * n + (ONE,))


class TestStirling:
    def test_integer_rows(self):
        assert stirling_first_row(0) == (1,)
        assert stirling_first_row(3) == (0, 2, -3, 1)
        assert stirling_first_row(4) == (0, -6, 11, -6, 1)
        with pytest.raises(ValueError):
            stirling_first_row(-1)

    def test_triangle_matches_integer_rows(self):
        tri = stirling_first(6)
        for n in range(7):
            row = stirling_first_row(n)
            for k in range(n + 1):
                assert tri.entry(n, k) == BiPoly.const(row[k])

    def test_no_fixed_point_free_column(self):
        tri = stirling_first(6)
        for n in range(1, 7):
            assert tri.entry(n, 0) == ZERO

    def test_entries_are_constant(self):
        tri = stirling_first(5)
        for n in range(6):
            for k in range(n + 1):
                assert tri.entry(n, k).is_const()


class TestRStirling:
    def test_zero_shift_reduces_to_stirling(self):
        shifted = r_stirling_first(6, 0)
        plain = stirling_first(6)
        for n in range(7):
            assert shifted.row(n) == plain.row(n)

    def test_small_shifted_rows(self):
        assert r_stirling_first(1, 1).row(1) == (-ONE, ONE)
        assert r_stirling_first(2, 2).row(2) == (
            BiPoly.const(6),
            BiPoly.const(-5),
            ONE,
        )

    def test_negative_shift_rejected(self):
        with pytest.raises(ValueError):
            r_stirling_first(3, -1)

    def test_shifted_recurrence(self):
        for r0 in (0, 1, 3):
            tri = r_stirling_first(6, r0)
            for n in range(6):
                for k in range(n + 2):
                    assert tri.entry(n + 1, k) == tri.entry(n, k - 1) - tri.entry(
                        n, k
                    ).scale(n + r0)

    def test_matches_first_kind_at_q_one(self):
        w1 = whitney_first(6)
        for r0 in (0, 2, 5):
            tri = r_stirling_first(6, r0)
            for n in range(7):
                for k in range(n + 1):
                    assert w1.entry(n, k).subst_q(0, 1).subst_r(0, r0) == tri.entry(n, k)


class TestFactorialProducts:
    def test_empty_products(self):
        assert rising_factorial(0) == ONE
        assert falling_factorial(0) == ONE
        assert falling_factorial_x(0) == XPoly.one()

    def test_rising_examples(self):
        assert rising_factorial(2) == R * R + Q * R
        assert rising_factorial(3, step=ONE) == BiPoly(
            {(0, 3): 1, (0, 2): 3, (0, 1): 2}
        )

    def test_falling_examples(self):
        assert falling_factorial(2) == R * R - Q * R
        assert falling_factorial(3, y=Q, step=R) == Q * (Q - R) * (Q - R.scale(2))

    def test_falling_is_rising_with_negated_step(self):
        for m in range(5):
            assert falling_factorial(m) == rising_factorial(m, step=-Q)

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            rising_factorial(-1)
        with pytest.raises(ValueError):
            falling_factorial_x(-2)


class TestCheonForm:
    def test_matches_recurrence(self):
        tri = whitney_first(7)
        for n in range(8):
            for k in range(n + 1):
                assert whitney_first_cheon(n, k) == tri.entry(n, k)

    def test_out_of_range_is_zero(self):
        assert whitney_first_cheon(2, 5) == ZERO
        with pytest.raises(ValueError):
            whitney_first_cheon(-1, 0)


class TestNumericValues:
    @given(points, points)
    def test_first_kind_values_match_symbolic(self, q0, r0):
        tri = whitney_first(6)
        values = whitney_first_values(6, q0, r0)
        for n in range(7):
            for k in range(n + 1):
                assert values[n][k] == tri.entry(n, k).eval_at(q0, r0)

    @given(points, points)
    def test_second_kind_values_match_symbolic(self, q0, r0):
        tri = whitney_second(6)
        values = whitney_second_values(6, q0, r0)
        for n in range(7):
            for k in range(n + 1):
                assert values[n][k] == tri.entry(n, k).eval_at(q0, r0)


class TestDispatcher:
    def test_kinds(self):
        assert triangle(TriangleKind.WHITNEY_FIRST, 3).row(2) == whitney_first(3).row(2)
        assert triangle(TriangleKind.WHITNEY_SECOND, 3).kind is TriangleKind.WHITNEY_SECOND
        assert triangle(TriangleKind.STIRLING_FIRST, 3).row(3) == stirling_first(3).row(3)
        sr = triangle(TriangleKind.R_STIRLING_FIRST, 3, r0=2)
        assert sr.r0 == 2
        assert sr.row(2) == r_stirling_first(3, 2).row(2)

    def test_default_shift_is_zero(self):
        sr = triangle(TriangleKind.R_STIRLING_FIRST, 3)
        assert sr.r0 == 0
        assert sr.row(3) == stirling_first(3).row(3)

    def test_shift_rejected_for_other_kinds(self):
        with pytest.raises(ValueError):
            triangle(TriangleKind.WHITNEY_FIRST, 3, r0=1)
        with pytest.raises(ValueError):
            triangle(TriangleKind.STIRLING_FIRST, 3, r0=1)

    def test_triangle_type(self):
        tri = whitney_first(2)
        assert isinstance(tri, Triangle)
        assert tri.n_max == 2
        assert tri.kind is TriangleKind.WHITNEY_FIRST
        assert tri.r0 is None
