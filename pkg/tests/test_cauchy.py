from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwhitney import (
    ONE,
    Q,
    R,
    BiPoly,
    CauchyKind,
    cauchy_first,
    cauchy_first_integral,
    cauchy_first_via_stirling,
    cauchy_number,
    cauchy_poly,
    cauchy_second,
    cauchy_second_integral,
    q_cauchy_number,
    verify_cheon,
    verify_classical_shift,
    verify_inversion,
    verify_shift,
    whitney_second,
)
from qwhitney.cauchy import (
    cheon_counterexample,
    classical_shift_counterexample,
    inversion_counterexample,
    shift_counterexample,
)

from _golden import FIRST_KIND, SECOND_KIND, classical_cauchy_oracle

shift_values = st.fractions(min_value=F(-4), max_value=F(4), max_denominator=6)


class TestFrozenPolynomials:
    def test_first_kind(self):
        for n, terms in FIRST_KIND.items():
            assert cauchy_first(n) == BiPoly(terms)

    def test_second_kind(self):
        for n, terms in SECOND_KIND.items():
            assert cauchy_second(n) == BiPoly(terms)

    def test_integral_oracles_agree_with_frozen(self):
        for n, terms in FIRST_KIND.items():
            assert cauchy_first_integral(n) == BiPoly(terms)
        for n, terms in SECOND_KIND.items():
            assert cauchy_second_integral(n) == BiPoly(terms)


class TestOracleAgreement:
    def test_three_first_kind_routes(self):
        for n in range(11):
            direct = cauchy_first(n)
            assert direct == cauchy_first_integral(n)
            assert direct == cauchy_first_via_stirling(n)

    def test_two_second_kind_routes(self):
        for n in range(11):
            assert cauchy_second(n) == cauchy_second_integral(n)

    def test_stirling_route_examples(self):
        assert cauchy_first_via_stirling(0) == ONE
        assert cauchy_first_via_stirling(1) == -R + BiPoly.const(F(1, 2))

    def test_negative_index_rejected(self):
        for fn in (
            cauchy_first,
            cauchy_second,
            cauchy_first_integral,
            cauchy_second_integral,
            cauchy_first_via_stirling,
        ):
            with pytest.raises(ValueError):
                fn(-1)


class TestStructure:
    def test_degree_and_leading_coefficient(self):
        for n in range(9):
            first = cauchy_first(n)
            second = cauchy_second(n)
            assert first.r_degree() == n
            assert second.r_degree() == n
            assert first.r_coefficient(n) == BiPoly.const((-1) ** n)
            assert second.r_coefficient(n) == ONE

    def test_second_kind_is_first_kind_with_negated_q(self):
        for n in range(9):
            dual = cauchy_first(n).subst_q(-1, 0).scale((-1) ** n)
            assert cauchy_second(n) == dual

    def test_poly_dispatch(self):
        assert cauchy_poly(CauchyKind.FIRST, 3) == cauchy_first(3)
        assert cauchy_poly(CauchyKind.SECOND, 3) == cauchy_second(3)


class TestNumbers:
    def test_classical_values(self):
        assert cauchy_number(CauchyKind.FIRST, 2) == F(-1, 6)
        assert cauchy_number(CauchyKind.SECOND, 2) == F(5, 6)
        assert cauchy_number(CauchyKind.FIRST, 0) == 1

    def test_classical_values_against_package_free_oracle(self):
        for n in range(11):
            assert cauchy_number(CauchyKind.FIRST, n) == classical_cauchy_oracle("first", n)
            assert cauchy_number(CauchyKind.SECOND, n) == classical_cauchy_oracle("second", n)

    def test_q_numbers(self):
        assert q_cauchy_number(CauchyKind.FIRST, 0) == ONE
        assert q_cauchy_number(CauchyKind.FIRST, 2) == Q.scale(F(-1, 2)) + BiPoly.const(F(1, 3))
        assert q_cauchy_number(CauchyKind.SECOND, 3) == BiPoly(
            {(2, 0): -1, (1, 0): -1, (0, 0): F(-1, 4)}
        )

    def test_q_numbers_are_r_specializations(self):
        for n in range(9):
            assert cauchy_first(n).subst_r(0, 0) == q_cauchy_number(CauchyKind.FIRST, n)
            assert cauchy_second(n).subst_r(0, 0) == q_cauchy_number(CauchyKind.SECOND, n)

    def test_q_numbers_have_no_r(self):
        for n in range(9):
            for kind in CauchyKind:
                assert q_cauchy_number(kind, n).r_degree() <= 0


class TestInversion:
    def test_hand_case(self):
        w2 = whitney_second(2)
        total = (
            w2.entry(2, 0) * cauchy_first(0)
            + w2.entry(2, 1) * cauchy_first(1)
            + w2.entry(2, 2) * cauchy_first(2)
        )
        assert total == BiPoly.const(F(1, 3))

    def test_range(self):
        for n in range(11):
            assert verify_inversion(n)

    def test_counterexample_is_none_on_success(self):
        assert inversion_counterexample(7) is None


class TestShiftLaws:
    def test_base_cases(self):
        assert verify_shift(0, F(7, 2))
        assert verify_shift(5, 0)

    @given(st.integers(0, 7), shift_values)
    def test_shift_holds(self, n, s):
        assert shift_counterexample(n, s) is None

    def test_hand_case_on_triangle(self):
        assert cheon_counterexample(1, F(2)) is None

    @given(st.integers(0, 6), shift_values)
    def test_triangle_shift_holds(self, n, s):
        assert cheon_counterexample(n, s) is None

    def test_classical(self):
        for n in range(11):
            assert verify_classical_shift(n)
        assert classical_shift_counterexample(8) is None

    def test_verifier_wrappers(self):
        assert verify_cheon(4, F(-2))
        assert verify_shift(6, F(3, 5))
