"""Tests for Z[zeta] arithmetic, evaluation and the LM decomposition."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weaving.cyclotomic import (
    AT_MINUS_ONE,
    AT_OMEGA,
    IMAG,
    MINUS_ONE,
    OMEGA,
    ONE,
    SQRT3,
    THREE,
    ZERO,
    ZETA,
    CycloInt,
    CyclotomicError,
    abs_if_real_integerlike,
    eval_at,
    lm_decompose,
    power_of_three,
)
from weaving.laurent import T, LaurentPoly

small = st.integers(min_value=-20, max_value=20)
elements = st.builds(CycloInt, small, small, small, small)


class TestRing:
    def test_zeta_has_order_twelve(self):
        assert ZETA**12 == ONE
        assert ZETA**6 == MINUS_ONE
        assert all(ZETA**k != ONE for k in range(1, 12))

    def test_named_constants(self):
        assert IMAG * IMAG == MINUS_ONE
        assert SQRT3 * SQRT3 == THREE
        assert OMEGA == ZETA * ZETA
        # w^2 - w + 1 = 0
        assert OMEGA * OMEGA - OMEGA + 1 == ZERO

    def test_zeta_power_accepts_negative_exponents(self):
        assert CycloInt.zeta_power(-1) * ZETA == ONE
        assert CycloInt.zeta_power(-14) == CycloInt.zeta_power(10)

    def test_conjugation(self):
        assert IMAG.conj() == -IMAG
        assert SQRT3.conj() == SQRT3
        assert ZETA.conj() * ZETA == ONE

    @given(elements, elements, elements)
    def test_ring_axioms(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO

    @given(elements, elements)
    def test_conj_is_multiplicative(self, a, b):
        assert (a * b).conj() == a.conj() * b.conj()
        assert a.conj().conj() == a

    @given(elements)
    def test_norm_is_real(self, a):
        assert a.norm().conj() == a.norm()


class TestRendering:
    def test_pretty_alphabet(self):
        assert [v.pretty() for v in (ONE, MINUS_ONE, IMAG, -IMAG, SQRT3, -SQRT3, THREE)] == [
            "1",
            "-1",
            "i",
            "-i",
            "√3",
            "-√3",
            "3",
        ]

    def test_fallback_to_basis(self):
        assert str(CycloInt(1, 1, 0, 0)) == "1 + ζ"
        assert str(CycloInt(0, -2, 0, 3)) == "-2ζ + 3ζ^3"
        assert ZERO.to_text() == "0"


class TestEvaluation:
    def test_t_at_special_points(self):
        assert eval_at(T, AT_OMEGA) == OMEGA
        assert eval_at(T, AT_MINUS_ONE) == MINUS_ONE
        assert eval_at(T, 0) == ONE

    def test_half_powers_at_minus_one(self):
        # t^(1/2) -> i
        assert eval_at(LaurentPoly.monomial(1, 1), AT_MINUS_ONE) == IMAG

    def test_hopf_link_values(self):
        hopf = LaurentPoly.parse("-t^(1/2) - t^(5/2)")
        assert eval_at(hopf, AT_OMEGA) == -IMAG
        assert eval_at(hopf, AT_MINUS_ONE) == IMAG * -2
        assert eval_at(hopf, 0) == CycloInt.from_int(-2)


class TestDecompositions:
    @pytest.mark.parametrize(
        ("value", "mu", "n_l", "sign"),
        [
            (ONE, 1, 0, 1),
            (MINUS_ONE, 1, 0, -1),
            (THREE, 1, 2, -1),
            (IMAG, 2, 0, 1),
            (-IMAG, 2, 0, -1),
            (SQRT3, 2, 1, -1),
            (-SQRT3, 2, 1, 1),
            (THREE, 3, 2, 1),
        ],
    )
    def test_lm_decompose(self, value, mu, n_l, sign):
        result = lm_decompose(value, mu)
        assert (result.n_L, result.sign) == (n_l, sign)

    def test_lm_decompose_rejects_wrong_norm(self):
        with pytest.raises(CyclotomicError) as exc:
            lm_decompose(CycloInt.from_int(2), 1)
        assert exc.value.code == "NOT_LM_FORM"

    def test_lm_decompose_rejects_wrong_phase(self):
        with pytest.raises(CyclotomicError) as exc:
            lm_decompose(IMAG, 1)
        assert exc.value.code == "NOT_LM_FORM"

    def test_lm_decompose_rejects_bad_component_count(self):
        with pytest.raises(CyclotomicError) as exc:
            lm_decompose(ONE, 0)
        assert exc.value.code == "DOMAIN_ERROR"

    def test_abs_of_unit_times_integer(self):
        assert abs_if_real_integerlike(IMAG * -12) == 12
        assert abs_if_real_integerlike(ZETA * 7) == 7
        assert abs_if_real_integerlike(ZERO) == 0

    def test_abs_rejects_non_integer_modulus(self):
        with pytest.raises(CyclotomicError) as exc:
            abs_if_real_integerlike(ONE + ZETA)
        assert exc.value.code == "NOT_UNIT_TIMES_INTEGER"

    @pytest.mark.parametrize(("value", "expected"), [(1, 0), (3, 1), (81, 4), (6, None), (0, None)])
    def test_power_of_three(self, value, expected):
        assert power_of_three(value) == expected
