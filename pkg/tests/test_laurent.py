"""Tests for exact Laurent polynomial arithmetic, parsing and rendering."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weaving.cyclotomic import AT_MINUS_ONE, AT_OMEGA, eval_at
from weaving.laurent import ONE, T, T_INV, ZERO, Z, LaurentPoly, PolynomialParseError

polys = st.dictionaries(
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-(10**6), max_value=10**6),
    max_size=6,
).map(LaurentPoly.from_mapping)


class TestCanonicalForm:
    def test_zero_coefficients_are_dropped(self):
        poly = LaurentPoly.from_mapping({0: 1, 2: 0, -2: 3})
        assert poly.terms == ((-2, 3), (0, 1))

    def test_cancellation_gives_zero(self):
        assert (T - T).is_zero()
        assert not (T - T)

    def test_unsorted_terms_are_rejected(self):
        with pytest.raises(ValueError):
            LaurentPoly(((2, 1), (0, 1)))

    def test_stored_zero_is_rejected(self):
        with pytest.raises(ValueError):
            LaurentPoly(((0, 0),))

    def test_degree_and_valuation(self):
        poly = LaurentPoly.parse("t^-2 - t^-1 + 1 - t + t^2")
        assert poly.degree() == 4
        assert poly.valuation() == -4
        assert poly.coefficient(-2) == -1
        assert poly.coefficient(1) == 0

    def test_zero_has_no_degree(self):
        with pytest.raises(ValueError):
            ZERO.degree()


class TestArithmetic:
    def test_t_times_inverse_is_one(self):
        assert T * T_INV == ONE

    def test_z_squared(self):
        # (t^(1/2) - t^(-1/2))^2 = t - 2 + t^-1
        assert Z * Z == LaurentPoly.parse("t^-1 - 2 + t")

    def test_negative_power_of_unit_monomial(self):
        assert T**-3 == LaurentPoly.monomial(1, -6)
        assert (-T) ** -1 == -T_INV

    def test_negative_power_of_binomial_fails(self):
        with pytest.raises(ValueError):
            (T + 1) ** -1

    def test_integer_coercion(self):
        assert 1 + T == T + 1
        assert 2 - T == -(T - 2)
        assert 3 * T == T * 3

    def test_big_coefficients_stay_exact(self):
        poly = (T + 1) ** 80
        assert poly.coefficient(80) == 107507208733336176461620
        assert poly.coefficient_sum() == 2**80

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == ZERO
        assert a * ONE == a

    @given(polys, polys)
    def test_mirror_is_a_ring_involution(self, a, b):
        assert a.mirror().mirror() == a
        assert (a * b).mirror() == a.mirror() * b.mirror()
        assert (a + b).mirror() == a.mirror() + b.mirror()

    @given(polys, polys, st.sampled_from([0, AT_OMEGA, AT_MINUS_ONE]))
    def test_evaluation_is_a_homomorphism(self, a, b, point):
        assert eval_at(a * b, point) == eval_at(a, point) * eval_at(b, point)
        assert eval_at(a + b, point) == eval_at(a, point) + eval_at(b, point)


class TestText:
    @pytest.mark.parametrize(
        ("text", "terms"),
        [
            ("-t^(1/2) - t^(5/2)", ((1, -1), (5, -1))),
            ("t^-2 - t^-1 + 1 - t + t^2", ((-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1))),
            ("2*t^3", ((6, 2),)),
            ("2 t^(-1/2)", ((-1, 2),)),
            ("+t", ((2, 1),)),
            ("t^(4/2)", ((4, 1),)),
            ("0", ()),
        ],
    )
    def test_parse(self, text, terms):
        assert LaurentPoly.parse(text).terms == terms

    def test_like_terms_are_combined(self):
        assert LaurentPoly.parse("t + t - 2t") == ZERO

    def test_render(self):
        assert T.to_text() == "t"
        assert ZERO.to_text() == "0"
        assert LaurentPoly.monomial(-3, -1).to_text() == "-3t^(-1/2)"
        assert LaurentPoly.parse("t^-2 - t^-1 + 1 - t + t^2").to_text() == (
            "t^-2 - t^-1 + 1 - t + t^2"
        )

    def test_render_in_whole_units(self):
        poly = LaurentPoly(((-4, -1), (4, -1)))
        assert poly.to_text(variable="A", denominator=1) == "-A^-4 - A^4"

    @given(polys)
    def test_text_round_trip(self, poly):
        assert LaurentPoly.parse(poly.to_text()) == poly

    @given(polys)
    def test_json_round_trip(self, poly):
        assert LaurentPoly.from_json(poly.to_json()) == poly

    @pytest.mark.parametrize(
        ("text", "position"),
        [
            ("", 0),
            ("t +", 3),
            ("t ^ x", 4),
            ("x + 1", 0),
            ("t^(1/3)", 7),
            ("t^(1/2", 6),
            ("2 3", 2),
        ],
    )
    def test_parse_errors_carry_position(self, text, position):
        with pytest.raises(PolynomialParseError) as exc:
            LaurentPoly.parse(text)
        assert exc.value.code == "PARSE_ERROR"
        assert exc.value.position == position
