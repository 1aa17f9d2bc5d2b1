"""Tests for the Kauffman-bracket state sum."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weaving.bracket import (
    ParityError,
    StateBudgetError,
    _kernel_inputs,
    _state_histogram,
    bracket_from_histogram,
    jones_via_bracket,
    kauffman_bracket,
    normalize,
    state_sum,
)
from weaving.braid import BraidWord, weaving_word
from weaving.cyclotomic import CycloInt, eval_at
from weaving.laurent import ONE, LaurentPoly


@st.composite
def braid_words(draw, max_strands=5, max_letters=12):
    strands = draw(st.integers(min_value=2, max_value=max_strands))
    indices = st.integers(min_value=1, max_value=strands - 1)
    letters = draw(
        st.lists(st.tuples(indices, st.booleans()), max_size=max_letters).map(
            lambda pairs: tuple(i if positive else -i for i, positive in pairs)
        )
    )
    return BraidWord(strands, letters)


class TestBracket:
    def test_unknot_without_crossings(self):
        assert kauffman_bracket(BraidWord(1)) == ONE

    def test_single_kink(self):
        assert kauffman_bracket(BraidWord(2, (1,))) == LaurentPoly.monomial(-1, 3)

    def test_hopf_bracket(self):
        assert kauffman_bracket(weaving_word(2, 2)) == LaurentPoly(((-4, -1), (4, -1)))

    def test_unlink_bracket(self):
        # Two unlinked circles: delta = -A^2 - A^-2
        assert kauffman_bracket(BraidWord(2)) == LaurentPoly(((-2, -1), (2, -1)))

    def test_budget(self):
        with pytest.raises(StateBudgetError) as exc:
            state_sum(weaving_word(3, 5), budget=2**9)
        assert exc.value.code == "TOO_LARGE"
        assert exc.value.states == 2**10

    def test_budget_is_inclusive(self):
        assert state_sum(weaving_word(3, 2), budget=16).jones == LaurentPoly.parse(
            "t^-2 - t^-1 + 1 - t + t^2"
        )


class TestJones:
    def test_hopf_link(self):
        assert jones_via_bracket(weaving_word(2, 2)) == LaurentPoly.parse("-t^(1/2) - t^(5/2)")

    def test_figure_eight(self):
        assert jones_via_bracket(weaving_word(3, 2)) == LaurentPoly.parse(
            "t^-2 - t^-1 + 1 - t + t^2"
        )

    def test_reidemeister_one(self):
        assert jones_via_bracket(BraidWord(2, (1,))) == ONE
        assert jones_via_bracket(BraidWord(2, (-1,))) == ONE

    def test_w31_is_unknot(self):
        assert jones_via_bracket(weaving_word(3, 1)) == ONE

    def test_mirror_word_mirrors_polynomial(self):
        word = weaving_word(2, 2)
        assert jones_via_bracket(word.mirror()) == jones_via_bracket(word).mirror()

    def test_result_fields(self):
        result = state_sum(weaving_word(2, 2))
        assert result.writhe == 2
        assert result.bracket == LaurentPoly(((-4, -1), (4, -1)))

    def test_odd_exponent_is_a_parity_error(self):
        with pytest.raises(ParityError) as exc:
            normalize(LaurentPoly.monomial(1, 1), 0)
        assert exc.value.code == "PARITY_ERROR"


class TestInvariance:
    @settings(max_examples=50, deadline=None)
    @given(braid_words(), st.data())
    def test_markov_moves(self, word, data):
        jones = jones_via_bracket(word)
        generator = data.draw(st.integers(min_value=1, max_value=word.strands - 1))
        if data.draw(st.booleans()):
            generator = -generator
        assert jones_via_bracket(word.conjugate(generator)) == jones
        sign = data.draw(st.sampled_from([1, -1]))
        assert jones_via_bracket(word.stabilize(sign)) == jones

    @pytest.mark.parametrize("p", range(2, 7))
    @pytest.mark.parametrize("n", range(1, 5))
    def test_value_at_one_and_exponent_parity(self, p, n):
        word = weaving_word(p, n)
        mu = word.component_count()
        jones = jones_via_bracket(word)
        assert eval_at(jones, 0) == CycloInt.from_int((-2) ** (mu - 1))
        integer_exponents = all(e % 2 == 0 for e in jones.exponents())
        assert integer_exponents == (mu % 2 == 1)


class TestParallelism:
    def test_parallel_matches_sequential(self, small_chunks):
        word = weaving_word(3, 5)
        sequential = state_sum(word, threads=1)
        parallel = state_sum(word, threads=4)
        assert parallel == sequential

    def test_chunk_histograms_add_up(self):
        word = weaving_word(4, 2)
        positions, identity_on_a = _kernel_inputs(word)
        states = 1 << word.crossings
        whole = _state_histogram(positions, identity_on_a, word.strands, 0, states)
        left = _state_histogram(positions, identity_on_a, word.strands, 0, 10)
        right = _state_histogram(positions, identity_on_a, word.strands, 10, states)
        assert (left + right == whole).all()
        assert int(whole.sum()) == states

    def test_kernel_matches_python_reference(self):
        word = weaving_word(3, 3)
        positions, identity_on_a = _kernel_inputs(word)
        states = 1 << word.crossings
        compiled = _state_histogram(positions, identity_on_a, word.strands, 0, states)
        reference = _state_histogram.py_func(positions, identity_on_a, word.strands, 0, states)
        assert (compiled == reference).all()
        assert bracket_from_histogram(reference, word.crossings) == kauffman_bracket(word)

