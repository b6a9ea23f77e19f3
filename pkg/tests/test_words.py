"""Letters, words, parsing, reduction, and marked-point permutations."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbimap.params import ParamsError, params
from orbimap.words import (
    AlphabetError,
    Letter,
    LetterRangeError,
    ParseError,
    Permutation,
    Word,
    empty_word,
    free_reduce,
    make_letter,
    mixed_alphabet,
    parse_word,
    perm_image,
    pure_alphabet,
    random_word,
    reduce_runs,
    word_to_text,
)

P311 = params(3, 1, 1)
P422 = params(4, 2, 2, (2, 3))


class TestParams:
    def test_defaults_cone_orders_to_two(self):
        assert params(2, 0, 3).m == (2, 2, 2)

    def test_rejects_negative_counts(self):
        with pytest.raises(ParamsError):
            params(-1, 0, 0)

    def test_rejects_order_below_two(self):
        with pytest.raises(ParamsError):
            params(1, 0, 1, (1,))

    def test_rejects_wrong_order_count(self):
        with pytest.raises(ParamsError):
            params(1, 0, 2, (2,))

    def test_forget_and_add_marked(self):
        assert P311.forget_marked() == params(2, 1, 1)
        assert P311.add_marked() == params(4, 1, 1)


class TestParsing:
    def test_mixed_round_trip(self):
        text = "H1 T1^2 U1^-1 H2^-3"
        assert word_to_text(parse_word(text, P311)) == text

    def test_pure_round_trip(self):
        text = "A(3,1)^-2 B(2,1) C(3,1)"
        assert word_to_text(parse_word(text, P311)) == text

    def test_empty_text_is_empty_word(self):
        assert parse_word("", P311).is_empty
        assert parse_word("   ", P311).is_empty
        assert word_to_text(empty_word(P311)) == ""

    def test_parse_merges_adjacent_runs(self):
        w = parse_word("H1 H1 H1^-1 T1 T1", P311)
        assert word_to_text(w) == "H1 T1^2"

    def test_parse_cancels_to_empty(self):
        assert parse_word("H1 H1^-1", P311).is_empty

    def test_parse_reduces_to_fixpoint(self):
        # Cascading cancellation: T1 (H1 H1^-1) T1^-1 collapses entirely.
        assert parse_word("T1 H1 H1^-1 T1^-1", P311).is_empty

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as info:
            parse_word("H1 wat", P311)
        assert info.value.position == 4  # 1-based character offset of 'wat'

    def test_out_of_range_index(self):
        with pytest.raises(ParseError):
            parse_word("H3", P311)  # H needs j <= n-1
        with pytest.raises(ParseError):
            parse_word("U2", P311)

    def test_no_leading_zeros(self):
        with pytest.raises(ParseError):
            parse_word("H01", P311)

    def test_zero_exponent_dropped(self):
        assert parse_word("H1^0", P311).is_empty
        assert word_to_text(parse_word("H1^0 T1", P311)) == "T1"

    def test_pure_letter_needs_valid_pair(self):
        with pytest.raises(ParseError):
            parse_word("A(1,1)", P311)
        with pytest.raises(ParseError):
            parse_word("A(4,1)", P311)

    def test_t_and_u_need_a_marked_point(self):
        with pytest.raises(LetterRangeError):
            make_letter("T", 1, params=params(0, 1, 0))


class TestReduction:
    def test_reduce_runs_merges_and_cascades(self):
        runs = [("x", 1), ("y", 2), ("y", -2), ("x", 3)]
        assert reduce_runs(runs) == [("x", 4)]

    def test_word_multiplication_reduces_at_seam(self):
        u = parse_word("H1 T1", P311)
        v = parse_word("T1^-1 H1", P311)
        assert word_to_text(u * v) == "H1^2"

    def test_inverse_cancels(self):
        w = parse_word("H1 T1^2 H2^-1", P311)
        assert (w * w.inverse()).is_empty
        assert (w.inverse() * w).is_empty

    def test_conjugate_by(self):
        w = parse_word("T1", P311)
        g = parse_word("H1", P311)
        assert word_to_text(w.conjugate_by(g)) == "H1 T1 H1^-1"

    def test_alphabet_split(self):
        assert parse_word("H1 T1", P311).is_mixed_alphabet()
        assert parse_word("A(2,1)", P311).is_pure_alphabet()
        mixed = parse_word("H1", P311)
        pure = parse_word("A(2,1)", P311)
        assert not (mixed * pure).is_mixed_alphabet()
        assert not (mixed * pure).is_pure_alphabet()


class TestPermutations:
    def test_h_letters_generate_symmetric_group(self):
        seen = set()
        rng = random.Random(0)
        for _ in range(300):
            w = random_word(params(3, 0, 0), rng.randrange(0, 7), rng)
            seen.add(perm_image(w).images)
        assert len(seen) == 6

    def test_even_h_power_is_identity(self):
        assert perm_image(parse_word("H1^2", P311)).is_identity
        assert perm_image(parse_word("H1^-4", P311)).is_identity

    def test_t_and_u_do_not_permute(self):
        assert perm_image(parse_word("T1 U1^-3", P311)).is_identity

    def test_image_composes_left_to_right(self):
        p3 = params(3, 0, 0)
        w = parse_word("H1 H2", p3)
        # H1 then H2 carries point 1 to position 3: arrangement (2, 3, 1)
        assert perm_image(w).images == (2, 3, 1)

    def test_pure_letters_rejected(self):
        with pytest.raises(AlphabetError):
            perm_image(parse_word("A(2,1)", P311))

    def test_cycles_text(self):
        assert Permutation.identity(3).cycles_text() == "id"
        assert Permutation.transposition(3, 1).cycles_text() == "(1 2)"

    def test_inverse_and_compose(self):
        sigma = Permutation.transposition(4, 2)
        tau = Permutation.transposition(4, 1)
        assert (sigma * sigma.inverse()).is_identity
        assert ((sigma * tau) * (sigma * tau).inverse()).is_identity


class TestAlphabets:
    def test_mixed_alphabet_size(self):
        assert len(mixed_alphabet(P311)) == 2 + 1 + 1  # H1 H2 T1 U1
        assert len(mixed_alphabet(params(1, 2, 0))) == 2

    def test_pure_alphabet_size(self):
        # A(j,i) for 1<=i<j<=3, B(k,1), C(k,1) for k=1..3
        assert len(pure_alphabet(P311)) == 3 + 3 + 3

    def test_pure_alphabet_by_level(self):
        level3 = pure_alphabet(P311, level=3)
        assert {word_to_text(Word((g,), P311)) for g in level3} == {
            "A(3,1)", "A(3,2)", "B(3,1)", "C(3,1)",
        }


@st.composite
def words(draw, p=P311, max_len=12):
    length = draw(st.integers(min_value=0, max_value=max_len))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_word(p, length, random.Random(seed))


class TestWordProperties:
    @given(words())
    @settings(max_examples=60, deadline=None)
    def test_text_round_trip(self, w):
        # parse_word stores the freely reduced form
        assert parse_word(word_to_text(w), P311) == free_reduce(w)

    @given(words())
    @settings(max_examples=60, deadline=None)
    def test_free_reduce_idempotent(self, w):
        assert free_reduce(free_reduce(w)) == free_reduce(w)

    @given(words(), words())
    @settings(max_examples=60, deadline=None)
    def test_perm_image_is_a_homomorphism(self, u, v):
        assert perm_image(u * v) == perm_image(u) * perm_image(v)

    @given(words())
    @settings(max_examples=60, deadline=None)
    def test_inverse_reverses_and_negates(self, w):
        inv = w.inverse()
        assert inv.inverse() == w
        assert (w * inv).is_empty
