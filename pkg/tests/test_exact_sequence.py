"""Point-pushing, forgetting, and splitting around the pure subgroup."""

import random

import pytest

from orbimap.combing import forget, is_trivial, normal_form, push, section
from orbimap.oracle import oracle_equal
from orbimap.params import params
from orbimap.presentations import expand_word
from orbimap.words import AlphabetError, free_reduce, parse_word, random_word, word_to_text

P311 = params(3, 1, 1)


def w(text, p=P311):
    return parse_word(text, p)


class TestPush:
    def test_accepts_only_top_level_letters(self):
        push(w("A(3,1) B(3,1)^-1 C(3,1)"))
        with pytest.raises(AlphabetError):
            push(w("A(2,1)"))
        with pytest.raises(AlphabetError):
            push(w("H1"))

    def test_free_reduces(self):
        assert push(w("A(3,1) A(3,1)^-1")).is_empty
        assert word_to_text(push(w("A(3,1) A(3,1)"))) == "A(3,1)^2"

    def test_injective_on_the_free_group(self):
        rng = random.Random(21)
        for _ in range(100):
            word = random_word(P311, rng.randrange(0, 9), rng, alphabet="level")
            assert is_trivial(push(word)) == free_reduce(word).is_empty

    def test_is_a_homomorphism(self):
        rng = random.Random(22)
        for _ in range(50):
            u = random_word(P311, rng.randrange(0, 7), rng, alphabet="level")
            v = random_word(P311, rng.randrange(0, 7), rng, alphabet="level")
            assert push(u * v) == push(u) * push(v)

    def test_image_combs_to_single_syllable(self):
        word = w("A(3,1) B(3,1)^-2 A(3,2)")
        nf = normal_form(push(word))
        assert nf.syllable(3) == word
        assert nf.syllable(2).is_empty
        assert nf.syllable(1).is_empty


class TestForget:
    def test_deletes_top_level_letters_and_drops_params(self):
        out = forget(w("A(3,1) A(2,1) B(3,1) C(2,1)"))
        assert out.params == params(2, 1, 1)
        assert word_to_text(out) == "A(2,1) C(2,1)"

    def test_needs_a_marked_point(self):
        with pytest.raises(AlphabetError):
            forget(parse_word("", params(0, 1, 1)))

    def test_rejects_mixed_words(self):
        with pytest.raises(AlphabetError):
            forget(w("H1"))

    def test_kills_push_image(self):
        rng = random.Random(23)
        for _ in range(100):
            word = random_word(P311, rng.randrange(0, 9), rng, alphabet="level")
            assert forget(push(word)).is_empty

    def test_is_a_homomorphism(self):
        rng = random.Random(24)
        for _ in range(50):
            u = random_word(P311, rng.randrange(0, 7), rng, alphabet="pure")
            v = random_word(P311, rng.randrange(0, 7), rng, alphabet="pure")
            assert forget(u * v) == forget(u) * forget(v)

    def test_respects_the_group_structure(self):
        # Combing before or after forgetting gives the same mapping class.
        rng = random.Random(25)
        for _ in range(30):
            word = random_word(P311, rng.randrange(0, 8), rng, alphabet="pure")
            direct = forget(word)
            via_nf = forget(normal_form(word).pure_part())
            assert oracle_equal(expand_word(direct), expand_word(via_nf))


class TestSection:
    def test_reinterprets_at_one_more_marked_point(self):
        out = section(parse_word("A(2,1) B(1,1)", params(2, 1, 1)))
        assert out.params == P311
        assert word_to_text(out) == "A(2,1) B(1,1)"

    def test_forget_undoes_section(self):
        rng = random.Random(26)
        p = params(2, 1, 1)
        for _ in range(100):
            word = random_word(p, rng.randrange(0, 10), rng, alphabet="pure")
            assert forget(section(word)) == free_reduce(word)

    def test_rejects_mixed_words(self):
        with pytest.raises(AlphabetError):
            section(w("T1"))

    def test_splits_the_forgetting_map(self):
        # section lands in the complement of the pushed free group:
        # nontrivial lower-level words stay nontrivial upstairs.
        word = parse_word("A(2,1) B(2,1)", params(2, 1, 1))
        assert not is_trivial(section(word))
