"""Free products of finite cyclic groups: syllable normal forms."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbimap.gamma import (
    IDENTITY,
    GammaElement,
    GammaError,
    gamma_from_text,
    gamma_inverse,
    gamma_is_identity,
    gamma_multiply,
    gamma_pow,
    gamma_product,
    gamma_random,
    gamma_to_text,
    validate_gamma,
)
from orbimap.params import params

Z2_Z3 = params(0, 0, 2, (2, 3))
BIG = params(0, 0, 3, (4, 5, 7))


class TestText:
    def test_identity_round_trip(self):
        assert gamma_to_text(IDENTITY) == "e"
        assert gamma_from_text("e", Z2_Z3) == IDENTITY

    def test_round_trip(self):
        for text in ("g1", "g2^2", "g1*g2*g1*g2^2"):
            assert gamma_to_text(gamma_from_text(text, Z2_Z3)) == text

    def test_parse_normalizes_exponents(self):
        assert gamma_to_text(gamma_from_text("g2^5", Z2_Z3)) == "g2^2"
        assert gamma_from_text("g2^3", Z2_Z3) == IDENTITY
        assert gamma_to_text(gamma_from_text("g2^-1", Z2_Z3)) == "g2^2"

    def test_parse_merges_adjacent_same_factor(self):
        assert gamma_to_text(gamma_from_text("g1*g1*g2", Z2_Z3)) == "g2"

    def test_bad_text_rejected(self):
        for text in ("g0", "g3", "g1^", "h1", "g1**g2", ""):
            with pytest.raises(GammaError):
                gamma_from_text(text, Z2_Z3)


class TestArithmetic:
    def test_seam_merge_cascades(self):
        a = gamma_from_text("g1*g2", Z2_Z3)
        b = gamma_from_text("g2^2*g1", Z2_Z3)
        # g1*g2 . g2^2*g1 = g1*(g2^3)*g1 = g1*g1 = e
        assert gamma_is_identity(gamma_multiply(a, b, Z2_Z3))

    def test_inverse(self):
        g = gamma_from_text("g1*g2^2*g1", Z2_Z3)
        assert gamma_is_identity(gamma_multiply(g, gamma_inverse(g, Z2_Z3), Z2_Z3))
        assert gamma_is_identity(gamma_multiply(gamma_inverse(g, Z2_Z3), g, Z2_Z3))

    def test_pow_matches_repeated_multiply(self):
        g = gamma_from_text("g1*g2", Z2_Z3)
        acc = IDENTITY
        for k in range(7):
            assert gamma_pow(g, k, Z2_Z3) == acc
            acc = gamma_multiply(acc, g, Z2_Z3)
        assert gamma_pow(g, -2, Z2_Z3) == gamma_inverse(gamma_pow(g, 2, Z2_Z3), Z2_Z3)

    def test_product(self):
        elems = [gamma_from_text(t, Z2_Z3) for t in ("g1", "g2", "g2^2", "g1")]
        # g1 * (g2*g2^2) * g1 = g1*g1 = e
        assert gamma_is_identity(gamma_product(elems, Z2_Z3))

    def test_torsion_order_is_exact(self):
        for nu, m in ((1, 4), (2, 5), (3, 7)):
            g = gamma_from_text(f"g{nu}", BIG)
            for k in range(1, m):
                assert not gamma_is_identity(gamma_pow(g, k, BIG))
            assert gamma_is_identity(gamma_pow(g, m, BIG))

    def test_validate_rejects_bad_syllables(self):
        with pytest.raises(GammaError):
            validate_gamma(GammaElement(((1, 0),)), Z2_Z3)
        with pytest.raises(GammaError):
            validate_gamma(GammaElement(((1, 1), (1, 1))), Z2_Z3)
        with pytest.raises(GammaError):
            validate_gamma(GammaElement(((3, 1),)), Z2_Z3)


@st.composite
def gammas(draw, p=Z2_Z3):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    length = draw(st.integers(min_value=0, max_value=8))
    return gamma_random(p, length, random.Random(seed))


class TestGammaProperties:
    @given(gammas(), gammas(), gammas())
    @settings(max_examples=80, deadline=None)
    def test_associative(self, a, b, c):
        lhs = gamma_multiply(gamma_multiply(a, b, Z2_Z3), c, Z2_Z3)
        rhs = gamma_multiply(a, gamma_multiply(b, c, Z2_Z3), Z2_Z3)
        assert lhs == rhs

    @given(gammas())
    @settings(max_examples=80, deadline=None)
    def test_two_sided_inverse(self, a):
        inv = gamma_inverse(a, Z2_Z3)
        assert gamma_is_identity(gamma_multiply(a, inv, Z2_Z3))
        assert gamma_is_identity(gamma_multiply(inv, a, Z2_Z3))

    @given(gammas())
    @settings(max_examples=80, deadline=None)
    def test_normal_form_is_valid_and_stable(self, a):
        validate_gamma(a, Z2_Z3)
        assert gamma_from_text(gamma_to_text(a), Z2_Z3) == a
