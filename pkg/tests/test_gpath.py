"""Decorated paths: shift and subdivision moves, continuous forms."""

import random

import pytest

from orbimap.gamma import (
    IDENTITY,
    gamma_from_text,
    gamma_inverse,
    gamma_multiply,
    gamma_random,
)
from orbimap.gpath import (
    GPathError,
    continuous_to_path,
    continuous_to_text,
    gpath_from_text,
    gpath_normalize,
    gpath_shift,
    gpath_subdivide,
    gpath_to_text,
    make_gpath,
)
from orbimap.params import params

P = params(0, 0, 2, (2, 3))


def g(text):
    return gamma_from_text(text, P)


def random_path(rng, max_segments=4, max_syll=3):
    k = rng.randrange(1, max_segments + 1)
    groups = tuple(gamma_random(P, rng.randrange(0, max_syll + 1), rng) for _ in range(k + 1))
    translates = tuple(gamma_random(P, rng.randrange(0, max_syll + 1), rng) for _ in range(k))
    return make_gpath(groups, translates, P)


def random_moves(path, rng, count):
    for _ in range(count):
        i = rng.randrange(1, len(path.segments) + 1)
        if rng.random() < 0.5:
            path = gpath_shift(path, i, gamma_random(P, rng.randrange(0, 3), rng), P)
        else:
            path = gpath_subdivide(path, i)
    return path


class TestNormalize:
    def test_two_segment_example(self):
        # (g1; [c1]s1, g2, [c2]s2, e) -> (g1*g2; [g2^-1*c1]s1, [c2]s2)
        path = make_gpath((g("g1"), g("g2"), IDENTITY), (g("g2*g1"), g("g1*g2^2")), P)
        cf = gpath_normalize(path, P)
        assert cf.g == gamma_multiply(g("g1"), g("g2"), P)
        assert cf.pieces[0][0] == gamma_multiply(gamma_inverse(g("g2"), P), g("g2*g1"), P)
        assert cf.pieces[1][0] == g("g1*g2^2")

    def test_single_segment(self):
        path = make_gpath((g("g1"), g("g2")), (g("g1"),), P)
        cf = gpath_normalize(path, P)
        assert cf.g == gamma_multiply(g("g1"), g("g2"), P)
        assert cf.pieces[0][0] == gamma_multiply(gamma_inverse(g("g2"), P), g("g1"), P)

    def test_normalize_is_idempotent(self):
        rng = random.Random(2)
        for _ in range(50):
            path = random_path(rng)
            cf = gpath_normalize(path, P)
            again = gpath_normalize(continuous_to_path(cf, path.history), P)
            assert again == cf


class TestMoves:
    def test_shift_preserves_continuous_form(self):
        path = make_gpath((g("g1"), g("g2"), IDENTITY), (g("g2*g1"), g("g1*g2^2")), P)
        cf = gpath_normalize(path, P)
        for i in (1, 2):
            shifted = gpath_shift(path, i, g("g2^2"), P)
            assert gpath_normalize(shifted, P) == cf

    def test_subdivide_halves_remerge_to_parent_token(self):
        path = make_gpath((g("g1"), g("g2"), IDENTITY), (g("g2*g1"), g("g1*g2^2")), P)
        cf = gpath_normalize(path, P)
        for i in (1, 2):
            sub = gpath_subdivide(path, i)
            got = gpath_normalize(sub, P)
            assert got == cf
            assert [q[1].id for q in got.pieces] == [q[1].id for q in cf.pieces]

    def test_deep_subdivision_remerges(self):
        path = make_gpath((g("g1"), IDENTITY), (g("g2"),), P)
        sub = path
        for _ in range(4):
            sub = gpath_subdivide(sub, 1)
        assert len(sub.segments) == 5
        got = gpath_normalize(sub, P)
        assert len(got.pieces) == 1
        assert got.pieces[0][1].id == path.segments[0][1].id

    def test_shift_changes_entries_but_not_form(self):
        path = make_gpath((g("g1"), g("g2"), IDENTITY), (g("g2*g1"), g("g1*g2^2")), P)
        shifted = gpath_shift(path, 1, g("g2"), P)
        assert shifted.groups != path.groups or shifted.translates != path.translates
        assert gpath_normalize(shifted, P) == gpath_normalize(path, P)

    def test_move_indices_validated(self):
        path = make_gpath((g("g1"), IDENTITY), (g("g2"),), P)
        with pytest.raises(GPathError):
            gpath_shift(path, 0, g("g1"), P)
        with pytest.raises(GPathError):
            gpath_shift(path, 2, g("g1"), P)
        with pytest.raises(GPathError):
            gpath_subdivide(path, 5)

    def test_random_move_storms_preserve_form(self):
        rng = random.Random(9)
        for _ in range(60):
            path = random_path(rng)
            want = gpath_normalize(path, P)
            moved = random_moves(path, rng, rng.randrange(0, 12))
            got = gpath_normalize(moved, P)
            assert got.g == want.g
            assert [q[0] for q in got.pieces] == [q[0] for q in want.pieces]


class TestText:
    def test_path_round_trip(self):
        path = make_gpath((g("g1"), g("g2"), IDENTITY), (g("g2*g1"), g("g1*g2^2")), P)
        text = gpath_to_text(path)
        assert text == "(g1; [g2*g1]s1, g2, [g1*g2^2]s2, e)"
        reparsed = gpath_from_text(text, P)
        assert gpath_normalize(reparsed, P).g == gpath_normalize(path, P).g

    def test_continuous_text(self):
        path = make_gpath((g("g1"), g("g2"), IDENTITY), (g("g2*g1"), g("g1*g2^2")), P)
        assert continuous_to_text(gpath_normalize(path, P)) == "(g1*g2; [g1]s1, [g1*g2^2]s2)"

    def test_bad_path_text_rejected(self):
        for text in ("", "(g1)", "(g1; s1)", "(g1; [g2]s1", "(g1; [g2]s1, g2, g2)"):
            with pytest.raises(GPathError):
                gpath_from_text(text, P)
