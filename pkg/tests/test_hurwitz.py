import itertools
import random

import pytest

from bandgroup.braid import ArtinWord, Permutation, band_to_artin
from bandgroup.coxeter import BandPair, CoxeterDatum, partition_to_matrix, set_partitions
from bandgroup.coxword import CoxWord, apply_artin_to_cox, band_power_letter_action
from bandgroup.hurwitz import GroupContext, GroupTuple, hurwitz_apply, hurwitz_step, stabilizes

from oracles import compose_maps, transposition_map


def cox_tuple(n):
    return GroupContext.coxeter(n).defining_tuple()


def perm_tuple(degree, *cycle_texts):
    images = tuple(Permutation.parse(t, degree) for t in cycle_texts)
    return GroupContext.permutations(images, degree).defining_tuple()


def random_word(rng, n, max_len):
    length = rng.randint(0, max_len)
    return ArtinWord(
        n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length))
    )


def random_tuple(rng, kind, n):
    if kind == "free":
        ctx = GroupContext.free(n)
        tup = ctx.defining_tuple()
    elif kind == "coxeter":
        ctx = GroupContext.coxeter(n)
        tup = ctx.defining_tuple()
    else:
        images = tuple(
            Permutation.transposition(n + 1, i, i + 1) for i in range(1, n + 1)
        )
        tup = GroupContext.permutations(images, n + 1).defining_tuple()
    # scramble with a random word so the entries are not just generators
    return hurwitz_apply(tup, random_word(rng, n, 6))


class TestStep:
    def test_coxeter_twist(self):
        tup = cox_tuple(2)
        out = hurwitz_step(tup, 1, +1)
        assert out.entries[0].letters == (1, 2, 1)
        assert out.entries[1].letters == (1,)

    def test_step_then_inverse_restores(self):
        rng = random.Random(0)
        for kind in ("free", "coxeter", "perm"):
            for _ in range(10):
                n = rng.randint(2, 5)
                tup = random_tuple(rng, kind, n)
                j = rng.randint(1, n - 1)
                assert hurwitz_step(hurwitz_step(tup, j, +1), j, -1) == tup
                assert hurwitz_step(hurwitz_step(tup, j, -1), j, +1) == tup

    def test_permutation_conjugation(self):
        tup = perm_tuple(3, "(1 2)", "(2 3)")
        out = hurwitz_step(tup, 1, +1)
        # oracle: (1 2)(2 3)(1 2) composed by hand
        conj = compose_maps(
            transposition_map(3, 1, 2),
            compose_maps(transposition_map(3, 2, 3), transposition_map(3, 1, 2)),
        )
        assert {x: out.entries[0](x) for x in (1, 2, 3)} == conj
        assert out.entries[0].cycle_string() == "(1 3)"
        assert out.entries[1].cycle_string() == "(1 2)"

    def test_index_out_of_range(self):
        with pytest.raises(IndexError):
            hurwitz_step(cox_tuple(3), 3, +1)


class TestApply:
    def test_empty_word(self):
        tup = cox_tuple(4)
        assert hurwitz_apply(tup, ArtinWord.identity(4)) == tup

    def test_cancelling_word(self):
        tup = perm_tuple(3, "(1 2)", "(2 3)")
        w = ArtinWord(2, ((1, 1), (1, -1)))
        assert hurwitz_apply(tup, w) == tup

    def test_period_three_on_symmetric_group_pair(self):
        tup = perm_tuple(3, "(1 2)", "(2 3)")
        once = hurwitz_apply(tup, ArtinWord(2, ((1, 1),)))
        twice = hurwitz_apply(once, ArtinWord(2, ((1, 1),)))
        thrice = hurwitz_apply(twice, ArtinWord(2, ((1, 1),)))
        assert thrice == tup
        assert once != tup and twice != tup

    def test_right_action_law(self):
        rng = random.Random(1)
        for kind in ("free", "coxeter", "perm"):
            for _ in range(15):
                n = rng.randint(2, 5)
                tup = random_tuple(rng, kind, n)
                u, v = random_word(rng, n, 6), random_word(rng, n, 6)
                assert hurwitz_apply(tup, u * v) == hurwitz_apply(
                    hurwitz_apply(tup, u), v
                )

    def test_braid_relation_acts_trivially(self):
        rng = random.Random(2)
        for kind in ("free", "coxeter", "perm"):
            for _ in range(10):
                n = rng.randint(3, 5)
                tup = random_tuple(rng, kind, n)
                j = rng.randint(1, n - 2)
                lhs = ArtinWord(n, ((j, 1), (j + 1, 1), (j, 1)))
                rhs = ArtinWord(n, ((j + 1, 1), (j, 1), (j + 1, 1)))
                assert hurwitz_apply(tup, lhs) == hurwitz_apply(tup, rhs)


class TestBandPowerLetterAction:
    def test_letter_outside_band_is_fixed(self):
        assert band_power_letter_action(1, BandPair(2, 3), 5).letters == (1,)
        assert band_power_letter_action(4, BandPair(2, 3), -3).letters == (4,)

    def test_lower_band_end(self):
        got = band_power_letter_action(2, BandPair(2, 3), 2)
        assert got.letters == (2, 3, 2, 3, 2)

    def test_upper_band_end_power_zero(self):
        assert band_power_letter_action(3, BandPair(2, 3), 0).letters == (3,)

    def test_closed_form_matches_letterwise_action_small(self):
        for n in range(2, 5):
            for i, j in itertools.combinations(range(1, n + 1), 2):
                band = band_to_artin(BandPair(i, j), n)
                for m in range(-3, 4):
                    for letter in range(1, n + 1):
                        via_artin = apply_artin_to_cox(CoxWord.single(letter), band ** m)
                        assert band_power_letter_action(letter, BandPair(i, j), m) == via_artin


class TestStabilizes:
    def test_empty_word_stabilizes(self):
        assert stabilizes(cox_tuple(3), ArtinWord.identity(3))

    def test_band_cube_on_symmetric_realization(self):
        tup = perm_tuple(3, "(1 2)", "(2 3)")
        cube = band_to_artin(BandPair(1, 2), 2) ** 3
        assert stabilizes(tup, cube)

    def test_square_moves_universal_coxeter_pair(self):
        tup = cox_tuple(2)
        square = ArtinWord(2, ((1, 1), (1, 1)))
        assert not stabilizes(tup, square)
        moved = hurwitz_apply(tup, square)
        assert moved.entries[0].letters == (1, 2, 1, 2, 1)

    def test_realization_soundness(self):
        # generators of the power subgroup fix the defining tuple whenever the
        # realization satisfies the matching order condition
        cases = [
            (CoxeterDatum.constant(3, 3), ("(1 2)", "(2 3)", "(3 4)"), 4),
            (partition_to_matrix(next(iter(set_partitions(3)))), ("(1 2)", "(2 3)", "(3 4)"), 4),
        ]
        for matrix, cycles, degree in cases:
            images = tuple(Permutation.parse(c, degree) for c in cycles)
            tup = GroupContext.permutations(images, degree).defining_tuple()
            for tau in matrix.band_pairs():
                m = matrix.entry(tau)
                prod = images[tau.i - 1].after(images[tau.j - 1])
                power = Permutation.identity(degree)
                for _ in range(m):
                    power = power.after(prod)
                if power.is_identity():
                    assert stabilizes(tup, band_to_artin(tau, matrix.n) ** m)


class TestContextValidation:
    def test_non_involution_rejected(self):
        with pytest.raises(ValueError):
            GroupContext.permutations((Permutation.parse("(1 2 3)", 3),), 3)
        # but allowed when explicitly not required
        ctx = GroupContext.permutations(
            (Permutation.parse("(1 2 3)", 3),), 3, involutive=False
        )
        assert ctx.n == 1

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            GroupContext.permutations((Permutation.parse("(1 2)", 2),), 3)

    def test_tuple_length_checked(self):
        with pytest.raises(ValueError):
            GroupTuple(GroupContext.coxeter(3), (CoxWord.single(1),))
