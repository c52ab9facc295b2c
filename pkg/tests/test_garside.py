import random

import pytest
from hypothesis import given

from braidtwist.errors import StrandMismatch
from braidtwist.garside import (
    are_equal,
    canonical_length,
    finishing_set,
    infimum,
    is_left_weighted,
    is_trivial,
    starting_set,
    supremum,
    to_normal_form,
)
from braidtwist.words import BraidWord, Permutation, concat, delta, full_twist, inverse, random_word, underlying_permutation
from oracles import braid_equal
from strategies import braid_words, word_pairs


def W(n, *letters):
    return BraidWord(n, letters)


def scramble(rng, n, letters, moves=6):
    """Insert relators, trivial pairs and far-commutation swaps at random."""
    w = list(letters)
    for _ in range(moves):
        kind = rng.randrange(3)
        pos = rng.randint(0, len(w))
        if kind == 0:
            i = rng.randrange(1, n)
            s = rng.choice([1, -1])
            w[pos:pos] = [s * i, -s * i]
        elif kind == 1 and n >= 3:
            i = rng.randrange(1, n - 1)
            rel = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
            if rng.random() < 0.5:
                rel = [-x for x in reversed(rel)]
            w[pos:pos] = rel
        elif kind == 2:
            for j in range(len(w) - 1):
                if abs(abs(w[j]) - abs(w[j + 1])) >= 2:
                    w[j], w[j + 1] = w[j + 1], w[j]
                    break
    return tuple(w)


class TestExamples:
    def test_braid_relation(self):
        assert are_equal(W(3, 1, 2, 1), W(3, 2, 1, 2))

    def test_trivial(self):
        assert is_trivial(W(3, 1, -2, 2, -1))
        assert is_trivial(W(4))
        assert not is_trivial(W(3, 1))

    def test_full_twist(self):
        assert infimum(full_twist(3)) == 2
        assert canonical_length(full_twist(3)) == 0

    def test_generator(self):
        nf = to_normal_form(W(3, 1))
        assert (nf.infimum, nf.canonical_length, nf.supremum) == (0, 1, 1)
        assert to_normal_form(W(3, -1)).infimum == -1

    def test_mismatch(self):
        with pytest.raises(StrandMismatch):
            are_equal(W(3), W(4))

    def test_json(self):
        nf = to_normal_form(W(3, 1, 2))
        assert nf.to_json() == {"strands": 3, "infimum": 0, "factors": [[3, 1, 2]]}

    def test_one_strand(self):
        assert is_trivial(W(1))


class TestDescentSets:
    def test_generator_sets(self):
        p = underlying_permutation(W(4, 2))
        assert starting_set(p) == finishing_set(p) == {2}

    def test_product(self):
        p = underlying_permutation(W(3, 1, 2))
        assert starting_set(p) == {1}
        assert finishing_set(p) == {2}

    def test_left_weighted_pair(self):
        a = underlying_permutation(W(3, 1))
        assert is_left_weighted(a, underlying_permutation(W(3, 1)))
        assert not is_left_weighted(a, underlying_permutation(W(3, 2)))


def test_canonicity_under_rewriting():
    rng = random.Random(11)
    for _ in range(10_000):
        n = rng.randint(2, 5)
        u = random_word(rng, n, rng.randint(0, 20))
        r = W(n, *scramble(rng, n, u.letters))
        assert are_equal(u, r)


@given(word_pairs(max_len=15))
def test_agrees_with_artin_action(pair):
    u, v = pair
    assert are_equal(u, v) == braid_equal(u.strands, u.letters, v.letters)


@given(braid_words(max_len=25))
def test_normal_form_invariants(u):
    nf = to_normal_form(u)
    n = u.strands
    w0 = Permutation(tuple(range(n, 0, -1)))
    for f in nf.factors:
        assert not f.is_identity()
        assert f != w0
    for a, b in zip(nf.factors, nf.factors[1:]):
        assert is_left_weighted(a, b)
    assert nf.supremum == nf.infimum + nf.canonical_length
    assert braid_equal(n, u.letters, nf.to_word().letters)
    assert to_normal_form(nf.to_word()) == nf


@given(word_pairs(max_len=15))
def test_soundness_on_permutations(pair):
    u, v = pair
    if underlying_permutation(u) != underlying_permutation(v):
        assert not are_equal(u, v)


@given(braid_words(max_len=20))
def test_full_twist_shifts_bracket(u):
    nf = to_normal_form(u)
    for shifted in (concat(full_twist(u.strands), u), concat(u, full_twist(u.strands))):
        s = to_normal_form(shifted)
        assert s.infimum == nf.infimum + 2
        assert s.supremum == nf.supremum + 2
        assert s.factors == nf.factors
    s = to_normal_form(concat(inverse(full_twist(u.strands)), u))
    assert (s.infimum, s.supremum) == (nf.infimum - 2, nf.supremum - 2)


@given(braid_words(min_n=3, max_len=20))
def test_half_twist_shifts_infimum(u):
    nf = to_normal_form(u)
    d = delta(u.strands)
    assert infimum(concat(inverse(d), u)) == nf.infimum - 1
    assert supremum(concat(d, u)) == nf.supremum + 1


def test_equivalence_relation():
    rng = random.Random(5)
    for _ in range(500):
        n = rng.randint(2, 4)
        base = random_word(rng, n, rng.randint(0, 10))
        words = [W(n, *scramble(rng, n, base.letters)) if rng.random() < 0.5 else random_word(rng, n, 3) for _ in range(3)]
        u, v, w = words
        assert are_equal(u, u)
        assert are_equal(u, v) == are_equal(v, u)
        if are_equal(u, v) and are_equal(v, w):
            assert are_equal(u, w)
