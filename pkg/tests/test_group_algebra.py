from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncalex import GroupRingElement, GroupWord, gr_augment, gr_mul, gr_star, reduce_word, word_inverse, word_mul
from ncalex.errors import ArityError, InvalidGeneratorError

G = 3


def E(pairs, g=G):
    return GroupRingElement.from_pairs(pairs, g)


letters = st.integers(1, G).flatmap(lambda k: st.sampled_from([k, -k]))
raw_words = st.lists(letters, max_size=8)
words = raw_words.map(lambda r: reduce_word(r, G))
elements = st.lists(
    st.tuples(st.integers(-4, 4), st.lists(letters, max_size=4)), max_size=6
).map(lambda pairs: E(pairs))


@pytest.mark.parametrize("raw, expected", [
    ([1, -1, 2], (2,)),
    ([], ()),
    ([1, 2, -2, -1, 3], (3,)),
])
def test_reduce_word_examples(raw, expected):
    assert reduce_word(raw, 3).letters == expected


@pytest.mark.parametrize("raw", [[0], [4], [1, -5]])
def test_reduce_word_rejects_bad_letters(raw):
    with pytest.raises(InvalidGeneratorError):
        reduce_word(raw, 3)


def test_word_group_examples():
    w = lambda *ls: GroupWord(ls, 2)
    assert word_mul(w(1), w(-1)) == w()
    assert word_inverse(w(1, 2)).letters == (-2, -1)
    assert word_mul(w(1, 2), w(-2, 1)).letters == (1, 1)


def test_word_mul_checks_arity():
    with pytest.raises(ArityError):
        word_mul(GroupWord([1], 1), GroupWord([1], 2))


@given(raw_words)
def test_reduce_idempotent_and_shortening(raw):
    w = reduce_word(raw, G)
    assert reduce_word(w.letters, G) == w
    assert len(w) <= len(raw)
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))


@given(words, words, words)
def test_word_associativity(a, b, c):
    assert word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c))


@given(words)
def test_word_inverse_law(a):
    assert word_mul(a, word_inverse(a)) == GroupWord.identity(G)
    assert word_mul(word_inverse(a), a) == GroupWord.identity(G)


def test_gr_mul_examples():
    t1, t1i, t2 = E([(1, [1])], 2), E([(1, [-1])], 2), E([(1, [2])], 2)
    assert gr_mul(t1, t1i) == GroupRingElement.scalar(1, 2)
    assert gr_mul(t1 + 1, t1 - 1) == E([(1, [1, 1]), (-1, [])], 2)
    assert gr_mul(t1, t2) == E([(1, [1, 2])], 2)
    assert gr_mul(t2, t1) == E([(1, [2, 1])], 2)
    assert gr_mul(t1, t2) != gr_mul(t2, t1)


def test_no_zero_coefficients_after_cancellation():
    t1 = E([(1, [1])], 1)
    assert len(gr_mul(t1 + 1, t1 - 1)) == 2
    assert not (t1 - t1)


def test_gr_star_examples():
    assert gr_star(E([(2, [1, 2])], 2)) == E([(2, [-2, -1])], 2)
    assert gr_star(E([(3, []), (1, [1])], 2)) == E([(3, []), (1, [-1])], 2)
    x = E([(5, [1, -2, 1])], 2)
    assert gr_star(gr_star(x)) == x


def test_gr_augment_examples():
    assert gr_augment(E([(3, [1]), (-2, [2]), (5, [])], 2)) == 6
    assert gr_augment(E([(1, [1, -2])], 2)) == 1
    assert gr_augment(GroupRingElement({}, 2)) == 0


@given(elements, elements, elements)
def test_ring_laws(a, b, c):
    assert gr_mul(gr_mul(a, b), c) == gr_mul(a, gr_mul(b, c))
    assert gr_mul(a, b + c) == gr_mul(a, b) + gr_mul(a, c)
    assert gr_mul(a + b, c) == gr_mul(a, c) + gr_mul(b, c)
    assert gr_augment(gr_mul(a, b)) == gr_augment(a) * gr_augment(b)


@given(elements, elements)
def test_star_is_anti_automorphism(a, b):
    assert gr_star(gr_mul(a, b)) == gr_mul(gr_star(b), gr_star(a))
    assert gr_star(gr_star(a)) == a


def test_rational_coefficients_and_integrality():
    a = E([(Fraction(1, 2), [1])], 1)
    assert not a.is_integral()
    assert (a * 2).is_integral()
    assert gr_augment(a) == Fraction(1, 2)


def test_mixing_generator_counts_fails():
    with pytest.raises(ArityError):
        gr_mul(E([(1, [1])], 1), E([(1, [1])], 2))
