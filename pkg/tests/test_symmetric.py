import pytest

from qhecke.exceptions import IndexOutOfRange, ParseError
from qhecke.symmetric import (
    Permutation,
    coset_decompose,
    from_word,
    longest_element,
    reduced_word,
    symmetric_group,
    top_cycle,
)


def test_composition_applies_left_factor_first():
    u = Permutation((2, 1, 3))
    w = Permutation((1, 3, 2))
    assert u * w == Permutation((3, 1, 2))
    assert (u * w)(1) == w(u(1))


def test_inverse_and_identity():
    w = Permutation((3, 1, 4, 2))
    assert w * w.inverse() == Permutation.identity(4)
    assert w.inverse() * w == Permutation.identity(4)


def test_group_sizes_and_longest_element():
    assert len(symmetric_group(4)) == 24
    assert longest_element(4).length == 6
    assert max(w.length for w in symmetric_group(4).elements) == 6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reduced_words_spell_their_permutation(n):
    for w in symmetric_group(n).elements:
        word = reduced_word(w)
        assert len(word) == w.length
        assert from_word(list(word), n) == w


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coset_decomposition(n):
    for w in symmetric_group(n).elements:
        k, w1 = coset_decompose(w)
        assert 1 <= k <= n
        assert top_cycle(k, n) * w1.extend(n) == w
        assert w.length == (n - k) + w1.length


def test_one_line_parsing():
    assert Permutation.from_one_line("3 2 1") == longest_element(3)
    assert Permutation.from_one_line("[2,1,3]").one_line() == "2 1 3"
    with pytest.raises(ParseError):
        Permutation.from_one_line("1 1 2")


def test_simple_out_of_range():
    with pytest.raises(IndexOutOfRange):
        Permutation.simple(3, 3)


def test_extend_with_offset():
    assert Permutation((2, 1)).extend(4, offset=2) == Permutation((1, 2, 4, 3))
