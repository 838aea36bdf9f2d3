import pytest
from hypothesis import given
from hypothesis import strategies as st

from sturmwords import (
    EmptyPattern,
    EmptyWord,
    InvalidWord,
    LengthMismatch,
    conjugate,
    height,
    is_balanced1_circular,
    is_primitive,
    lex_compare,
    occurrences,
    validate_word,
)

from conftest import words


def scan_occurrences(w, u):
    # independent oracle: test every start position
    return sum(1 for i in range(len(w) - len(u) + 1) if w[i : i + len(u)] == u)


def test_height_examples():
    assert height("aaabab") == 2
    assert height("") == 0
    assert height("aabaaab") == 2


def test_occurrences_examples():
    assert occurrences("abababb", "ab") == 3 == scan_occurrences("abababb", "ab")
    assert occurrences("aaa", "aa") == 2
    assert occurrences("aabaaab", "aab") == 2 == scan_occurrences("aabaaab", "aab")


def test_occurrences_empty_pattern():
    with pytest.raises(EmptyPattern):
        occurrences("ab", "")


def test_conjugate_examples():
    assert conjugate("aaabaab", 2) == "abaabaa"
    assert conjugate("abba", 0) == "abba"
    assert conjugate("aaabaab", 7) == "aaabaab"
    with pytest.raises(EmptyWord):
        conjugate("", 1)


def test_lex_compare_examples():
    assert lex_compare("aab", "aba") == -1
    assert lex_compare("abab", "abba") == -1
    assert lex_compare("abba", "abba") == 0
    with pytest.raises(LengthMismatch):
        lex_compare("ab", "a")


def test_is_primitive_examples():
    assert not is_primitive("abab")
    assert is_primitive("aaabaab")
    assert is_primitive("a")
    with pytest.raises(EmptyWord):
        is_primitive("")


def test_balanced_examples():
    assert is_balanced1_circular("aaabaab")
    assert not is_balanced1_circular("aaabab")
    assert is_balanced1_circular("ab")
    with pytest.raises(EmptyWord):
        is_balanced1_circular("")


def test_unbalanced_witness_is_length_three():
    # circular factors of length 3 of aaabab span heights 0..2
    doubled = "aaabab" * 2
    heights = {height(doubled[i : i + 3]) for i in range(6)}
    assert heights == {0, 1, 2}


def test_validate_word():
    assert validate_word("abba") == "abba"
    with pytest.raises(InvalidWord):
        validate_word("abc")


@given(words, st.integers(0, 100), st.integers(0, 100))
def test_conjugate_composes(w, i, j):
    assert conjugate(conjugate(w, i), j) == conjugate(w, (i + j) % len(w))


@given(words, st.integers(0, 100))
def test_height_is_rotation_invariant(w, i):
    assert height(conjugate(w, i)) == height(w)
    assert height(w) == occurrences(w, "b")


@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(*(st.text("ab", min_size=n, max_size=n) for _ in range(3)))
))
def test_lex_compare_total_order(triple):
    u, v, t = triple
    assert lex_compare(u, v) == -lex_compare(v, u)
    if lex_compare(u, v) <= 0 and lex_compare(v, t) <= 0:
        assert lex_compare(u, t) <= 0


@given(words)
def test_primitive_iff_unique_among_conjugates(w):
    rotations = [conjugate(w, i) for i in range(len(w))]
    assert is_primitive(w) == (rotations.count(w) == 1)
