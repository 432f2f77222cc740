"""
Tests for the word kernel and automorphisms
Reduction, cyclic normal forms, enumeration and elementary moves
"""
import sys

import pytest
from hypothesis import given, settings, strategies as st

# Add src to path for imports
sys.path.append('src')

from src.core.automorphisms import (
    Automorphism, Invert, Substitute, Swap, apply, automorphism_from_json, automorphism_to_json,
    move_json, parse_move, substitution,
)
from src.core.errors import InvalidLetter, InvalidMove, NotReduced, RankMismatch
from src.core.words import (
    CyclicWord, Word, abelianize, canonical_rotation, contains_cyclic_subword, cyclic_reduce,
    enumerate_cyclic, enumerate_reduced, parse_codes, reduce, syllables,
)

raw_words = st.lists(st.integers(min_value=0, max_value=3), max_size=14)


def test_reduce_cancels_inverse_pairs():
    assert reduce(2, parse_codes("abBA", 2)).letters == ()
    assert Word.parse("aabBc", 3).to_text() == "aac"
    assert Word.parse("x1 X1 x9", 9).to_text() == "x9"


def test_word_constructor_requires_reduced_letters():
    with pytest.raises(NotReduced):
        Word(2, (0, 1))
    with pytest.raises(NotReduced):
        Word(3, tuple(parse_codes("abcCa", 3)))
    with pytest.raises(InvalidLetter):
        Word(2, (4,))
    assert Word(2, (0, 2, 1)).to_text() == "abA"
    assert reduce(2, (0, 1)) == Word(2, ())


@given(raw_words)
def test_reduced_words_pass_the_constructor(codes):
    word = reduce(2, codes)
    assert Word(2, word.letters) == word
    assert Word(2, word.inverse().letters) == word.inverse()


def test_parse_rejects_unknown_letters():
    with pytest.raises(InvalidLetter):
        Word.parse("ac", 2)
    with pytest.raises(InvalidLetter):
        Word.parse("x3", 2)


@given(raw_words)
def test_reduce_is_idempotent(codes):
    once = reduce(2, codes)
    assert reduce(2, once.letters) == once
    assert all(a != b ^ 1 for a, b in zip(once.letters, once.letters[1:]))


@given(raw_words)
def test_cyclic_reduce_conjugates_back(codes):
    word = reduce(2, codes)
    cyclic, conjugator = cyclic_reduce(word)
    assert conjugator + cyclic.as_word() + conjugator.inverse() == word
    letters = cyclic.letters
    if len(letters) > 1:
        assert letters[0] != letters[-1] ^ 1


@given(raw_words)
def test_canonical_rotation_ignores_rotation(codes):
    cyclic = cyclic_reduce(reduce(2, codes))[0]
    for rotation in cyclic.rotations():
        assert CyclicWord.from_codes(2, rotation) == cyclic
    assert canonical_rotation(cyclic.letters) == cyclic.letters


def test_cyclic_word_examples():
    assert CyclicWord.parse("Aba", 2).to_text() == "b"
    assert CyclicWord.parse("baab", 2).to_text() == "aabb"
    assert CyclicWord.parse("aA", 2).letters == ()


def test_contains_cyclic_subword_wraps():
    word = CyclicWord.parse("aab", 2)
    assert contains_cyclic_subword(word, parse_codes("ba", 2))
    assert contains_cyclic_subword(word, parse_codes("baa", 2))
    assert not contains_cyclic_subword(word, parse_codes("bb", 2))
    assert contains_cyclic_subword(CyclicWord.parse("Ba", 2), parse_codes("BaB", 2))


def test_syllables_merge_around_the_cycle():
    assert syllables(Word.parse("aabAAb", 2)) == [(1, 2), (2, 1), (1, -2), (2, 1)]
    assert syllables(CyclicWord.parse("baab", 2)) == [(1, 2), (2, 2)]


def test_abelianize():
    assert abelianize(Word.parse("abAB", 2)) == (0, 0)
    assert abelianize(Word.parse("aab", 2)) == (2, 1)
    assert abelianize(Word.parse("cC", 3)) == (0, 0, 0)


def test_enumerate_reduced_counts():
    for length in range(1, 6):
        assert sum(1 for _ in enumerate_reduced(2, length)) == 4 * 3 ** (length - 1)


@pytest.mark.parametrize("rank,length", [(2, 1), (2, 2), (2, 5), (2, 6), (3, 4)])
def test_enumerate_cyclic_matches_brute_force(rank, length):
    listed = list(enumerate_cyclic(rank, length))
    assert len(listed) == len(set(listed))
    expected = set()
    for word in enumerate_reduced(rank, length):
        if word.letters[0] != word.letters[-1] ^ 1 or length == 1:
            expected.add(cyclic_reduce(word)[0])
    assert set(listed) == expected


def test_enumerate_cyclic_small_counts():
    assert sum(1 for _ in enumerate_cyclic(2, 2)) == 8
    assert sum(1 for _ in enumerate_cyclic(2, 0)) == 0


def test_enumerate_cyclic_shards_partition():
    whole = set(enumerate_cyclic(2, 6))
    shards = [set(enumerate_cyclic(2, 6, first_letter=c)) for c in range(4)]
    assert sum(len(s) for s in shards) == len(whole)
    assert set().union(*shards) == whole


def test_substitution_on_cyclic_word():
    phi = substitution("b", "ba", 2)
    assert apply(phi, CyclicWord.parse("Baa", 2)) == CyclicWord.parse("Ba", 2)
    assert apply(phi, CyclicWord.parse("Baa", 2)).to_text() == "aB"
    assert apply(phi, Word.parse("bA", 2)).to_text() == "b"


def test_parse_move_forms():
    assert parse_move("b->ba", 2) == Substitute(2, Word.parse("ba", 2))
    assert parse_move("a->A", 2) == Invert(1)
    assert parse_move("a<->b", 2) == Swap(1, 2)
    with pytest.raises(InvalidMove):
        parse_move("b->aa", 2)
    with pytest.raises(InvalidMove):
        parse_move("b->bab", 2)
    with pytest.raises(InvalidMove):
        parse_move("a<->a", 2)


def test_moves_compose_left_to_right():
    first = parse_move("a<->b", 2)
    second = parse_move("b->ba", 2)
    composed = Automorphism(2, (first, second))
    # a -> b -> ba
    assert apply(composed, Word.parse("a", 2)).to_text() == "ba"


@settings(max_examples=60)
@given(raw_words, st.sampled_from(["b->ba", "a->Bab", "b->B", "a<->b", "a->bab"]))
def test_inverse_undoes_automorphism(codes, move_text):
    word = reduce(2, codes)
    automorphism = Automorphism(2, (parse_move(move_text, 2), parse_move("a->ab", 2)))
    assert apply(automorphism.then(automorphism.inverse()), word) == word


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        apply(substitution("b", "ba", 2), Word.parse("c", 3))


def test_move_json_forms():
    assert move_json(parse_move("b->ba", 2), 2) == {"sub": "b->ba"}
    assert move_json(Invert(1), 2) == {"invert": "a"}
    assert move_json(Swap(1, 2), 2) == {"swap": "a<->b"}
    automorphism = Automorphism(2, (Swap(1, 2), Invert(2), parse_move("a->ab", 2)))
    assert automorphism_from_json(automorphism_to_json(automorphism), 2) == automorphism
    with pytest.raises(InvalidMove):
        automorphism_from_json([{"rotate": "a"}], 2)


def main():
    """Run the word tests"""
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
