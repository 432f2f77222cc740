"""
Tests for the R^nL -> R-infinity encodings
"""
import sys

import pytest

# Add src to path for imports
sys.path.append('src')

from src.core.errors import NoSignal, NotInDomain
from src.core.words import CyclicWord, contains_cyclic_subword, parse_codes
from src.machines.automaton import accepts, language
from src.machines.builders import build_f2_lower, build_RnL
from src.potpos.encodings import (
    decode_f, decode_signal, encode_f, encode_signal, maximal_rnl_level,
)


def cw(text):
    return CyclicWord.parse(text, 2)


def domain(n, max_length):
    for length in range(1, max_length + 1):
        for word in sorted(language(build_RnL(n), length), key=lambda w: w.letters):
            if "b" in word.to_text():
                yield word


def marker(n):
    return parse_codes("ab" + "A" * n + "b" + "A" * (n + 3) + "b", 2)


def test_encode_examples():
    assert encode_f(0, cw("baBaBab")) == cw("bbAAAbb")
    assert encode_signal(0, cw("baBaBab")) == cw("bbAbAAAbAbb")
    assert encode_f(1, cw("baaBaaBab")) == cw("babAAAAbb")
    assert decode_f(1, cw("babAAAAbb")) == cw("baaBaaBab")
    assert decode_signal(cw("bbAbAAAbAbb")) == (0, cw("baBaBab"))


def test_words_without_segments_are_fixed():
    word = cw("baabAAb")
    assert encode_f(0, word) == word
    assert decode_f(0, word) == word


@pytest.mark.parametrize("n", [0, 1, 2])
def test_encode_f_is_a_length_preserving_injection(n):
    images = {}
    lower = build_f2_lower()
    for word in domain(n, 14):
        image = encode_f(n, word)
        assert len(image) == len(word)
        assert accepts(lower, image)
        assert decode_f(n, image) == word
        assert images.setdefault(image, word) == word


@pytest.mark.parametrize("n", [1, 2])
def test_encode_f_avoids_the_signal_marker(n):
    for word in domain(n, 14):
        assert not contains_cyclic_subword(encode_f(n, word), marker(n))


def test_marker_can_appear_at_level_zero():
    image = encode_f(0, cw("baabaBaBa"))
    assert image == cw("baabbAAAb")
    assert contains_cyclic_subword(image, marker(0))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_signal_round_trip(n):
    growth = []
    lower = build_f2_lower()
    for word in domain(n, 14):
        try:
            image = encode_signal(n, word)
        except NotInDomain:
            continue
        assert accepts(lower, image)
        assert decode_signal(image) == (n, word)
        growth.append(len(image) - len(word))
    assert growth
    assert max(growth) <= 6


def test_domain_errors():
    with pytest.raises(NotInDomain):
        encode_f(0, cw("aBB"))
    with pytest.raises(NotInDomain):
        encode_f(0, cw("a"))
    with pytest.raises(NotInDomain):
        encode_signal(0, cw("ab"))
    with pytest.raises(NoSignal):
        decode_signal(cw("ab"))
    with pytest.raises(NoSignal):
        decode_signal(cw("aa"))


def test_maximal_rnl_level():
    assert maximal_rnl_level(cw("baBaBab")) == 0
    assert maximal_rnl_level(cw("baaBaaBab")) == 1
    assert maximal_rnl_level(cw("aBB")) is None


def main():
    """Run the encoding tests"""
    sys.exit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
