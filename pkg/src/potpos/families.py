"""
The Lambda_k family of words and its pumping positivizer
"""
from typing import Sequence

from ..core.automorphisms import Automorphism, Substitute
from ..core.errors import PPGrowthError
from ..core.words import CyclicWord, Word, parse_codes


def lambda_word(exponents: Sequence[int], m: int) -> CyclicWord:
    """B a^n1 B a^n2 ... B a^nk B a b A^m b a as a cyclic word."""
    if not exponents or any(n < 0 for n in exponents) or m < 0:
        raise PPGrowthError("lambda_word needs k >= 1 nonnegative exponents and m >= 0")
    text = "".join("B" + "a" * n for n in exponents) + "Bab" + "A" * m + "ba"
    return CyclicWord.parse(text, 2)


def pumping_word(k: int, p: int) -> CyclicWord:
    """The member of Lambda_k with every n_i = p and m = p + 1."""
    return lambda_word([p] * k, p + 1)


def pumping_chain(k: int, p: int) -> Automorphism:
    """
    b -> b a^p, then a -> b^(k+1) a, then b -> b a

    Sends pumping_word(k, p) to the positive word a b b a a.
    """
    if k < 1 or p < 0:
        raise PPGrowthError("pumping_chain needs k >= 1 and p >= 0")

    def word(text: str) -> Word:
        return Word(2, tuple(parse_codes(text, 2)))

    return Automorphism(2, (
        Substitute(2, word("b" + "a" * p)),
        Substitute(1, word("b" * (k + 1) + "a")),
        Substitute(2, word("ba")),
    ))
