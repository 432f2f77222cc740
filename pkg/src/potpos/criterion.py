"""
Flanking criterion for potential positivity in F2 and the switch step
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..core.automorphisms import Automorphism, Invert, Substitute, Swap, apply
from ..core.errors import CriterionNotSatisfied, InvalidCriterionPair, RankMismatch
from ..core.words import (
    CyclicWord, Word, WordLike, code_generator, code_sign, cyclic_reduce, invert_code, letter_code, parse_codes,
    syllables,
)

# Set up logging
logger = logging.getLogger(__name__)

CriterionPair = Tuple[int, int]

_a, _A, _b, _B = parse_codes("aAbB", 2)

CANONICAL_PAIRS: Tuple[CriterionPair, ...] = (
    (_B, _a), (_A, _b), (_b, _a), (_a, _b), (_B, _A), (_A, _B), (_b, _A), (_a, _B),
)


class SwitchOutcome(str, Enum):
    POSITIVE = "Positive"
    ALL_BUT_ONE = "AllButOne"
    SAME = "SameCriterion"
    ALTERNATE = "AlternateCriterion"
    FAIL = "Fail"


@dataclass(frozen=True)
class SwitchResult:
    word: CyclicWord
    outcome: SwitchOutcome
    move: Automorphism


def pair_text(pair: CriterionPair) -> str:
    x, y = pair
    return Word(2, (x,)).to_text() + Word(2, (y,)).to_text()


def parse_pair(text: str) -> CriterionPair:
    codes = parse_codes(text, 2)
    if len(codes) != 2:
        raise InvalidCriterionPair(f"pair {text!r} must be two letters")
    return check_pair(tuple(codes))


def check_pair(pair: Tuple[int, int]) -> CriterionPair:
    x, y = pair
    if not (0 <= x < 4 and 0 <= y < 4) or code_generator(x) == code_generator(y):
        raise InvalidCriterionPair(f"invalid criterion pair {pair}")
    return x, y


def _require_f2(word: CyclicWord) -> None:
    if word.rank != 2:
        raise RankMismatch(f"criterion is defined on F2, got rank {word.rank}")


def satisfies(word: CyclicWord, pair: CriterionPair) -> bool:
    """Every occurrence of x has y immediately before and after it, cyclically."""
    x, y = pair
    letters = word.letters
    n = len(letters)
    return all(
        letters[i - 1] == y and letters[(i + 1) % n] == y
        for i in range(n) if letters[i] == x
    )


def goldstein_check(word: CyclicWord) -> List[CriterionPair]:
    """Criterion pairs the word satisfies, in canonical order."""
    _require_f2(word)
    return [pair for pair in CANONICAL_PAIRS if satisfies(word, pair)]


def is_in_goldstein(word: CyclicWord) -> bool:
    """Membership in G, the words satisfying (B, a)."""
    return satisfies(word, (_B, _a))


def alternate_pair(pair: CriterionPair) -> CriterionPair:
    x, y = pair
    return invert_code(y), invert_code(x)


def relabeling_for(pair: CriterionPair) -> Automorphism:
    """Relabeling sigma with sigma(x) = B and sigma(y) = a."""
    x, y = check_pair(pair)
    moves = []
    if code_generator(x) == 1:
        moves.append(Swap(1, 2))
        x, y = x ^ 2, y ^ 2
    if code_sign(x) > 0:
        moves.append(Invert(2))
    if code_sign(y) < 0:
        moves.append(Invert(1))
    return Automorphism(2, tuple(moves))


def relabelings() -> List[Automorphism]:
    """The eight relabelings generated by a -> A, b -> B and a <-> b."""
    group = []
    for swap in (False, True):
        for invert_a in (False, True):
            for invert_b in (False, True):
                moves = [Swap(1, 2)] if swap else []
                if invert_a:
                    moves.append(Invert(1))
                if invert_b:
                    moves.append(Invert(2))
                group.append(Automorphism(2, tuple(moves)))
    return group


def criterion_move(pair: CriterionPair) -> Automorphism:
    """The substitution sending the letter x to y^-1 x."""
    x, y = check_pair(pair)
    g = code_generator(x)
    if code_sign(x) > 0:
        image = (invert_code(y), letter_code(g, 1))
    else:
        image = (letter_code(g, 1), y)
    return Automorphism(2, (Substitute(g, Word(2, image)),))


def as_cyclic(word: WordLike) -> CyclicWord:
    """Cyclic reduction of a Word; cyclic words pass through."""
    return word if isinstance(word, CyclicWord) else cyclic_reduce(word)[0]


def negative_only(word: WordLike) -> List[int]:
    """Generators whose every occurrence is an inverse letter."""
    signs: Dict[int, Set[int]] = {}
    for code in word.letters:
        signs.setdefault(code_generator(code), set()).add(code_sign(code))
    return sorted(g for g, s in signs.items() if s == {-1})


def invert_negative_only(word: WordLike) -> Optional[Automorphism]:
    """Invert every generator that occurs only negatively; None when there is none."""
    flips = negative_only(word)
    if not flips:
        return None
    return Automorphism(word.rank, tuple(Invert(g) for g in flips))


def all_but_one(word: WordLike) -> Optional[Automorphism]:
    """
    Positivize a word in which exactly one generator occurs negatively

    With x_r the generator carrying negative letters and K its largest
    negative exponent, every other present generator x_i goes to x_i x_r^K.
    A Word is cyclically reduced first.

    Returns:
        The verified automorphism, or None when the rule does not apply
    """
    word = as_cyclic(word)
    rank = word.rank
    negative = sorted({code_generator(c) for c in word.letters if code_sign(c) < 0})
    if len(negative) != 1:
        return None
    r = negative[0]
    power = max(-e for g, e in syllables(word) if g == r and e < 0)
    tail = (letter_code(r, 1),) * power
    moves = tuple(
        Substitute(g, Word(rank, (letter_code(g, 1),) + tail))
        for g in word.generators() if g != r
    )
    if not moves:
        return None
    automorphism = Automorphism(rank, moves)
    if not apply(automorphism, word).is_positive():
        return None
    return automorphism


def switch_step(word: CyclicWord, pair: CriterionPair) -> SwitchResult:
    """
    One criterion move: normalize the pair to (B, a), apply b -> ba, map back

    Raises:
        CriterionNotSatisfied: if the word fails the pair
    """
    _require_f2(word)
    pair = check_pair(pair)
    if not satisfies(word, pair):
        raise CriterionNotSatisfied(f"{word} does not satisfy {pair_text(pair)}")

    sigma = relabeling_for(pair)
    phi = Automorphism(2, (Substitute(2, Word(2, (_b, _a))),))
    image = apply(sigma.then(phi).then(sigma.inverse()), word)

    if image.is_positive():
        outcome = SwitchOutcome.POSITIVE
    elif all_but_one(image) is not None:
        outcome = SwitchOutcome.ALL_BUT_ONE
    elif satisfies(image, pair):
        outcome = SwitchOutcome.SAME
    elif satisfies(image, alternate_pair(pair)):
        outcome = SwitchOutcome.ALTERNATE
    else:
        outcome = SwitchOutcome.FAIL
    logger.debug(f"switch {pair_text(pair)}: {word} -> {image} ({outcome.value})")
    return SwitchResult(word=image, outcome=outcome, move=criterion_move(pair))
