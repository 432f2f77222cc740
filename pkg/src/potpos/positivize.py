"""
Explicit positivization of rank-machine words in F_r
"""
import logging
from functools import lru_cache
from typing import List

from ..core.automorphisms import Automorphism, Move, Substitute, apply
from ..core.errors import NotMachineWord, RankMismatch, ScheduleFailed
from ..core.words import CyclicWord, Word, WordLike, letter_code, syllables
from ..machines.automaton import Automaton, accepts
from ..machines.builders import build_rank_machine
from .criterion import all_but_one, as_cyclic, invert_negative_only

# Set up logging
logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rank_machine(r: int) -> Automaton:
    return build_rank_machine(r)


def _longest_negative_run(word: CyclicWord, generator: int) -> int:
    return max((-e for g, e in syllables(word) if g == generator and e < 0), default=0)


def _single_signed(word: CyclicWord) -> bool:
    signs = {}
    for g, e in syllables(word):
        signs.setdefault(g, set()).add(e > 0)
    return all(len(s) == 1 for s in signs.values())


def positivize_rank_word(r: int, word: WordLike) -> Automorphism:
    """
    Automorphism sending a rank-machine word to a positive word

    A word in which no generator occurs with both signs is handled by
    inversions alone. Otherwise, for j = 2..r-1 apply
    x_{j-1} -> x_j^n x_{j-1} x_j^n with n one more than the longest x_j^-1
    run at that stage; then x_i -> x_i x_{i-1} for i = r-1 down to 2; then
    invert generators left only negative and finish with the all-but-one
    rule on the remaining mixed generator.

    Raises:
        NotMachineWord: if the rank-r machine does not accept the word
        ScheduleFailed: if the schedule leaves a non-positive word
    """
    if word.rank != r:
        raise RankMismatch(f"word has rank {word.rank}, expected {r}")
    word = as_cyclic(word)
    if not accepts(rank_machine(r), word):
        raise NotMachineWord(f"{word} is not spelled by the rank-{r} machine")

    moves: List[Move] = []
    current = word

    def push(automorphism: Automorphism) -> None:
        nonlocal current
        moves.extend(automorphism.moves)
        current = apply(automorphism, current)

    if _single_signed(current):
        inversion = invert_negative_only(current)
        if inversion is not None:
            push(inversion)

    for j in range(2, r):
        if current.is_positive():
            break
        n = _longest_negative_run(current, j) + 1
        xj = letter_code(j, 1)
        push(Automorphism(r, (Substitute(j - 1, Word(r, (xj,) * n + (letter_code(j - 1, 1),) + (xj,) * n)),)))

    for i in range(r - 1, 1, -1):
        if current.is_positive():
            break
        push(Automorphism(r, (Substitute(i, Word(r, (letter_code(i, 1), letter_code(i - 1, 1)))),)))

    if not current.is_positive():
        inversion = invert_negative_only(current)
        if inversion is not None:
            push(inversion)

    if not current.is_positive():
        finish = all_but_one(current)
        if finish is None:
            logger.error(f"Positivization schedule stuck on {current} (from {word})")
            raise ScheduleFailed(f"schedule left {current} with more than one mixed generator")
        push(finish)

    automorphism = Automorphism(r, tuple(moves))
    if not apply(automorphism, word).is_positive():
        raise ScheduleFailed(f"schedule did not positivize {word}")
    logger.debug(f"Positivized {word} with {automorphism}")
    return automorphism
