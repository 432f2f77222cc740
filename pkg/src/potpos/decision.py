"""
Decision procedure for potential positivity in F2
Alternates criterion checks with switch moves until a positive image or a certificate
"""
import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..core.automorphisms import Automorphism, apply, automorphism_from_json, automorphism_to_json
from ..core.config import default_max_steps
from ..core.errors import RankMismatch
from ..core.words import WordLike
from .criterion import (
    CriterionPair, all_but_one, alternate_pair, as_cyclic, criterion_move, goldstein_check, invert_negative_only,
    pair_text,
)

# Set up logging
logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    PP = "PP"
    NOT_PP = "NotPP"
    UNDECIDED = "Undecided"


class Certificate(BaseModel):
    """Why a word is not potentially positive"""
    step: int
    word: str
    reason: str


class Decision(BaseModel):
    """Verdict with its witness automorphism or non-PP certificate"""
    verdict: Verdict
    word: str
    witness: Optional[List[Dict[str, str]]] = None
    image: Optional[str] = None
    certificate: Optional[Certificate] = None
    steps_used: int = 0

    def automorphism(self) -> Optional[Automorphism]:
        if self.witness is None:
            return None
        return automorphism_from_json(self.witness, 2)


def _next_pair(pairs: List[CriterionPair], family: Optional[Tuple[CriterionPair, CriterionPair]]) -> Optional[CriterionPair]:
    if family is None:
        return pairs[0]
    allowed = [p for p in pairs if p in family]
    return allowed[0] if allowed else None


def decide_pp2(word: WordLike, max_steps: Optional[int] = None) -> Decision:
    """
    Decide whether a cyclic word in F2 is potentially positive

    Loop: stop on a positive word or the all-but-one rule, invert
    generators that occur only negatively, otherwise pick a criterion pair
    and apply its move. After the first move the pair must stay in the
    family {previous pair, its alternate}; leaving it proves the word is not PP.

    Args:
        word: Cyclic word of rank 2; a Word is cyclically reduced first
        max_steps: Cap on switch moves (default from configuration)

    Returns:
        Decision; PP witnesses are verified to map the word to a positive word
    """
    if word.rank != 2:
        raise RankMismatch(f"decision procedure is defined on F2, got rank {word.rank}")
    word = as_cyclic(word)
    max_steps = default_max_steps(len(word)) if max_steps is None else max_steps
    text = word.to_text()

    if not word.letters:
        return Decision(verdict=Verdict.PP, word=text, witness=[], image=text)

    current = word
    witness = Automorphism(2, ())
    family: Optional[Tuple[CriterionPair, CriterionPair]] = None
    steps = 0

    while True:
        if current.is_positive():
            break

        finish = all_but_one(current)
        if finish is not None:
            witness = witness.then(finish)
            current = apply(finish, current)
            break

        inversion = invert_negative_only(current)
        if inversion is not None:
            witness = witness.then(inversion)
            current = apply(inversion, current)
            family = None
            continue

        pairs = goldstein_check(current)
        if not pairs:
            logger.info(f"{text}: not PP, {current} fails every criterion pair")
            return Decision(verdict=Verdict.NOT_PP, word=text, steps_used=steps,
                            certificate=Certificate(step=steps, word=current.to_text(), reason="criterion"))

        pair = _next_pair(pairs, family)
        if pair is None:
            logger.info(f"{text}: not PP, {current} left the criterion family")
            return Decision(verdict=Verdict.NOT_PP, word=text, steps_used=steps,
                            certificate=Certificate(step=steps, word=current.to_text(), reason="switch"))

        if steps >= max_steps:
            logger.warning(f"{text}: undecided after {steps} steps")
            return Decision(verdict=Verdict.UNDECIDED, word=text, steps_used=steps)

        move = criterion_move(pair)
        current = apply(move, current)
        witness = witness.then(move)
        family = (pair, alternate_pair(pair))
        steps += 1
        logger.debug(f"step {steps}: pair {pair_text(pair)} -> {current}")

    if not apply(witness, word).is_positive():
        raise AssertionError(f"witness for {text} does not positivize it")
    logger.info(f"{text}: PP after {steps} steps ({witness})")
    return Decision(verdict=Verdict.PP, word=text, witness=automorphism_to_json(witness),
                    image=current.to_text(), steps_used=steps)
