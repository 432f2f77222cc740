"""
Tree operators on subsets of G

R(S) = {w in G : phi(w) in S} and L(S) = {w in G : gamma(phi(w)) in S},
with phi: b -> ba and gamma: a <-> b.
"""
import logging
from typing import Iterator

from ..core.automorphisms import Automorphism, Substitute, Swap, apply
from ..core.errors import PPGrowthError, RankMismatch
from ..core.words import CyclicWord, Word, enumerate_cyclic, parse_codes
from .criterion import is_in_goldstein

# Set up logging
logger = logging.getLogger(__name__)

PHI = Automorphism(2, (Substitute(2, Word(2, tuple(parse_codes("ba", 2)))),))
GAMMA = Automorphism(2, (Swap(1, 2),))
GAMMA_PHI = PHI.then(GAMMA)


def tree_member(path: str, word: CyclicWord) -> bool:
    """
    Membership in X1(X2(...Xk(G))) for a path string over {R, L}

    The first letter of the path acts on the word first.
    """
    if word.rank != 2:
        raise RankMismatch(f"tree operators act on F2, got rank {word.rank}")
    current = word
    for step in path.upper():
        if not is_in_goldstein(current):
            return False
        if step == "R":
            current = apply(PHI, current)
        elif step == "L":
            current = apply(GAMMA_PHI, current)
        else:
            raise PPGrowthError(f"path letters must be R or L, got {step!r}")
    return is_in_goldstein(current)


def rn_member(n: int, word: CyclicWord) -> bool:
    """w in R^n(G)."""
    return tree_member("R" * n, word)


def rnl_member(n: int, word: CyclicWord) -> bool:
    """w in R^n(L(G))."""
    return tree_member("R" * n + "L", word)


def tree_survives(word: CyclicWord, n: int) -> bool:
    """True when some path of length n keeps the word inside G."""
    if not is_in_goldstein(word):
        return False
    if n == 0:
        return True
    image = apply(PHI, word)
    return tree_survives(image, n - 1) or tree_survives(apply(GAMMA, image), n - 1)


def tree_language(path: str, length: int) -> Iterator[CyclicWord]:
    """Cyclic words of a given length in the path's subset (brute force)."""
    for word in enumerate_cyclic(2, length):
        if tree_member(path, word):
            yield word
