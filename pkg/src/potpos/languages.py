"""
Language specifications: automata, forbidden cyclic subwords, tree paths, predicates
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Tuple

from ..core.words import CyclicWord, abelianize, contains_cyclic_subword, enumerate_cyclic, parse_codes
from ..machines.automaton import Automaton, accepts, language
from .criterion import goldstein_check, is_in_goldstein
from .decision import Verdict, decide_pp2
from .tree import tree_member

# Set up logging
logger = logging.getLogger(__name__)


class LanguageSpec(ABC):
    """A set of cyclic words of one rank"""
    rank: int
    label: str

    @abstractmethod
    def contains(self, word: CyclicWord) -> bool:
        ...

    def words(self, length: int) -> Iterator[CyclicWord]:
        """Members of the given length, by filtered enumeration."""
        for word in enumerate_cyclic(self.rank, length):
            if self.contains(word):
                yield word

    def __str__(self) -> str:
        return self.label


@dataclass
class AutomatonSpec(LanguageSpec):
    automaton: Automaton
    label: str = "automaton"

    @property
    def rank(self) -> int:
        return self.automaton.rank

    def contains(self, word: CyclicWord) -> bool:
        return accepts(self.automaton, word)

    def words(self, length: int) -> Iterator[CyclicWord]:
        return iter(sorted(language(self.automaton, length), key=lambda w: w.letters))


@dataclass(frozen=True)
class RunRule:
    """Forbid left run^k right for min_run <= k <= max_run (None: unbounded)."""
    left: int
    run: int
    right: int
    min_run: int = 0
    max_run: Optional[int] = None


@dataclass
class ForbiddenSpec(LanguageSpec):
    rank: int
    patterns: List[Tuple[int, ...]] = field(default_factory=list)
    run_rules: List[RunRule] = field(default_factory=list)
    label: str = "forbidden"

    def contains(self, word: CyclicWord) -> bool:
        if not word.letters:
            return False
        if any(contains_cyclic_subword(word, p) for p in self.patterns):
            return False
        for rule in self.run_rules:
            top = len(word) if rule.max_run is None else min(rule.max_run, len(word))
            for k in range(rule.min_run, top + 1):
                if contains_cyclic_subword(word, (rule.left,) + (rule.run,) * k + (rule.right,)):
                    return False
        return True


@dataclass
class TreeSpec(LanguageSpec):
    path: str
    rank: int = 2
    label: str = ""

    def __post_init__(self):
        self.label = self.label or f"tree:{self.path or 'G'}"

    def contains(self, word: CyclicWord) -> bool:
        return tree_member(self.path, word)


@dataclass
class PredicateSpec(LanguageSpec):
    rank: int
    predicate: Callable[[CyclicWord], bool]
    label: str = "predicate"

    def contains(self, word: CyclicWord) -> bool:
        return bool(word.letters) and self.predicate(word)


def rn_forbidden(n: Optional[int]) -> ForbiddenSpec:
    """Forbid BA, AB and B a^k B for k <= n (all k when n is None)."""
    a, big_a, _, big_b = parse_codes("aAbB", 2)
    return ForbiddenSpec(
        rank=2,
        patterns=[(big_b, big_a), (big_a, big_b)],
        run_rules=[RunRule(big_b, a, big_b, 0, n)],
        label="R^inf" if n is None else f"R^{n}",
    )


def goldstein_spec() -> PredicateSpec:
    return PredicateSpec(rank=2, predicate=is_in_goldstein, label="G")


def criterion_spec() -> PredicateSpec:
    """Words satisfying at least one of the eight criterion pairs."""
    return PredicateSpec(rank=2, predicate=lambda w: bool(goldstein_check(w)), label="criterion")


def commutator_spec(rank: int) -> PredicateSpec:
    return PredicateSpec(rank=rank, predicate=lambda w: not any(abelianize(w)), label="commutator")


def all_cyclic_spec(rank: int) -> PredicateSpec:
    return PredicateSpec(rank=rank, predicate=lambda w: True, label="all")


def empty_spec(rank: int) -> PredicateSpec:
    return PredicateSpec(rank=rank, predicate=lambda w: False, label="empty")


def pp2_spec(max_steps: Optional[int] = None) -> PredicateSpec:
    """Words the decision procedure proves potentially positive."""
    return PredicateSpec(
        rank=2,
        predicate=lambda w: decide_pp2(w, max_steps).verdict == Verdict.PP,
        label="PP2",
    )
