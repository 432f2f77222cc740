"""
Exact counts of cyclic-word languages
Automaton languages by closed-path enumeration, predicate languages by
sharded necklace enumeration under a budget, commutator words by transfer
matrix and Burnside's lemma
"""
import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

import sympy

from ..core.config import PPGROWTH_WORKERS, enumeration_budget
from ..core.errors import BudgetExceeded, PPGrowthError
from ..core.words import code_generator, code_sign, enumerate_cyclic, invert_code
from ..machines.automaton import Automaton, count_closed_paths, language
from ..potpos.languages import AutomatonSpec, LanguageSpec, commutator_spec
from .models import GrowthSeries

# Set up logging
logger = logging.getLogger(__name__)


def _check_budget(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise BudgetExceeded(f"{what} needs {size} candidates, budget is {budget}")


def _count_shard(spec: LanguageSpec, length: int, first_letter: int) -> int:
    return sum(1 for w in enumerate_cyclic(spec.rank, length, first_letter) if spec.contains(w))


def count_language(spec: LanguageSpec, length: int, budget: Optional[int] = None,
                   workers: Optional[int] = None) -> int:
    """
    Number of cyclic words of this length in the language

    Args:
        spec: Language to count
        length: Word length
        budget: Maximum candidate count (defaults to PPGROWTH_BUDGET)
        workers: Threads for predicate enumeration, one shard per first letter

    Raises:
        BudgetExceeded: when the enumeration would exceed the budget
    """
    budget = enumeration_budget() if budget is None else budget
    workers = PPGROWTH_WORKERS if workers is None else workers
    if length <= 0:
        return 0

    if isinstance(spec, AutomatonSpec):
        _check_budget(count_closed_paths(spec.automaton, length), budget, f"{spec.label} at length {length}")
        return len(language(spec.automaton, length))

    _check_budget((2 * spec.rank - 1) ** length, budget, f"{spec.label} at length {length}")
    shards = range(2 * spec.rank)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(lambda c: _count_shard(spec, length, c), shards))
    else:
        total = sum(_count_shard(spec, length, c) for c in shards)
    logger.debug(f"count({spec.label}, {length}) = {total}")
    return total


def growth_series(spec: LanguageSpec, lengths: Iterable[int], budget: Optional[int] = None) -> GrowthSeries:
    return GrowthSeries(
        label=spec.label,
        rank=spec.rank,
        counts={n: count_language(spec, n, budget) for n in lengths},
    )


def _linear_zero_sum(rank: int, length: int) -> int:
    """Cyclically reduced linear words of this length with zero exponent sums."""
    if length <= 0:
        return 0
    State = Tuple[int, int, Tuple[int, ...]]
    states: Dict[State, int] = defaultdict(int)
    for code in range(2 * rank):
        vec = [0] * rank
        vec[code_generator(code) - 1] += code_sign(code)
        states[(code, code, tuple(vec))] += 1

    for step in range(1, length):
        remaining = length - step
        nxt: Dict[State, int] = defaultdict(int)
        for (first, last, vec), count in states.items():
            for code in range(2 * rank):
                if code == invert_code(last):
                    continue
                moved = list(vec)
                moved[code_generator(code) - 1] += code_sign(code)
                # the remaining letters must be able to cancel every exponent
                if sum(abs(v) for v in moved) > remaining - 1:
                    continue
                nxt[(first, code, tuple(moved))] += count
        states = nxt

    return sum(
        count for (first, last, vec), count in states.items()
        if not any(vec) and last != invert_code(first)
    )


def commutator_count(rank: int, length: int) -> int:
    """Cyclic words in the commutator subgroup, by Burnside over rotations."""
    if length <= 0:
        return 0
    total = sum(int(sympy.totient(length // d)) * _linear_zero_sum(rank, d) for d in sympy.divisors(length))
    if total % length:
        raise ArithmeticError(f"orbit count {total}/{length} is not integral")
    return total // length


def commutator_growth(rank: int, lengths: Iterable[int], method: str = "transfer",
                      budget: Optional[int] = None) -> GrowthSeries:
    """
    Cyclically reduced cyclic words with zero abelianization

    Args:
        rank: Rank of the free group
        lengths: Lengths to count
        method: "transfer" (exact, fast) or "enumerate" (brute force, budgeted)
    """
    if method == "transfer":
        counts = {n: commutator_count(rank, n) for n in lengths}
    elif method == "enumerate":
        spec = commutator_spec(rank)
        counts = {n: count_language(spec, n, budget) for n in lengths}
    else:
        raise PPGrowthError(f"unknown counting method {method!r}")
    return GrowthSeries(label="commutator", rank=rank, counts=counts)


def trace_ratio(automaton: Automaton, n: int) -> Fraction:
    """trace(A^(n+1)) / trace(A^n)."""
    low = count_closed_paths(automaton, n)
    if low == 0:
        raise PPGrowthError(f"no closed paths of length {n}")
    return Fraction(count_closed_paths(automaton, n + 1), low)
