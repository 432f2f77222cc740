"""
Growth-rate table for ranks 2..7 and density series between languages
"""
import logging
from fractions import Fraction
from typing import Iterable, List, Optional

from ..core.errors import PPGrowthError
from ..core.spectral import charpoly, dominant_root
from ..machines.builders import DEFAULT_RANK_VARIANT, build_f2_lower, build_rank_machine
from ..potpos.languages import LanguageSpec
from .counting import count_language
from .models import DensityPoint, TableRow

# Set up logging
logger = logging.getLogger(__name__)


def lower_bound_machine(rank: int, variant: str = DEFAULT_RANK_VARIANT):
    """The machine giving the rank's potentially-positive lower bound."""
    if rank == 2:
        return build_f2_lower()
    return build_rank_machine(rank, variant)


def growth_table(ranks: Iterable[int] = range(2, 8), digits: Optional[int] = None) -> List[TableRow]:
    """
    Rows of positive rate r, PP lower bound, and all-words rate 2r-1

    The lower bound comes from the default rank machine. The ascending_root
    column is the root of the zeta-ascending reading, which reproduces the
    tabulated figures but is not covered by the positivization schedule.

    Args:
        ranks: Ranks to tabulate (2 uses the F2 lower-bound machine)
        digits: Decimal digits for the dominant roots
    """
    rows = []
    for rank in ranks:
        if rank < 2:
            raise PPGrowthError(f"rank must be at least 2, got {rank}")
        machine = lower_bound_machine(rank)
        root = dominant_root(charpoly(machine.adjacency_matrix()), digits)
        ascending = root
        if rank >= 4:
            ascending = dominant_root(charpoly(lower_bound_machine(rank, "ascending").adjacency_matrix()), digits)
        logger.info(f"rank {rank}: {machine.size} nodes, growth rate {root.value}, ascending {ascending.value}")
        rows.append(TableRow(rank=rank, positive_rate=rank, pp_lower_bound=root, all_rate=2 * rank - 1,
                             ascending_root=ascending))
    return rows


def density_series(sub: LanguageSpec, sup: LanguageSpec, lengths: Iterable[int],
                   budget: Optional[int] = None) -> List[DensityPoint]:
    """(count(sub) + 1) / (count(sup) + 1) at each length."""
    points = []
    for length in lengths:
        numerator = count_language(sub, length, budget)
        denominator = count_language(sup, length, budget)
        points.append(DensityPoint(
            length=length,
            numerator=numerator,
            denominator=denominator,
            value=Fraction(numerator + 1, denominator + 1),
        ))
    return points
