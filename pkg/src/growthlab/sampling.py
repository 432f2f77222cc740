"""
Seeded sampling of potentially positive words from Goldstein machine paths
"""
import logging
import random
from typing import Optional

from ..core.errors import PPGrowthError
from ..machines.automaton import accepts, random_closed_path
from ..machines.builders import build_f2_lower, build_goldstein
from ..potpos.decision import Verdict, decide_pp2
from .models import SampleReport

# Set up logging
logger = logging.getLogger(__name__)

MAX_SAMPLE_LENGTH = 80

SAMPLING_CAVEAT = (
    "Samples are uniform over closed paths of the (B,a) Goldstein machine, "
    "then filtered by the decision procedure. This is not uniform over "
    "potentially positive cyclic words: words with several closed paths or "
    "several rotations weigh differently, and only one of the eight criterion "
    "pairs is sampled. Treat the fraction as an indication only."
)


def sample_pp2(length: int, count: int, seed: int, max_draws: Optional[int] = None) -> SampleReport:
    """
    Draw potentially positive words and measure how many lie in R^infinity

    Args:
        length: Target word length (at most MAX_SAMPLE_LENGTH)
        count: Number of accepted words wanted
        seed: Seed of the only random source
        max_draws: Stop after this many draws (default 1000 * count)

    Returns:
        SampleReport with the achieved sample size and the R^infinity fraction
    """
    if not 1 <= length <= MAX_SAMPLE_LENGTH:
        raise PPGrowthError(f"sample length must be in 1..{MAX_SAMPLE_LENGTH}")
    if count < 0:
        raise PPGrowthError("sample count must be nonnegative")
    max_draws = 1000 * max(count, 1) if max_draws is None else max_draws

    rng = random.Random(seed)
    goldstein = build_goldstein()
    lower = build_f2_lower()
    words, draws, undecided, inside = [], 0, 0, 0

    while len(words) < count and draws < max_draws:
        path = random_closed_path(goldstein, length, rng)
        if path is None:
            break
        draws += 1
        word = goldstein.path_word(path)
        verdict = decide_pp2(word).verdict
        if verdict == Verdict.UNDECIDED:
            undecided += 1
        if verdict != Verdict.PP:
            continue
        words.append(word.to_text())
        if accepts(lower, word):
            inside += 1

    if len(words) < count:
        logger.warning(f"sampled {len(words)} of {count} words in {draws} draws")
    report = SampleReport(
        length=length,
        seed=seed,
        requested=count,
        draws=draws,
        accepted=len(words),
        undecided=undecided,
        in_r_infinity=inside,
        fraction=inside / len(words) if words else None,
        words=words,
        caveat=SAMPLING_CAVEAT,
    )
    logger.info(f"sample length={length} seed={seed}: {report.accepted}/{draws} PP, fraction {report.fraction}")
    return report
