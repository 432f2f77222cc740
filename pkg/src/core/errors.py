"""
Error types raised across the toolkit
All of them are ValueErrors so callers can treat bad input uniformly
"""
from typing import Optional


class PPGrowthError(ValueError):
    """Base class for every domain error"""


class InvalidLetter(PPGrowthError):
    """A letter or token does not name a generator of the given rank"""


class RankMismatch(PPGrowthError):
    """Two objects over different free groups were combined"""


class InvalidMove(PPGrowthError):
    """A substitution outside the forms g -> g u, u g, u g v"""


class NotReduced(PPGrowthError):
    """An automaton has an edge between mutually inverse labels"""


class NotMixing(PPGrowthError):
    """An automaton's graph is not primitive"""


class NotPrimitive(PPGrowthError):
    """A matrix has a periodic strongly connected component"""


class InvalidCriterionPair(PPGrowthError):
    """A criterion pair (x, y) with y equal to x or its inverse"""


class RankTooSmall(PPGrowthError):
    """Rank machines need r >= 3"""


class AutomatonParseError(PPGrowthError):
    """Malformed automaton text"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DanglingEdge(AutomatonParseError):
    """An edge references an undeclared node"""


class NoRealRoot(PPGrowthError):
    """A polynomial with no real root"""


class CriterionNotSatisfied(PPGrowthError):
    """A switch step was asked of a word that fails its pair"""


class NotMachineWord(PPGrowthError):
    """A word outside the language of the rank machine"""


class ScheduleFailed(PPGrowthError):
    """The positivization schedule did not produce a positive word"""


class NotInDomain(PPGrowthError):
    """A word outside the domain of an encoding"""


class NoSignal(PPGrowthError):
    """No signal marker found while decoding"""


class BudgetExceeded(PPGrowthError):
    """An enumeration would visit more words than the budget allows"""
