"""
Result models for growth computations
"""
from decimal import Decimal
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel

from ..core.spectral import RootApproximation


class GrowthSeries(BaseModel):
    """Exact counts of a language by length"""
    label: str
    rank: int
    counts: Dict[int, int]

    def ratio(self, length: int) -> Optional[Fraction]:
        """count(length + 1) / count(length) when both are recorded."""
        low, high = self.counts.get(length), self.counts.get(length + 1)
        if not low or high is None:
            return None
        return Fraction(high, low)


class DensityPoint(BaseModel):
    """(numerator + 1) / (denominator + 1) at one length"""
    length: int
    numerator: int
    denominator: int
    value: Fraction

    class Config:
        arbitrary_types_allowed = True
        json_encoders = {Fraction: str}


class TableRow(BaseModel):
    rank: int
    positive_rate: int
    pp_lower_bound: RootApproximation
    all_rate: int
    ascending_root: Optional[RootApproximation] = None

    class Config:
        json_encoders = {Fraction: str, Decimal: str}


class SampleReport(BaseModel):
    """Seeded sample of decided-PP words drawn from Goldstein machine paths"""
    length: int
    seed: int
    requested: int
    draws: int
    accepted: int
    undecided: int
    in_r_infinity: int
    fraction: Optional[float] = None
    words: List[str] = []
    caveat: str = ""
