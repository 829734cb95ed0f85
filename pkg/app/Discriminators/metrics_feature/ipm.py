"""
Integral probability metrics over explicit distinguishing classes.

IPM_G(p1, p2) = max over g in G of |L_p1(g) - L_p2(g)|, with the witness taken
as the lowest class index attaining the maximum.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..core_feature.distribution import Distribution, Sample, tv_distance
from ..core_feature.frequency import edge_freq_empirical, edge_freq_true
from ..core_feature.hypergraph import DistinguishingClass
from ..core_feature.universe import ensure_same_universe
from ..errors import BudgetExceededError

logger = logging.getLogger(__name__)

__all__ = ["IpmResult", "ipm_exact", "ipm_sampled", "tv_distance", "to_json_number"]


def to_json_number(x):
    """Fractions become "a/b" strings so JSON output stays exact; floats stay floats."""
    if isinstance(x, Fraction):
        return str(x)
    return float(x)


@dataclass(frozen=True)
class IpmResult:
    """
    Attributes:
        value (Fraction | float): The maximum gap over the class.
        witness (int): Lowest class index attaining `value`.
        per_graph_gaps (tuple): |L1(g) - L2(g)| for each class member, in class order.
    """

    value: object
    witness: int
    per_graph_gaps: tuple

    @classmethod
    def from_gaps(cls, gaps) -> "IpmResult":
        gaps = tuple(gaps)
        witness = max(range(len(gaps)), key=gaps.__getitem__)
        return cls(gaps[witness], witness, gaps)

    def to_dict(self) -> dict:
        return {
            "value": to_json_number(self.value),
            "witness": self.witness,
            "per_graph_gaps": [to_json_number(x) for x in self.per_graph_gaps],
        }


def ipm_exact(
    c: DistinguishingClass,
    p1: Distribution,
    p2: Distribution,
    budget: int | None = None,
) -> IpmResult:
    """
    Computes IPM_c(p1, p2) by exact edge-frequency enumeration.

    Exact when both distributions are exact.

    Raises:
        UniverseMismatchError: If the inputs do not share a universe.
        BudgetExceededError: If some member needs more tuples than the budget.
    """
    ensure_same_universe(c, p1, p2)
    try:
        gaps = [abs(edge_freq_true(g, p1, budget) - edge_freq_true(g, p2, budget)) for g in c]
    except BudgetExceededError as e:
        raise BudgetExceededError(e.required, e.budget, "ipm_sampled") from e
    return IpmResult.from_gaps(gaps)


def ipm_sampled(
    c: DistinguishingClass,
    s1: Sample,
    s2: Sample,
    budget: int | None = None,
) -> IpmResult:
    """Computes the plug-in IPM between the empirical edge frequencies of two samples."""
    ensure_same_universe(c, s1, s2)
    return IpmResult.from_gaps(
        abs(edge_freq_empirical(g, s1, budget) - edge_freq_empirical(g, s2, budget)) for g in c
    )
