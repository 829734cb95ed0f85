import logging
from dataclasses import dataclass
from math import ceil, log

from ..config import get_settings
from ..core_feature.distribution import Distribution, Sample
from ..core_feature.frequency import edge_freq_true
from ..core_feature.hypergraph import DistinguishingClass, Hypergraph
from ..metrics_feature.ipm import ipm_sampled, to_json_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiscriminationOutcome:
    """
    The class member an ERM discriminator settles on.

    Attributes:
        graph (Hypergraph): The selected member.
        index (int): Its position in the class.
        empirical_gap (Fraction): |L_S1(g) - L_S2(g)|.
        true_gap (Fraction | float | None): |L_p1(g) - L_p2(g)| when the source
            distributions were supplied for audit.
    """

    graph: Hypergraph
    index: int
    empirical_gap: object
    true_gap: object = None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "graph": self.graph.to_dict(),
            "empirical_gap": to_json_number(self.empirical_gap),
            "true_gap": None if self.true_gap is None else to_json_number(self.true_gap),
        }


def erm_discriminate(
    c: DistinguishingClass,
    s1: Sample,
    s2: Sample,
    p1: Distribution | None = None,
    p2: Distribution | None = None,
    budget: int | None = None,
) -> DiscriminationOutcome:
    """
    Picks the member with the largest empirical edge-frequency gap.

    Args:
        c (DistinguishingClass): Candidate distinguishers.
        s1 (Sample): Draws from the first distribution.
        s2 (Sample): Draws from the second distribution.
        p1 (Distribution | None): First source distribution, for auditing the true gap.
        p2 (Distribution | None): Second source distribution, for auditing the true gap.
        budget (int | None): Enumeration budget override.

    Returns:
        DiscriminationOutcome: The lowest-index maximizer and its gaps.
    """
    result = ipm_sampled(c, s1, s2, budget)
    g = c[result.witness]
    true_gap = None
    if p1 is not None and p2 is not None:
        true_gap = abs(edge_freq_true(g, p1, budget) - edge_freq_true(g, p2, budget))
    return DiscriminationOutcome(g, result.witness, result.value, true_gap)


def calibrated_sample_size(
    rho: int,
    k: int,
    epsilon: float,
    delta: float,
    constant: float | None = None,
) -> int:
    """
    m(eps, delta) = ceil(C * max(rho, 1) * k^2 / eps^2 * ln(1 / delta)).

    rho is floored at 1 so that a VC-0 class still gets a confidence-driven size.
    """
    if not 0 < epsilon <= 1 or not 0 < delta < 1:
        raise ValueError(f"need 0 < epsilon <= 1 and 0 < delta < 1, got {epsilon}, {delta}")
    constant = get_settings().calibration_constant if constant is None else constant
    return ceil(constant * max(rho, 1) * k * k / epsilon**2 * log(1 / delta))
