"""
Closeness testers built on ERM discrimination.

A tester trains on one pair of samples, re-measures the selected graph on a
fresh holdout pair, and answers DISTINCT when the holdout gap reaches eps / 3.
The lifted tester runs that test on every grid mixture toward a fixed vertex.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, log

import numpy as np

from ..config import get_settings
from ..core_feature.distribution import Distribution, Sample, is_exact_number, make_rng, sample_from
from ..core_feature.frequency import edge_freq_empirical
from ..core_feature.hypergraph import DistinguishingClass
from ..metrics_feature.ipm import to_json_number
from .erm import erm_discriminate

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    EQUIVALENT = "EQUIVALENT"
    DISTINCT = "DISTINCT"


@dataclass(frozen=True)
class TesterVerdict:
    """
    Attributes:
        verdict (Verdict): DISTINCT exactly when witness_gap >= threshold.
        witness_gap: Holdout estimate of |L_p1(g) - L_p2(g)| for the selected g.
        threshold: The eps / 3 cut.
        graph_index (int | None): Class index of the selected graph.
        runs (tuple[TesterVerdict, ...]): Per-grid-point verdicts of a lifted test.
    """

    verdict: Verdict
    witness_gap: object
    threshold: object
    graph_index: int | None = None
    runs: tuple = ()

    def to_dict(self) -> dict:
        out = {
            "verdict": self.verdict.value,
            "witness_gap": to_json_number(self.witness_gap),
            "threshold": to_json_number(self.threshold),
            "graph_index": self.graph_index,
        }
        if self.runs:
            out["runs"] = [r.to_dict() for r in self.runs]
        return out


def holdout_sample_size(k: int, epsilon: float, delta: float, constant: float | None = None) -> int:
    """ceil(H * k^2 / eps^2 * ln(4 / delta)), the fresh-sample size for re-estimating a gap."""
    if epsilon <= 0 or not 0 < delta < 1:
        raise ValueError(f"need epsilon > 0 and 0 < delta < 1, got {epsilon}, {delta}")
    constant = get_settings().holdout_constant if constant is None else constant
    return ceil(constant * k * k / epsilon**2 * log(4 / delta))


def closeness_test(
    c: DistinguishingClass,
    s1: Sample,
    s2: Sample,
    holdout1: Sample,
    holdout2: Sample,
    epsilon,
    budget: int | None = None,
) -> TesterVerdict:
    """
    Tests p1 == p2 against IPM_c(p1, p2) >= eps.

    Args:
        c (DistinguishingClass): Distinguishers.
        s1 (Sample): Training draws from p1.
        s2 (Sample): Training draws from p2.
        holdout1 (Sample): Fresh draws from p1, independent of s1.
        holdout2 (Sample): Fresh draws from p2, independent of s2.
        epsilon (float | Fraction): Accuracy, must be positive.

    Returns:
        TesterVerdict: DISTINCT iff the holdout gap of the ERM graph is >= eps / 3.

    Raises:
        ValueError: If epsilon <= 0.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    threshold = Fraction(epsilon) / 3 if is_exact_number(epsilon) else float(epsilon) / 3
    outcome = erm_discriminate(c, s1, s2, budget=budget)
    gap = abs(
        edge_freq_empirical(outcome.graph, holdout1, budget)
        - edge_freq_empirical(outcome.graph, holdout2, budget)
    )
    verdict = Verdict.DISTINCT if gap >= threshold else Verdict.EQUIVALENT
    return TesterVerdict(verdict, gap, threshold, outcome.index)


class DistributionSampler:
    """Draws IID samples from a fixed distribution."""

    def __init__(self, p: Distribution):
        self.p = p
        self.universe = p.universe

    def draw(self, m: int, rng) -> Sample:
        return sample_from(self.p, m, rng)


class LiftedSampler:
    """
    Samples p^q = q * delta_v + (1 - q) * p from a base sampler.

    Each draw independently becomes v with probability q, otherwise it keeps the
    base sampler's vertex.
    """

    def __init__(self, base, v: int, q):
        if not 0 <= q <= 1:
            raise ValueError(f"mixture weight must lie in [0, 1], got {q!r}")
        self.base = base
        self.universe = base.universe
        self.v = self.universe.check_vertex(v)
        self.q = float(q)

    def draw(self, m: int, rng) -> Sample:
        rng = make_rng(rng)
        base = np.asarray(self.base.draw(m, rng).vertices, dtype=np.int64)
        coins = rng.random(m) < self.q
        base[coins] = self.v
        return Sample(self.universe, tuple(base.tolist()))


def lifted_test(
    c: DistinguishingClass,
    v: int,
    sampler1,
    sampler2,
    epsilon: float,
    delta: float,
    base_m: int,
    seed,
    budget: int | None = None,
) -> TesterVerdict:
    """
    Tests the pinned class G_v by running the closeness test on the k + 1 lifted
    pairs (p1^q, p2^q), q = j / k, at accuracy c_k * eps with c_k = 2^(-3k^2).

    Each run trains on fresh samples of size `base_m`; its holdout has size
    min(base_m, holdout_sample_size(k, c_k * eps, delta / k)). The answer is
    DISTINCT iff any run says DISTINCT.

    Args:
        c (DistinguishingClass): Arity-k class.
        v (int): Vertex the mixtures lift toward.
        sampler1: Object with `draw(m, rng) -> Sample` for p1.
        sampler2: Same for p2.
        epsilon (float): Target accuracy for the pinned class.
        delta (float): Overall confidence, split evenly over the runs.
        base_m (int): Training sample size per run.
        seed: Seed for the per-run RNG streams.

    Returns:
        TesterVerdict: Combined verdict with the per-run verdicts in `runs`.
    """
    if base_m < 1:
        raise ValueError(f"base_m must be at least 1, got {base_m}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    k = c.arity
    c_k = 2.0 ** (-3 * k * k)
    run_epsilon = c_k * float(epsilon)
    holdout_m = min(base_m, holdout_sample_size(k, run_epsilon, delta / k))
    children = np.random.SeedSequence(seed).spawn(k + 1)
    runs = []
    for j, child in enumerate(children):
        q = Fraction(j, k)
        rng = np.random.default_rng(child)
        lifted1 = LiftedSampler(sampler1, v, q)
        lifted2 = LiftedSampler(sampler2, v, q)
        runs.append(
            closeness_test(
                c,
                lifted1.draw(base_m, rng),
                lifted2.draw(base_m, rng),
                lifted1.draw(holdout_m, rng),
                lifted2.draw(holdout_m, rng),
                run_epsilon,
                budget,
            )
        )
        logger.debug("lifted run q=%s verdict=%s", q, runs[-1].verdict.value)
    distinct = [r for r in runs if r.verdict is Verdict.DISTINCT]
    top = max(runs, key=lambda r: r.witness_gap)
    return TesterVerdict(
        Verdict.DISTINCT if distinct else Verdict.EQUIVALENT,
        top.witness_gap,
        run_epsilon / 3,
        top.graph_index,
        tuple(runs),
    )
