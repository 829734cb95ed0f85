"""
Desk-scale experiments for the convergence, sensitivity and expressivity results.

Every experiment is a pure function of its arguments and seed. Replicates draw
from one numpy Generator per grid point, derived with SeedSequence.spawn.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import e, exp, log, sqrt

import numpy as np

from ..capacity_feature.vc import graph_vc_dim
from ..config import get_settings
from ..constructions_feature.disjoint import disjoint_pair_by_game, disjoint_pair_by_sampling
from ..constructions_feature.graphs import MAX_BASE_SIZE, SubsetUniverse, subset_hypergraph
from ..constructions_feature.hard_pair import hard_pair
from ..core_feature.classes import power_set_class, singleton_class, threshold_class
from ..core_feature.distribution import Distribution, sample_from
from ..core_feature.frequency import edge_freq_empirical, edge_freq_true
from ..core_feature.hypergraph import DistinguishingClass
from ..core_feature.universe import VertexUniverse, ensure_same_universe
from ..metrics_feature.ipm import ipm_exact, to_json_number

logger = logging.getLogger(__name__)

ADVERSARIES = {
    "singletons": singleton_class,
    "thresholds": threshold_class,
    "power-set": power_set_class,
}


def _rho_term(rho: int, m: int) -> float:
    return 0.0 if rho == 0 else rho * log(2 * e * m / rho)


def uc_bound(m: int, k: int, rho: int) -> float:
    """k (4 + sqrt(rho ln(2em/rho))) / sqrt(2m) + k(k+1)/m, with the rho term 0 when rho = 0."""
    return k * (4 + sqrt(_rho_term(rho, m))) / sqrt(2 * m) + k * (k + 1) / m


def statement_bound(m: int, k: int, rho: int) -> float:
    """k sqrt(4 + rho ln(2em/rho)) / sqrt(2m) + k(k-1)/m."""
    return k * sqrt(4 + _rho_term(rho, m)) / sqrt(2 * m) + k * (k - 1) / m


def _true_frequencies(c: DistinguishingClass, p: Distribution, budget=None) -> list:
    return [edge_freq_true(g, p, budget) for g in c]


def sup_deviation(c: DistinguishingClass, sample, true_freqs, budget=None) -> object:
    """F(S) = max_g |L_S(g) - L_p(g)|, exact when the true frequencies are."""
    return max(abs(edge_freq_empirical(g, sample, budget) - t) for g, t in zip(c, true_freqs))


@dataclass(frozen=True)
class UcExperimentRow:
    m: int
    k: int
    rho: int
    empirical_expectation: float
    bound: float
    statement_bound: float
    replicates: int
    seed: int

    @property
    def holds(self) -> bool:
        return self.empirical_expectation <= self.bound

    def to_dict(self) -> dict:
        return {**asdict(self), "holds": self.holds}


def uc_experiment(
    c: DistinguishingClass,
    p: Distribution,
    m_grid,
    replicates: int | None = None,
    seed: int = 0,
    rho: int | None = None,
    budget: int | None = None,
) -> list[UcExperimentRow]:
    """
    Estimates E_S max_g |L_S(g) - L_p(g)| for each sample size in `m_grid`.

    Args:
        c (DistinguishingClass): Class whose uniform deviation is measured.
        p (Distribution): Source distribution.
        m_grid (Iterable[int]): Sample sizes, reported in the given order.
        replicates (int | None): Samples per grid point; default from settings.
        seed (int): Root seed.
        rho (int | None): Capacity for the bound; the exact graph VC when omitted.
        budget (int | None): Overrides the configured enumeration budget.

    Raises:
        ValueError: If some m < rho or replicates < 1.
    """
    ensure_same_universe(c, p)
    replicates = get_settings().default_replicates if replicates is None else replicates
    if replicates < 1:
        raise ValueError(f"replicates must be at least 1, got {replicates}")
    m_grid = [int(m) for m in m_grid]
    rho = graph_vc_dim(c).dimension if rho is None else rho
    for m in m_grid:
        if m < max(rho, 1):
            raise ValueError(f"sample size {m} is below the capacity {rho}")
    true_freqs = _true_frequencies(c, p, budget)
    rows = []
    for m, child in zip(m_grid, np.random.SeedSequence(seed).spawn(len(m_grid))):
        rng = np.random.default_rng(child)
        total = 0.0
        for _ in range(replicates):
            total += float(sup_deviation(c, sample_from(p, m, rng), true_freqs, budget))
        rows.append(
            UcExperimentRow(
                m,
                c.arity,
                rho,
                total / replicates,
                uc_bound(m, c.arity, rho),
                statement_bound(m, c.arity, rho),
                replicates,
                seed,
            )
        )
        logger.info("uc row m=%d: %.5f vs bound %.5f", m, rows[-1].empirical_expectation, rows[-1].bound)
    return rows


@dataclass(frozen=True)
class SensitivityReport:
    m: int
    k: int
    trials: int
    max_difference: object
    bound: object
    violations: int
    seed: int

    @property
    def holds(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "trials": self.trials,
            "max_difference": to_json_number(self.max_difference),
            "bound": to_json_number(self.bound),
            "violations": self.violations,
            "seed": self.seed,
            "holds": self.holds,
        }


def sensitivity_experiment(
    c: DistinguishingClass,
    p: Distribution,
    m: int,
    trials: int,
    seed: int = 0,
    budget: int | None = None,
) -> SensitivityReport:
    """
    Measures how far F(S) = max_g |L_S(g) - L_p(g)| moves when one draw of S is
    replaced by a fresh one, against the bounded-difference constant 2k/m.

    With an exact p the comparison is exact; a float p gets 1e-12 slack.
    """
    ensure_same_universe(c, p)
    if m < 1 or trials < 1:
        raise ValueError(f"need m >= 1 and trials >= 1, got {m}, {trials}")
    k = c.arity
    true_freqs = _true_frequencies(c, p, budget)
    bound = Fraction(2 * k, m)
    slack = 0 if p.exact else 1e-12
    rng = np.random.default_rng(seed)
    worst = Fraction(0) if p.exact else 0.0
    violations = 0
    for _ in range(trials):
        s = sample_from(p, m, rng)
        position = int(rng.integers(m))
        fresh = sample_from(p, 1, rng).vertices[0]
        diff = abs(
            sup_deviation(c, s, true_freqs, budget)
            - sup_deviation(c, s.replace(position, fresh), true_freqs, budget)
        )
        worst = max(worst, diff)
        if diff > bound + slack:
            violations += 1
    logger.info("sensitivity m=%d k=%d: max %s, %d violations", m, k, worst, violations)
    return SensitivityReport(m, k, trials, worst, bound, violations, seed)


@dataclass(frozen=True)
class ExpressivityReport:
    """
    Outcome of the separation pipeline: a disjoint pair the adversary cannot see,
    lifted into a pair the subset hypergraph separates.
    """

    ell: int
    k: int
    epsilon: float
    method: str
    adversary: str
    seed: int
    pair_ipm: object
    adversary_ipm: object
    edge_prob_p1: object
    edge_prob_p2: object
    subset_gap: object
    required_gap: float

    @property
    def holds(self) -> bool:
        return self.adversary_ipm < self.epsilon and self.subset_gap >= self.required_gap - 1e-12

    def to_dict(self) -> dict:
        out = {
            key: to_json_number(value) if isinstance(value, Fraction) else value
            for key, value in asdict(self).items()
        }
        out["holds"] = self.holds
        return out


def expressivity_experiment(
    ell: int,
    k: int,
    epsilon: float,
    method: str = "game",
    seed: int = 0,
    adversary: str = "singletons",
    rounds: int | None = None,
    sample_size: int | None = None,
    budget: int | None = None,
) -> ExpressivityReport:
    """
    Runs the full separation for an adversary on l index vertices.

    The adversary class is built on the ground set {0..l-1}; a disjoint pair is
    obtained by `method` ("game" or "sampling"), lifted with weight 1/k on v_A,
    and both sides are measured exactly: the adversary IPM must stay below eps,
    and the subset hypergraph gap must reach 1/2 for k = 2 and 1/e otherwise.
    """
    if not 1 <= ell <= MAX_BASE_SIZE:
        raise ValueError(f"ell must lie in [1, {MAX_BASE_SIZE}] for exact certification, got {ell}")
    if adversary not in ADVERSARIES:
        raise ValueError(f"unknown adversary {adversary!r}; choose from {sorted(ADVERSARIES)}")
    ground = VertexUniverse(ell)
    adversary_class = ADVERSARIES[adversary](ground)
    if method == "game":
        pair = disjoint_pair_by_game(
            adversary_class, epsilon, rounds=rounds, seed=seed, budget=budget
        )
    elif method == "sampling":
        pair = disjoint_pair_by_sampling(
            adversary_class, epsilon, seed, sample_size=sample_size, budget=budget
        )
    else:
        raise ValueError(f"method must be 'game' or 'sampling', got {method!r}")
    su = SubsetUniverse(ell)
    g = subset_hypergraph(su, k)
    p1, p2 = hard_pair(su, pair.q1, pair.q2, k)
    lifted_ipm = ipm_exact(su.lift_class(adversary_class), p1, p2, budget).value
    e1, e2 = edge_freq_true(g, p1, budget), edge_freq_true(g, p2, budget)
    report = ExpressivityReport(
        ell,
        k,
        epsilon,
        method,
        adversary,
        seed,
        pair.achieved_ipm,
        lifted_ipm,
        e1,
        e2,
        abs(e1 - e2),
        0.5 if k == 2 else exp(-1),
    )
    logger.info("expressivity ell=%d k=%d: adversary %s, gap %s", ell, k, lifted_ipm, report.subset_gap)
    return report
