"""
Disjoint-support distribution pairs that an adversary class cannot tell apart.

Two constructors are provided. `disjoint_pair_by_sampling` draws two small
uniform samples of the ground set and keeps their empirical distributions.
`disjoint_pair_by_game` splits the ground set by a labeling f, solves the game
in which the row player spreads mass so that no distinguisher predicts f, and
conditions the resulting distribution on each side of f. Either way a pair is
returned only after exact re-certification.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, log

import numpy as np

from ..capacity_feature.vc import vc_dim
from ..config import get_settings
from ..core_feature.distribution import Distribution, make_rng, sample_from
from ..core_feature.hypergraph import DistinguishingClass
from ..errors import ConstructionError
from ..metrics_feature.ipm import ipm_exact, to_json_number
from .game import default_rounds, solve_zero_sum_game

logger = logging.getLogger(__name__)

EXHAUSTIVE_LABELING_LIMIT = 20
STRATEGY_DENOMINATOR = 2**20


@dataclass(frozen=True)
class DisjointPair:
    """
    Attributes:
        q1 (Distribution): First distribution on the ground set.
        q2 (Distribution): Second distribution, support disjoint from q1's.
        achieved_ipm (Fraction): Exact IPM of the pair under the adversary.
        epsilon: The bound achieved_ipm is certified against.
        method (str): "sampling" or "game".
        diagnostics (dict): Attempts, game value and similar bookkeeping.
    """

    q1: Distribution
    q2: Distribution
    achieved_ipm: object
    epsilon: object
    method: str = "sampling"
    diagnostics: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "epsilon": to_json_number(self.epsilon),
            "achieved_ipm": to_json_number(self.achieved_ipm),
            "q1": self.q1.to_dict(),
            "q2": self.q2.to_dict(),
            "diagnostics": self.diagnostics,
        }


def certify_disjoint_pair(
    pair: DisjointPair, adversary: DistinguishingClass, budget: int | None = None
) -> DisjointPair:
    """
    Re-checks a pair from scratch: disjoint supports and exact IPM below epsilon.

    Returns:
        DisjointPair: The same pair, with achieved_ipm replaced by the recomputed value.

    Raises:
        ConstructionError: If either condition fails.
    """
    overlap = set(pair.q1.support) & set(pair.q2.support)
    if overlap:
        raise ConstructionError(
            f"supports overlap on {len(overlap)} vertices",
            {"overlap": sorted(overlap)[:10]},
        )
    value = ipm_exact(adversary, pair.q1, pair.q2, budget).value
    if not value < pair.epsilon:
        raise ConstructionError(
            f"adversary IPM {value} is not below {pair.epsilon}",
            {"achieved_ipm": to_json_number(value)},
        )
    return DisjointPair(pair.q1, pair.q2, value, pair.epsilon, pair.method, pair.diagnostics)


def _capacity(adversary: DistinguishingClass, rho: int | None) -> int:
    if rho is not None:
        return rho
    if adversary.universe.size <= get_settings().vc_universe_cap:
        return vc_dim(adversary).dimension
    logger.warning(
        "ground set of %d vertices is too large for exact VC; assuming capacity 1",
        adversary.universe.size,
    )
    return 1


def disjoint_pair_by_sampling(
    adversary: DistinguishingClass,
    epsilon,
    seed,
    max_retries: int | None = None,
    rho: int | None = None,
    sample_size: int | None = None,
    budget: int | None = None,
) -> DisjointPair:
    """
    Draws two uniform samples of the ground set until their empirical
    distributions have disjoint supports and adversary IPM below epsilon.

    Args:
        adversary (DistinguishingClass): Arity-1 class on the ground set.
        epsilon (float | Fraction): Target IPM bound.
        seed: Seed; attempt i uses the i-th spawned child stream.
        max_retries (int | None): Attempts before giving up; default from settings.
        rho (int | None): Capacity of the adversary; computed exactly when the
            ground set is within the VC cap.
        sample_size (int | None): Draws per sample, default ceil(max(rho, 1) / eps^2).
        budget (int | None): Overrides the configured enumeration budget.

    Raises:
        ConstructionError: When every attempt fails; diagnostics carry the best IPM seen.
    """
    if adversary.arity != 1:
        raise ValueError(f"adversary must have arity 1, got {adversary.arity}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    max_retries = get_settings().disjoint_max_retries if max_retries is None else max_retries
    rho = _capacity(adversary, rho)
    m = sample_size or ceil(max(rho, 1) / float(epsilon) ** 2)
    ground = Distribution.uniform(adversary.universe, exact=False)
    best = None
    disjoint_attempts = 0
    for attempt, child in enumerate(np.random.SeedSequence(seed).spawn(max_retries)):
        rng = np.random.default_rng(child)
        s1 = sample_from(ground, m, rng)
        s2 = sample_from(ground, m, rng)
        if set(s1.vertices) & set(s2.vertices):
            continue
        disjoint_attempts += 1
        q1, q2 = Distribution.empirical(s1), Distribution.empirical(s2)
        value = ipm_exact(adversary, q1, q2, budget).value
        best = value if best is None else min(best, value)
        logger.debug("sampling attempt %d: ipm %s", attempt, value)
        if value < epsilon:
            pair = DisjointPair(
                q1,
                q2,
                value,
                epsilon,
                "sampling",
                {"attempts": attempt + 1, "sample_size": m, "rho": rho},
            )
            return certify_disjoint_pair(pair, adversary, budget)
    raise ConstructionError(
        f"no certified disjoint pair after {max_retries} attempts; "
        "the ground set may be too small for this epsilon",
        {
            "attempts": max_retries,
            "disjoint_attempts": disjoint_attempts,
            "best_ipm": None if best is None else to_json_number(best),
            "sample_size": m,
        },
    )


def _column_matrix(adversary: DistinguishingClass) -> np.ndarray:
    """Adversary indicators closed under complement, plus both constants, as (S, D) 0/1 columns."""
    n = adversary.universe.size
    columns = np.zeros((n, len(adversary)), dtype=np.int8)
    for j, g in enumerate(adversary):
        columns[list(g.vertex_set), j] = 1
    closed = np.hstack(
        [columns, 1 - columns, np.zeros((n, 1), np.int8), np.ones((n, 1), np.int8)]
    )
    return np.unique(closed, axis=1)


def _exact_strategy(strategy: np.ndarray) -> list[Fraction]:
    rounded = [Fraction(float(x)).limit_denominator(STRATEGY_DENOMINATOR) for x in strategy]
    total = sum(rounded, Fraction(0))
    return [x / total for x in rounded]


def _condition(weights: list[Fraction], labels: np.ndarray, side: int):
    mass = sum((w for w, f in zip(weights, labels) if f == side), Fraction(0))
    if mass == 0:
        return None
    return tuple(w / mass if f == side else Fraction(0) for w, f in zip(weights, labels))


def _labelings(n: int, rng, random_tries: int):
    tried = set()
    half = np.zeros(n, dtype=np.int8)
    half[: n // 2] = 1
    for _ in range(random_tries):
        f = rng.permutation(half)
        key = f.tobytes()
        if key not in tried:
            tried.add(key)
            yield f
    if n <= EXHAUSTIVE_LABELING_LIMIT:
        for mask in range(1, 2**n - 1):
            f = np.array([mask >> i & 1 for i in range(n)], dtype=np.int8)
            if f.tobytes() not in tried:
                yield f


def disjoint_pair_by_game(
    adversary: DistinguishingClass,
    epsilon,
    rounds: int | None = None,
    seed=0,
    labelings: int = 8,
    rho: int | None = None,
    size_constant: float | None = None,
    budget: int | None = None,
) -> DisjointPair:
    """
    Builds a disjoint pair from an approximate minimax strategy.

    For a labeling f of the ground set the payoff of vertex v against
    distinguisher d is 1[d(v) != f(v)]. A row strategy q whose every column
    payoff is close to 1/2 makes q(. | f = 0) and q(. | f = 1) hard to separate.
    Random balanced labelings are tried first; ground sets of at most 20
    vertices then fall back to every non-constant labeling.

    Args:
        adversary (DistinguishingClass): Arity-1 class on the ground set.
        epsilon (float | Fraction): Target IPM bound.
        rounds (int | None): MW iterations, default ceil(10 ln S / eps^2).
        seed: Seed for the labeling order.
        labelings (int): Random balanced labelings to try first.
        rho (int | None): Capacity used in the ground-set size check.
        size_constant (float | None): The c of the size condition, default from settings.
        budget (int | None): Overrides the configured enumeration budget.

    Raises:
        ConstructionError: If no labeling yields a certified pair.
    """
    if adversary.arity != 1:
        raise ValueError(f"adversary must have arity 1, got {adversary.arity}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    n = adversary.universe.size
    if n < 2:
        raise ValueError("a disjoint pair needs a ground set of at least 2 vertices")
    rounds = default_rounds(n, float(epsilon)) if rounds is None else rounds
    c = get_settings().game_size_constant if size_constant is None else size_constant
    rho = _capacity(adversary, rho)
    scale = max(rho, 1) / float(epsilon) ** 2
    required = c * scale * log(scale) ** 2
    if n <= required:
        logger.warning(
            "ground set of %d vertices is below the minimax size condition %.1f; "
            "certification may fail",
            n,
            required,
        )
    columns = _column_matrix(adversary)
    if columns.shape[1] == 2**n:
        raise ConstructionError(
            "adversary shatters the ground set, so every disjoint pair has IPM 1",
            {"labelings_tried": 0, "columns": int(columns.shape[1])},
        )
    rng = make_rng(seed)
    best_value, best_ipm, tried = None, None, 0
    for f in _labelings(n, rng, labelings):
        tried += 1
        payoff = (columns != f[:, None]).astype(np.float64)
        solution = solve_zero_sum_game(payoff, rounds)
        best_value = solution.value if best_value is None else max(best_value, solution.value)
        weights = _exact_strategy(solution.strategy)
        probs1, probs2 = _condition(weights, f, 0), _condition(weights, f, 1)
        if probs1 is None or probs2 is None:
            continue
        q1 = Distribution(adversary.universe, probs1)
        q2 = Distribution(adversary.universe, probs2)
        value = ipm_exact(adversary, q1, q2, budget).value
        best_ipm = value if best_ipm is None else min(best_ipm, value)
        logger.debug("labeling %d: game value %.4f, ipm %s", tried, solution.value, value)
        if value < epsilon:
            pair = DisjointPair(
                q1,
                q2,
                value,
                epsilon,
                "game",
                {"labelings_tried": tried, "game_value": solution.value, "rounds": rounds},
            )
            return certify_disjoint_pair(pair, adversary, budget)
    raise ConstructionError(
        f"no labeling of the {n}-vertex ground set gave a certified pair",
        {
            "labelings_tried": tried,
            "best_game_value": best_value,
            "best_ipm": None if best_ipm is None else to_json_number(best_ipm),
            "rounds": rounds,
        },
    )
