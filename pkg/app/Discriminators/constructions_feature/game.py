import logging
from dataclasses import dataclass
from math import ceil, log, sqrt

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GameSolution:
    """
    Attributes:
        strategy (np.ndarray): Row player's mixed strategy (the best averaged one).
        value (float): min over columns of strategy @ payoff.
        rounds (int): Iterations run.
        eta (float): Step size used.
        history (tuple[tuple[int, float], ...]): (round, best value so far) checkpoints,
            non-decreasing in value.
    """

    strategy: np.ndarray
    value: float
    rounds: int
    eta: float
    history: tuple


def default_rounds(n_rows: int, epsilon: float) -> int:
    """ceil(10 ln(S) / eps^2) rounds for S row strategies."""
    return ceil(10 * log(max(n_rows, 2)) / epsilon**2)


def solve_zero_sum_game(payoff: np.ndarray, rounds: int, eta: float | None = None) -> GameSolution:
    """
    Approximates max_q min_d q @ payoff[:, d] by multiplicative weights.

    The row player reweights by exp(eta * payoff) against the column best
    response each round. The running average of the row strategies is
    evaluated at checkpoints and the best one is kept.

    Args:
        payoff (np.ndarray): (S, D) matrix with entries in [0, 1]; rows maximize.
        rounds (int): Number of MW iterations.
        eta (float | None): Step size, default sqrt(ln S / rounds).

    Returns:
        GameSolution: Best averaged strategy and its guaranteed value.
    """
    payoff = np.asarray(payoff, dtype=np.float64)
    if payoff.ndim != 2 or 0 in payoff.shape:
        raise ValueError(f"payoff must be a non-empty matrix, got shape {payoff.shape}")
    if rounds < 1:
        raise ValueError(f"rounds must be at least 1, got {rounds}")
    n_rows = payoff.shape[0]
    eta = sqrt(log(max(n_rows, 2)) / rounds) if eta is None else eta
    log_weights = np.zeros(n_rows)
    total = np.zeros(n_rows)
    checkpoint = max(1, rounds // 20)
    best_strategy, best_value = None, -np.inf
    history = []
    for t in range(1, rounds + 1):
        q = np.exp(log_weights - log_weights.max())
        q /= q.sum()
        total += q
        column = int(np.argmin(q @ payoff))
        log_weights += eta * payoff[:, column]
        if t % checkpoint == 0 or t == rounds:
            average = total / t
            value = float((average @ payoff).min())
            if value > best_value:
                best_strategy, best_value = average, value
            history.append((t, best_value))
    logger.debug("MW finished %d rounds, value %.6f", rounds, best_value)
    return GameSolution(best_strategy, best_value, rounds, eta, tuple(history))
