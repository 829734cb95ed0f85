"""Turning an arity-1 discriminator into a proper predictor for balanced labels."""

import logging
from fractions import Fraction

from ..core_feature.distribution import Distribution, Sample
from ..core_feature.frequency import edge_freq_true
from ..core_feature.hypergraph import DistinguishingClass, Hypergraph
from .erm import erm_discriminate

logger = logging.getLogger(__name__)


def empirical_error(h: Hypergraph, labeled) -> Fraction:
    """Fraction of (vertex, label) pairs where h(v) disagrees with label in {-1, +1}."""
    labeled = list(labeled)
    if not labeled:
        raise ValueError("empirical error needs at least one labeled vertex")
    wrong = sum(1 for v, y in labeled if (1 if h(v) else -1) != y)
    return Fraction(wrong, len(labeled))


def predictor_error(h: Hypergraph, p_pos: Distribution, p_neg: Distribution, budget=None):
    """
    Error of h under the balanced mixture with class-conditionals p_pos and p_neg.

    Equals 1/2 (1 - L_{p_pos}(h)) + 1/2 L_{p_neg}(h).
    """
    if h.arity != 1:
        raise ValueError(f"predictors are arity-1 graphs, got arity {h.arity}")
    half = Fraction(1, 2) if p_pos.exact and p_neg.exact else 0.5
    return half * (1 - edge_freq_true(h, p_pos, budget)) + half * edge_freq_true(h, p_neg, budget)


def predictor_from_discriminator(c: DistinguishingClass, labeled, budget=None) -> Hypergraph:
    """
    Splits labeled data by label, discriminates the two halves, and orients the
    result.

    Args:
        c (DistinguishingClass): Arity-1 class.
        labeled (Iterable[tuple[int, int]]): (vertex, label) pairs, label in {-1, +1}.

    Returns:
        Hypergraph: The ERM graph or its complement, whichever errs less on
        `labeled` (the graph itself on ties).

    Raises:
        ValueError: If the class is not arity 1, a label is not +-1, or only one
            label occurs.
    """
    if c.arity != 1:
        raise ValueError(f"predictor_from_discriminator needs an arity-1 class, got arity {c.arity}")
    labeled = [(int(v), int(y)) for v, y in labeled]
    if any(y not in (-1, 1) for _, y in labeled):
        raise ValueError("labels must be -1 or +1")
    positives = [v for v, y in labeled if y == 1]
    negatives = [v for v, y in labeled if y == -1]
    if not positives or not negatives:
        raise ValueError("labeled data needs both labels; the balanced-label contract is violated")
    outcome = erm_discriminate(
        c, Sample(c.universe, positives), Sample(c.universe, negatives), budget=budget
    )
    g = outcome.graph
    flipped = g.complement()
    if empirical_error(flipped, labeled) < empirical_error(g, labeled):
        logger.debug("predictor uses the complement of member %d", outcome.index)
        return flipped
    return g
