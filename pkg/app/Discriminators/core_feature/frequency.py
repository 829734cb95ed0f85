"""
Edge frequencies: the probability that k IID draws form an edge.

Both kernels iterate over the canonical edges of the hypergraph and weight each
multiset edge by the number of ordered tuples that sort to it. The enumeration
budget is charged for the tuples the definition ranges over: |support(p)|^k for
the true frequency and |distinct(S)|^k for the empirical one.
"""

import logging
from fractions import Fraction
from math import prod

import numpy as np

from ..config import get_settings
from ..errors import BudgetExceededError
from .distribution import Distribution, Sample
from .hypergraph import Hypergraph
from .universe import ensure_same_universe

logger = logging.getLogger(__name__)

INT64_SAFE = 2**62


def _budget(budget: int | None) -> int:
    return get_settings().enumeration_budget if budget is None else budget


def _edges_within(g: Hypergraph, allowed: np.ndarray):
    """Rows of g's edge array whose vertices all satisfy the boolean mask `allowed`."""
    if len(g.edges) == 0:
        return g.edge_array, g.multiplicities
    keep = allowed[g.edge_array].all(axis=1)
    return g.edge_array[keep], g.multiplicities[keep]


def edge_freq_true(g: Hypergraph, p: Distribution, budget: int | None = None):
    """
    Computes L_p(g), the chance that k IID draws from p form an edge of g.

    Args:
        g (Hypergraph): Arity-k hypergraph.
        p (Distribution): Exact mode gives a Fraction, float mode a float.
        budget (int | None): Overrides the configured enumeration budget.

    Returns:
        Fraction | float: A value in [0, 1].

    Raises:
        UniverseMismatchError: If g and p live on different universes.
        BudgetExceededError: If |support(p)|^k exceeds the budget.
    """
    ensure_same_universe(g, p)
    required = len(p.support) ** g.arity
    if required > _budget(budget):
        raise BudgetExceededError(required, _budget(budget), "edge_freq_empirical")
    on_support = np.zeros(p.universe.size, dtype=bool)
    on_support[list(p.support)] = True
    edges, mults = _edges_within(g, on_support)
    if not p.exact:
        if len(edges) == 0:
            return 0.0
        return float(np.dot(p.array[edges].prod(axis=1), mults))
    probs = p.probs
    total = Fraction(0)
    for edge, mult in zip(edges.tolist(), mults.tolist()):
        total += mult * prod((probs[v] for v in edge), start=Fraction(1))
    return total


def edge_count_empirical(g: Hypergraph, s: Sample, budget: int | None = None) -> int:
    """
    Counts the ordered k-tuples of sample positions whose vertices form an edge.

    Works on the count profile of the sample, so positions holding the same
    vertex are still distinguished.
    """
    ensure_same_universe(g, s)
    counts = s.counts
    distinct = int(np.count_nonzero(counts))
    required = distinct**g.arity
    if required > _budget(budget):
        raise BudgetExceededError(required, _budget(budget), "ipm_sampled on a smaller sample")
    edges, mults = _edges_within(g, counts > 0)
    if len(edges) == 0:
        return 0
    if len(s) ** g.arity < INT64_SAFE:
        return int(np.dot(counts[edges].prod(axis=1), mults))
    # exact big-integer path when the products could overflow int64
    ints = counts.tolist()
    return sum(
        mult * prod(ints[v] for v in edge) for edge, mult in zip(edges.tolist(), mults.tolist())
    )


def edge_freq_empirical(g: Hypergraph, s: Sample, budget: int | None = None) -> Fraction:
    """
    Computes L_S(g) exactly: edge tuples over S^k divided by m^k.

    Raises:
        UniverseMismatchError: If g and s live on different universes.
        BudgetExceededError: If |distinct(S)|^k exceeds the budget.
    """
    return Fraction(edge_count_empirical(g, s, budget), len(s) ** g.arity)
