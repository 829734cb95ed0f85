"""
Payload builders shared by the command line and the HTTP API.

Each function takes plain arguments and returns a JSON-ready dict together
with whether every checked inequality held.
"""

import logging

import numpy as np

from .constructions_feature.disjoint import disjoint_pair_by_game, disjoint_pair_by_sampling
from .constructions_feature.graphs import (
    SubsetUniverse,
    collision_graph,
    subset_graph,
    subset_hypergraph,
)
from .constructions_feature.hard_pair import hard_pair
from .core_feature.distribution import Distribution, sample_from
from .core_feature.hypergraph import Hypergraph
from .core_feature.universe import VertexUniverse
from .experiments_feature.experiments import ADVERSARIES
from .vandermonde_feature.vandermonde import random_grid_checks, spectrum

logger = logging.getLogger(__name__)

CONSTRUCT_MODES = ("collision", "subset-graph", "subset-hypergraph", "disjoint-pair", "hard-pair")


def _graph_payload(g: Hypergraph) -> dict:
    return {**g.to_dict(), "universe": g.universe.to_dict()}


def construct_payload(
    mode: str,
    ell: int = 4,
    k: int = 2,
    epsilon: float = 0.2,
    seed: int = 0,
    method: str = "game",
    adversary: str = "singletons",
    n: int | None = None,
) -> dict:
    """
    Builds one of the named constructions.

    `collision` lives on n vertices (ell when n is omitted); the subset modes on
    the l + 2^l universe; `disjoint-pair` and `hard-pair` run `method` against
    the named adversary on {0..l-1}.

    Raises:
        ValueError: On an unknown mode, method or adversary.
    """
    if mode == "collision":
        return _graph_payload(collision_graph(VertexUniverse(n or ell), k))
    if mode == "subset-graph":
        return _graph_payload(subset_graph(SubsetUniverse(ell)))
    if mode == "subset-hypergraph":
        return _graph_payload(subset_hypergraph(SubsetUniverse(ell), k))
    if mode not in CONSTRUCT_MODES:
        raise ValueError(f"unknown construction {mode!r}; choose from {list(CONSTRUCT_MODES)}")
    if adversary not in ADVERSARIES:
        raise ValueError(f"unknown adversary {adversary!r}; choose from {sorted(ADVERSARIES)}")
    adversary_class = ADVERSARIES[adversary](VertexUniverse(ell))
    if method == "game":
        pair = disjoint_pair_by_game(adversary_class, epsilon, seed=seed)
    elif method == "sampling":
        pair = disjoint_pair_by_sampling(adversary_class, epsilon, seed)
    else:
        raise ValueError(f"method must be 'game' or 'sampling', got {method!r}")
    if mode == "disjoint-pair":
        return pair.to_dict()
    p1, p2 = hard_pair(SubsetUniverse(ell), pair.q1, pair.q2, k)
    return {"pair": pair.to_dict(), "p1": p1.to_dict(), "p2": p2.to_dict(), "k": k}


def vandermonde_payload(k: int, trials: int = 1000, seed: int = 0) -> tuple[dict, bool]:
    """Spectrum report for V_k plus `trials` random grid-dominance checks."""
    report = spectrum(k)
    checks = random_grid_checks(k, trials, seed)
    failures = sum(1 for c in checks if not c.holds)
    payload = {
        "spectrum": report.to_dict(),
        "grid_dominance": {"trials": len(checks), "failures": failures, "seed": seed},
    }
    return payload, report.holds and failures == 0


def draw_pair(p1: Distribution, p2: Distribution, m: int, seed: int):
    """Two i.i.d. samples of size m from one seeded Generator, p1's first."""
    if m < 1:
        raise ValueError(f"sample size must be positive, got {m}")
    rng = np.random.default_rng(seed)
    return sample_from(p1, m, rng), sample_from(p2, m, rng)
