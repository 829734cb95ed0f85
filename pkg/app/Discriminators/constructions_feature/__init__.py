from .disjoint import (
    DisjointPair,
    certify_disjoint_pair,
    disjoint_pair_by_game,
    disjoint_pair_by_sampling,
)
from .game import GameSolution, default_rounds, solve_zero_sum_game
from .graphs import SubsetUniverse, collision_graph, subset_graph, subset_hypergraph
from .hard_pair import hard_pair

__all__ = [
    "DisjointPair",
    "GameSolution",
    "SubsetUniverse",
    "certify_disjoint_pair",
    "collision_graph",
    "default_rounds",
    "disjoint_pair_by_game",
    "disjoint_pair_by_sampling",
    "hard_pair",
    "solve_zero_sum_game",
    "subset_graph",
    "subset_hypergraph",
]
