from .classes import (
    all_hypergraphs_class,
    constant_class,
    power_set_class,
    random_class,
    singleton_class,
    threshold_class,
)
from .distribution import (
    Distribution,
    Sample,
    make_rng,
    mixture,
    sample_from,
    to_exact,
    tv_distance,
)
from .frequency import edge_count_empirical, edge_freq_empirical, edge_freq_true
from .hypergraph import DistinguishingClass, Hypergraph, canonical, project
from .universe import VertexUniverse, ensure_same_universe

__all__ = [
    "DistinguishingClass",
    "Distribution",
    "Hypergraph",
    "Sample",
    "VertexUniverse",
    "all_hypergraphs_class",
    "canonical",
    "constant_class",
    "edge_count_empirical",
    "edge_freq_empirical",
    "edge_freq_true",
    "ensure_same_universe",
    "make_rng",
    "mixture",
    "power_set_class",
    "project",
    "random_class",
    "sample_from",
    "singleton_class",
    "threshold_class",
    "to_exact",
    "tv_distance",
]
