"""Builders for the standard distinguishing classes used by tests, CLI and experiments."""

from itertools import combinations_with_replacement

from .distribution import make_rng
from .hypergraph import DistinguishingClass, Hypergraph
from .universe import VertexUniverse

MAX_POWER_SET_SIZE = 20
MAX_ALL_HYPERGRAPH_MULTISETS = 16


def power_set_class(universe: VertexUniverse) -> DistinguishingClass:
    """All 2^n vertex subsets as arity-1 graphs, in bitmask order."""
    n = universe.size
    if n > MAX_POWER_SET_SIZE:
        raise ValueError(f"power set of {n} vertices is too large to list (cap {MAX_POWER_SET_SIZE})")
    return DistinguishingClass(
        universe,
        1,
        tuple(
            Hypergraph.from_vertex_set(universe, [v for v in range(n) if mask >> v & 1])
            for mask in range(2**n)
        ),
    )


def singleton_class(universe: VertexUniverse, over=None) -> DistinguishingClass:
    """The indicators 1_{v} for every v in `over` (default: all vertices)."""
    vertices = range(universe.size) if over is None else over
    return DistinguishingClass.of(Hypergraph.from_vertex_set(universe, [v]) for v in vertices)


def threshold_class(universe: VertexUniverse) -> DistinguishingClass:
    """The prefixes {v : v < t} for t = 0..n, a VC-1 class."""
    return DistinguishingClass(
        universe,
        1,
        tuple(
            Hypergraph.from_vertex_set(universe, range(t)) for t in range(universe.size + 1)
        ),
    )


def constant_class(universe: VertexUniverse, arity: int = 1, values=(0, 1)) -> DistinguishingClass:
    """The constant graphs named by `values` (0 for empty, 1 for complete)."""
    return DistinguishingClass.of(
        Hypergraph.complete(universe, arity) if v else Hypergraph.empty(universe, arity)
        for v in values
    )


def all_hypergraphs_class(universe: VertexUniverse, arity: int) -> DistinguishingClass:
    """Every arity-k hypergraph on a small universe, ordered by edge bitmask."""
    multisets = list(combinations_with_replacement(range(universe.size), arity))
    if len(multisets) > MAX_ALL_HYPERGRAPH_MULTISETS:
        raise ValueError(
            f"{len(multisets)} candidate edges give too many hypergraphs to list "
            f"(cap {MAX_ALL_HYPERGRAPH_MULTISETS})"
        )
    return DistinguishingClass(
        universe,
        arity,
        tuple(
            Hypergraph(
                universe,
                arity,
                frozenset(e for i, e in enumerate(multisets) if mask >> i & 1),
            )
            for mask in range(2 ** len(multisets))
        ),
    )


def random_class(
    universe: VertexUniverse,
    arity: int,
    size: int,
    seed,
    density: float = 0.5,
) -> DistinguishingClass:
    """
    Draws `size` random hypergraphs, each edge kept independently with `density`.

    Repeats are collapsed, so the class can end up smaller than `size`.

    Args:
        universe (VertexUniverse): Vertex universe.
        arity (int): Arity of every member.
        size (int): Number of draws, at least 1.
        seed (int | np.random.Generator): RNG seed.
        density (float): Per-edge inclusion probability.
    """
    if size < 1:
        raise ValueError(f"class size must be at least 1, got {size}")
    rng = make_rng(seed)
    multisets = list(combinations_with_replacement(range(universe.size), arity))
    graphs = []
    for _ in range(size):
        keep = rng.random(len(multisets)) < density
        graphs.append(
            Hypergraph(universe, arity, frozenset(e for e, k in zip(multisets, keep) if k))
        )
    return DistinguishingClass.of(graphs)
