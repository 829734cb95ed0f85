"""
Explicit separating graphs: the collision graph and the subset (hyper)graphs.

A SubsetUniverse on base size l has l index vertices (ids 0..l-1) followed by
one subset vertex per bitmask A of {0..l-1} (id l + A). An edge of the subset
hypergraph joins v_A to k - 1 index vertices taken from A.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ..core_feature.distribution import Distribution
from ..core_feature.hypergraph import DistinguishingClass, Hypergraph
from ..core_feature.universe import VertexUniverse
from ..errors import UniverseMismatchError

MAX_BASE_SIZE = 16


def collision_graph(u: VertexUniverse, k: int) -> Hypergraph:
    """All-equal k-tuples; L_p of this graph is the k-way collision probability sum_v p(v)^k."""
    if k < 2:
        raise ValueError(f"collision graph needs arity >= 2, got {k}")
    return Hypergraph(u, k, frozenset((v,) * k for v in range(u.size)))


@dataclass(frozen=True)
class SubsetUniverse:
    """
    Index vertices plus one vertex per subset of the index set.

    Attributes:
        base_size (int): l, the number of index vertices.
        universe (VertexUniverse): Size l + 2^l. Index vertex i is labelled "v<i>",
            subset vertex l + A is labelled "A=<bits>" with bit i (read right to left)
            set when i is in A.
    """

    base_size: int
    universe: VertexUniverse = field(init=False, repr=False)

    def __post_init__(self):
        ell = self.base_size
        if not isinstance(ell, int) or not 1 <= ell <= MAX_BASE_SIZE:
            raise ValueError(f"base size must be an integer in [1, {MAX_BASE_SIZE}], got {ell!r}")
        labels = [f"v{i}" for i in range(ell)] + [f"A={mask:0{ell}b}" for mask in range(2**ell)]
        object.__setattr__(self, "universe", VertexUniverse(ell + 2**ell, tuple(labels)))

    @property
    def index_vertices(self) -> range:
        return range(self.base_size)

    def subset_vertex(self, mask: int) -> int:
        if not 0 <= mask < 2**self.base_size:
            raise ValueError(f"bitmask {mask} is not a subset of {self.base_size} indices")
        return self.base_size + mask

    def subset_of(self, vertex: int) -> int:
        """Decodes a subset vertex back to its bitmask."""
        vertex = self.universe.check_vertex(vertex)
        if vertex < self.base_size:
            raise ValueError(f"vertex {vertex} is an index vertex, not a subset vertex")
        return int(self.universe.labels[vertex][2:], 2)

    def mask_of(self, vertices) -> int:
        """Bitmask of a set of index vertices."""
        mask = 0
        for v in vertices:
            if not 0 <= v < self.base_size:
                raise ValueError(f"vertex {v} is not an index vertex")
            mask |= 1 << v
        return mask

    def _check_ground(self, obj):
        if obj.universe.size != self.base_size:
            raise UniverseMismatchError(
                f"ground set has {obj.universe.size} vertices, index set has {self.base_size}"
            )

    def embed(self, q: Distribution) -> Distribution:
        """Places a distribution on the ground set {0..l-1} onto the index vertices."""
        self._check_ground(q)
        zero = q.probs[0] * 0
        return Distribution(self.universe, q.probs + (zero,) * 2**self.base_size)

    def lift_class(self, adversary: DistinguishingClass) -> DistinguishingClass:
        """Extends an arity-1 class on the ground set with no edges on subset vertices."""
        self._check_ground(adversary)
        if adversary.arity != 1:
            raise ValueError(f"only arity-1 adversaries can be lifted, got arity {adversary.arity}")
        return DistinguishingClass(
            self.universe,
            1,
            tuple(Hypergraph.from_vertex_set(self.universe, g.vertex_set) for g in adversary),
        )


def subset_hypergraph(su: SubsetUniverse, k: int) -> Hypergraph:
    """
    Edges (v_{i1}, ..., v_{i(k-1)}, v_A) for every (k-1)-multiset {i1..} inside A.

    Raises:
        ValueError: If k < 2.
    """
    if k < 2:
        raise ValueError(f"subset hypergraph needs arity >= 2, got {k}")
    ell = su.base_size
    edges = []
    for mask in range(1, 2**ell):
        members = [i for i in range(ell) if mask >> i & 1]
        a = ell + mask
        edges.extend(e + (a,) for e in combinations_with_replacement(members, k - 1))
    return Hypergraph(su.universe, k, frozenset(edges))


def subset_graph(su: SubsetUniverse) -> Hypergraph:
    """The bipartite graph joining v_i to v_A whenever i is in A."""
    return subset_hypergraph(su, 2)
