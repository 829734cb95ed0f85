"""
Symmetric k-ary hypergraphs and explicit distinguishing classes.

Edges are multisets stored as sorted tuples, so repeated vertices (self-loops)
are allowed everywhere. Membership is permutation-invariant: a query tuple is
sorted before it is looked up.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from math import factorial, prod

import numpy as np

from .universe import VertexUniverse, ensure_same_universe


def canonical(vertices) -> tuple[int, ...]:
    return tuple(sorted(int(v) for v in vertices))


def multiset_count(edge: tuple[int, ...]) -> int:
    """Number of ordered tuples that sort to `edge`, i.e. k! / prod(c!)."""
    return factorial(len(edge)) // prod(factorial(c) for c in Counter(edge).values())


@dataclass(frozen=True)
class Hypergraph:
    """
    A k-ary symmetric Boolean edge predicate over a vertex universe.

    Attributes:
        universe (VertexUniverse): Vertices the edges range over.
        arity (int): The k of the hypergraph, at least 1.
        edges (frozenset[tuple[int, ...]]): Canonical (sorted) k-tuples. Unsorted
            input tuples are canonicalized on construction.
    """

    universe: VertexUniverse
    arity: int
    edges: frozenset

    def __post_init__(self):
        if not isinstance(self.arity, int) or self.arity < 1:
            raise ValueError(f"arity must be a positive integer, got {self.arity!r}")
        edges = frozenset(canonical(e) for e in self.edges)
        for e in edges:
            if len(e) != self.arity:
                raise ValueError(f"edge {e} has length {len(e)}, expected {self.arity}")
            if e and (e[0] < 0 or e[-1] >= self.universe.size):
                raise ValueError(f"edge {e} leaves a universe of size {self.universe.size}")
        object.__setattr__(self, "edges", edges)

    def __contains__(self, vertices) -> bool:
        return canonical(vertices) in self.edges

    def __call__(self, *vertices) -> bool:
        return canonical(vertices) in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_array(self) -> np.ndarray:
        """(|E|, k) int64 array of edges in sorted order."""
        arr = np.array(self.sorted_edges, dtype=np.int64).reshape(len(self.edges), self.arity)
        arr.flags.writeable = False
        return arr

    @cached_property
    def multiplicities(self) -> np.ndarray:
        arr = np.array([multiset_count(e) for e in self.sorted_edges], dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        """For arity 1, the set of vertices the graph accepts."""
        return frozenset(e[0] for e in self.edges) if self.arity == 1 else frozenset()

    @classmethod
    def from_vertex_set(cls, universe: VertexUniverse, vertices) -> "Hypergraph":
        """The arity-1 indicator of a vertex set."""
        return cls(universe, 1, frozenset((universe.check_vertex(v),) for v in vertices))

    @classmethod
    def complete(cls, universe: VertexUniverse, arity: int) -> "Hypergraph":
        return cls(
            universe,
            arity,
            frozenset(combinations_with_replacement(range(universe.size), arity)),
        )

    @classmethod
    def empty(cls, universe: VertexUniverse, arity: int) -> "Hypergraph":
        return cls(universe, arity, frozenset())

    def complement(self) -> "Hypergraph":
        """The hypergraph whose edges are exactly the k-multisets this one lacks."""
        if self.arity == 1:
            return Hypergraph(
                self.universe,
                1,
                frozenset((v,) for v in range(self.universe.size) if (v,) not in self.edges),
            )
        complete = Hypergraph.complete(self.universe, self.arity)
        return Hypergraph(self.universe, self.arity, complete.edges - self.edges)

    def project(self, pins) -> "Hypergraph":
        return project(self, pins)

    def to_dict(self) -> dict:
        return {"arity": self.arity, "edges": [list(e) for e in self.sorted_edges]}


def project(g: Hypergraph, pins) -> Hypergraph:
    """
    Pins the first n coordinates of g to `pins`.

    Args:
        g (Hypergraph): An arity-k hypergraph.
        pins (Sequence[int]): n vertex ids with 1 <= n < k.

    Returns:
        Hypergraph: The arity-(k - n) hypergraph of multisets u with g(pins + u) = 1.

    Raises:
        ValueError: If n is out of range or a pin is not a vertex.
    """
    pins = [g.universe.check_vertex(int(v)) for v in pins]
    n = len(pins)
    if n < 1 or n >= g.arity:
        raise ValueError(f"cannot pin {n} vertices of an arity-{g.arity} hypergraph")
    pinned = Counter(pins)
    remaining = []
    for e in g.edges:
        rest = Counter(e)
        rest.subtract(pinned)
        if min(rest.values()) < 0:
            continue
        remaining.append(tuple(sorted(rest.elements())))
    return Hypergraph(g.universe, g.arity - n, frozenset(remaining))


@dataclass(frozen=True)
class DistinguishingClass:
    """
    A non-empty, duplicate-free tuple of same-arity hypergraphs on one universe.

    Use `DistinguishingClass.of` to build one from a list that may repeat graphs.
    """

    universe: VertexUniverse
    arity: int
    graphs: tuple

    def __post_init__(self):
        graphs = tuple(self.graphs)
        if not graphs:
            raise ValueError("a distinguishing class needs at least one graph")
        for g in graphs:
            if g.universe != self.universe:
                ensure_same_universe(self, g)
            if g.arity != self.arity:
                raise ValueError(f"class of arity {self.arity} cannot hold an arity-{g.arity} graph")
        if len({g.edges for g in graphs}) != len(graphs):
            raise ValueError("distinguishing class contains duplicate graphs")
        object.__setattr__(self, "graphs", graphs)

    @classmethod
    def of(cls, graphs) -> "DistinguishingClass":
        """Builds a class from graphs, dropping repeats while keeping first-seen order."""
        seen = set()
        kept = []
        for g in graphs:
            if g.edges not in seen:
                seen.add(g.edges)
                kept.append(g)
        if not kept:
            raise ValueError("a distinguishing class needs at least one graph")
        return cls(kept[0].universe, kept[0].arity, tuple(kept))

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, index: int) -> Hypergraph:
        return self.graphs[index]

    def project(self, pins) -> "DistinguishingClass":
        """The projected class, with duplicates collapsed in first-seen order."""
        return DistinguishingClass.of(project(g, pins) for g in self.graphs)

    @cached_property
    def fingerprint(self) -> tuple:
        """Order-free key identifying the class by its members' edge sets."""
        return (self.universe, self.arity, frozenset(g.edges for g in self.graphs))

    def to_dict(self) -> dict:
        return {
            "universe": self.universe.to_dict(),
            "arity": self.arity,
            "graphs": [{"edges": g.to_dict()["edges"]} for g in self.graphs],
        }
