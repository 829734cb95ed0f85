import os
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import strategies as st

from Discriminators.core_feature.distribution import Distribution
from Discriminators.core_feature.hypergraph import DistinguishingClass, Hypergraph
from Discriminators.core_feature.universe import VertexUniverse


@pytest.fixture(autouse=True, scope="session")
def clean_env():
    """Keeps a developer's HYPERDISC_* variables out of the whole run."""
    with pytest.MonkeyPatch.context() as mp:
        for name in list(os.environ):
            if name.startswith("HYPERDISC_"):
                mp.delenv(name, raising=False)
        yield


@pytest.fixture
def u4():
    return VertexUniverse(4)


@pytest.fixture
def uniform4(u4):
    return Distribution.uniform(u4)


@pytest.fixture
def collision2(u4):
    """Arity-2 self-loop graph on four vertices."""
    return Hypergraph(u4, 2, frozenset((v, v) for v in range(4)))


def exact_dist(universe: VertexUniverse, weights) -> Distribution:
    return Distribution.from_weights(universe, [Fraction(w) for w in weights])


def tuple_vc(c: DistinguishingClass) -> int:
    """
    Brute-force VC dimension of a class seen as a family of edge sets over the
    k-multisets of its universe.
    """
    edge_sets = {g.edges for g in c}
    domain = sorted(set().union(*edge_sets)) if edge_sets else []
    best = 0
    for size in range(1, len(domain) + 1):
        if len(edge_sets) < 2**size:
            break
        if not any(
            len({frozenset(e for e in subset if e in edges) for edges in edge_sets}) == 2**size
            for subset in combinations(domain, size)
        ):
            break
        best = size
    return best


@st.composite
def exact_distributions(draw, size: int, min_support: int = 1):
    """Exact distributions on VertexUniverse(size) with small integer weights."""
    weights = draw(st.lists(st.integers(0, 6), min_size=size, max_size=size))
    if sum(1 for w in weights if w) < min_support:
        weights = [w + 1 for w in weights]
    return exact_dist(VertexUniverse(size), weights)


@st.composite
def hypergraphs(draw, universe: VertexUniverse, arity: int):
    multisets = list(combinations_with_replacement(range(universe.size), arity))
    keep = draw(st.lists(st.booleans(), min_size=len(multisets), max_size=len(multisets)))
    return Hypergraph(universe, arity, frozenset(e for e, k in zip(multisets, keep) if k))
