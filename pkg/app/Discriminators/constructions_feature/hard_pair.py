from fractions import Fraction

from ..core_feature.distribution import Distribution, mixture
from ..errors import UniverseMismatchError
from .graphs import SubsetUniverse


def _on_subset_universe(su: SubsetUniverse, q: Distribution) -> Distribution:
    if q.universe == su.universe:
        return q
    if q.universe.size == su.base_size:
        return su.embed(q)
    raise UniverseMismatchError(
        f"distribution of size {q.universe.size} fits neither the ground set "
        f"({su.base_size}) nor the subset universe ({su.universe.size})"
    )


def hard_pair(su: SubsetUniverse, q1: Distribution, q2: Distribution, k: int):
    """
    Lifts a disjoint pair into the pair the subset hypergraph separates.

    With A the index set carrying q1, both sides get weight 1/k on v_A:
    p_i = (1/k) delta_{v_A} + (1 - 1/k) q_i. An edge needs v_A once and k - 1
    index vertices from A, so L_{p1} = (1 - 1/k)^(k-1) >= 1/e while L_{p2} = 0.

    Args:
        su (SubsetUniverse): Universe of the subset hypergraph.
        q1 (Distribution): Supported on index vertices; on the ground set or already embedded.
        q2 (Distribution): Supported on index vertices outside support(q1).
        k (int): Arity, at least 2.

    Returns:
        tuple[Distribution, Distribution]: (p1, p2), exact when q1 and q2 are.

    Raises:
        ValueError: If k < 2, a support leaves the index vertices, or the supports overlap.
    """
    if k < 2:
        raise ValueError(f"hard pair needs arity >= 2, got {k}")
    q1 = _on_subset_universe(su, q1)
    q2 = _on_subset_universe(su, q2)
    for name, q in (("q1", q1), ("q2", q2)):
        if any(v >= su.base_size for v in q.support):
            raise ValueError(f"{name} puts mass on subset vertices; its support is not an index set")
    if set(q1.support) & set(q2.support):
        raise ValueError("q1 and q2 must have disjoint supports")
    v_a = su.subset_vertex(su.mask_of(q1.support))
    weight = Fraction(1, k) if q1.exact and q2.exact else 1.0 / k
    return mixture(q1, v_a, weight), mixture(q2, v_a, weight)
