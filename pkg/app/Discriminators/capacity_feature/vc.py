"""
Exact VC and graph-VC dimension of explicit classes.

Arity-1 members are handled as integer bitmasks over the universe. The search
walks subset sizes upward and stops at the first size with no shattered set;
shattering is downward-closed, so nothing larger can be shattered either.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ..config import get_settings
from ..core_feature.hypergraph import DistinguishingClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VcReport:
    """
    Attributes:
        dimension (int): The (graph) VC dimension.
        witness (tuple[int, ...]): A shattered vertex set of that size, sorted.
        pins (tuple[int, ...]): For arity k > 1, the k - 1 pinned vertices whose
            fully projected class attains the dimension; empty for arity 1.
    """

    dimension: int
    witness: tuple = ()
    pins: tuple = field(default=())

    def to_dict(self) -> dict:
        return {"dimension": self.dimension, "witness": list(self.witness), "pins": list(self.pins)}


def _masks(c: DistinguishingClass) -> list[int]:
    return [sum(1 << v for v in g.vertex_set) for g in c]


def _set_mask(vertices) -> int:
    return sum(1 << v for v in vertices)


def _check_searchable(c: DistinguishingClass, cap: int | None):
    cap = get_settings().vc_universe_cap if cap is None else cap
    if c.universe.size > cap:
        raise ValueError(
            f"exact VC search is capped at {cap} vertices, class has {c.universe.size}"
        )


def is_shattered(c: DistinguishingClass, vertices) -> bool:
    """True when the arity-1 class realizes all 2^|T| labelings of T."""
    vertices = tuple(vertices)
    return restriction_count(c, vertices) == 2 ** len(set(vertices))


def restriction_count(c: DistinguishingClass, vertices) -> int:
    """
    Growth function at T: the number of distinct restrictions of an arity-1 class to T.
    """
    if c.arity != 1:
        raise ValueError(f"restrictions are defined for arity-1 classes, got arity {c.arity}")
    t = _set_mask(vertices)
    return len({m & t for m in _masks(c)})


def vc_dim(c: DistinguishingClass, cap: int | None = None) -> VcReport:
    """
    Computes the exact VC dimension of an arity-1 class.

    Args:
        c (DistinguishingClass): Class of arity 1.
        cap (int | None): Largest universe accepted; defaults to the configured cap.

    Returns:
        VcReport: Dimension and a shattered witness of that size.

    Raises:
        ValueError: If the arity is not 1 or the universe exceeds the cap.
    """
    if c.arity != 1:
        raise ValueError(f"vc_dim needs an arity-1 class, got arity {c.arity}")
    _check_searchable(c, cap)
    masks = set(_masks(c))
    union = 0
    inter = (1 << c.universe.size) - 1
    for m in masks:
        union |= m
        inter &= m
    # only vertices some members take and some drop can sit in a shattered set
    free = [v for v in range(c.universe.size) if (union & ~inter) >> v & 1]
    witness = ()
    for size in range(1, len(free) + 1):
        if len(masks) < 2**size:
            break
        found = None
        for subset in combinations(free, size):
            t = _set_mask(subset)
            if len({m & t for m in masks}) == 2**size:
                found = subset
                break
        if found is None:
            break
        witness = found
    logger.debug("vc_dim over %d members: %d", len(masks), len(witness))
    return VcReport(len(witness), tuple(witness))


def graph_vc_dim(c: DistinguishingClass, cap: int | None = None, _memo=None) -> VcReport:
    """
    Computes the graph VC dimension by pinning one vertex per level.

    gVC(G) = VC(G) for arity 1, otherwise max over v of gVC(G_v). Projected
    classes are memoized by their edge-set fingerprint. Ties go to the lowest
    pinned vertex.

    Returns:
        VcReport: Dimension, shattered witness and the pin sequence attaining it.
    """
    _check_searchable(c, cap)
    if c.arity == 1:
        return vc_dim(c, cap)
    memo = {} if _memo is None else _memo
    best = None
    for v in range(c.universe.size):
        projected = c.project((v,))
        key = projected.fingerprint
        if key not in memo:
            memo[key] = graph_vc_dim(projected, cap, memo)
        sub = memo[key]
        if best is None or sub.dimension > best.dimension:
            best = VcReport(sub.dimension, sub.witness, (v, *sub.pins))
    return best


def sauer_bound(dimension: int, m: int) -> int:
    """Sauer's growth bound sum_{i <= d} C(m, i)."""
    if m < 1 or dimension < 0:
        raise ValueError(f"sauer_bound needs m >= 1 and dimension >= 0, got {m}, {dimension}")
    return sum(comb(m, i) for i in range(min(dimension, m) + 1))
