"""
Mixture lifts and the pinned-difference decomposition.

Lifting both distributions toward a point mass, p^q = q * delta_v + (1 - q) * p,
turns the k-ary edge frequency into a binomial mixture of pinned frequencies:

    L_{p^q}(g) = sum_n C(k, n) q^n (1 - q)^(k - n) E_{u ~ p^(k-n)} g(v x n, u)

so IPM_G(p1^q, p2^q) can be read off the pinned differences delta_n.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from ..core_feature.distribution import Distribution, is_exact_number, mixture
from ..core_feature.frequency import edge_freq_true
from ..core_feature.hypergraph import DistinguishingClass, Hypergraph, project
from ..core_feature.universe import ensure_same_universe
from .ipm import ipm_exact, to_json_number

logger = logging.getLogger(__name__)


def delta_n(g: Hypergraph, v: int, n: int, p1: Distribution, p2: Distribution, budget=None):
    """
    Difference of the pinned edge expectations with n slots fixed at v.

    Args:
        g (Hypergraph): Arity-k hypergraph.
        v (int): Pinned vertex.
        n (int): Number of pinned slots, 0 <= n <= k.
        p1 (Distribution): Distribution of the free slots, first side.
        p2 (Distribution): Distribution of the free slots, second side.

    Returns:
        Fraction | float: E_{p1^(k-n)} g(v x n, u) - E_{p2^(k-n)} g(v x n, u); 0 when n = k.

    Raises:
        ValueError: If n is outside [0, k].
    """
    ensure_same_universe(g, p1, p2)
    v = g.universe.check_vertex(v)
    if not 0 <= n <= g.arity:
        raise ValueError(f"cannot pin {n} slots of an arity-{g.arity} hypergraph")
    exact = p1.exact and p2.exact
    if n == g.arity:
        return Fraction(0) if exact else 0.0
    h = g if n == 0 else project(g, (v,) * n)
    return edge_freq_true(h, p1, budget) - edge_freq_true(h, p2, budget)


def _binomial_weights(k: int, q, exact: bool):
    q = Fraction(q) if exact else float(q)
    return [comb(k, n) * q**n * (1 - q) ** (k - n) for n in range(k + 1)]


class MixtureExpansion(NamedTuple):
    lhs: object
    rhs: object


def mixture_ipm_expansion(
    c: DistinguishingClass,
    v: int,
    q,
    p1: Distribution,
    p2: Distribution,
    budget=None,
) -> MixtureExpansion:
    """
    Evaluates both sides of the binomial expansion of the lifted IPM.

    Returns:
        MixtureExpansion: `lhs` is IPM_c(p1^q, p2^q) computed on the lifted
        distributions; `rhs` is max_g |sum_n C(k,n) q^n (1-q)^(k-n) delta_n(g)|.
        Both are exact Fractions when p1, p2 and q are exact.
    """
    ensure_same_universe(c, p1, p2)
    exact = p1.exact and p2.exact and is_exact_number(q)
    lhs = ipm_exact(c, mixture(p1, v, q), mixture(p2, v, q), budget).value
    weights = _binomial_weights(c.arity, q, exact)
    rhs = max(
        abs(sum(w * delta_n(g, v, n, p1, p2, budget) for n, w in enumerate(weights)))
        for g in c
    )
    return MixtureExpansion(lhs, rhs)


@dataclass(frozen=True)
class GridSweep:
    """
    IPM of the lifted pair at every grid weight q = j/k, against the lemma floor.

    Attributes:
        grid (tuple[Fraction, ...]): q = 0, 1/k, ..., 1.
        lifted_ipm (tuple): IPM_G(p1^q, p2^q) per grid weight.
        projected_ipm (Fraction | float): IPM_{G_v}(p1, p2) of the once-pinned class.
        floor (Fraction | float): projected_ipm * 2^(-3k^2).
    """

    grid: tuple
    lifted_ipm: tuple
    projected_ipm: object
    floor: object

    @property
    def best(self):
        return max(self.lifted_ipm)

    @property
    def holds(self) -> bool:
        return self.best >= self.floor

    def to_dict(self) -> dict:
        return {
            "grid": [str(q) for q in self.grid],
            "lifted_ipm": [to_json_number(x) for x in self.lifted_ipm],
            "projected_ipm": to_json_number(self.projected_ipm),
            "floor": to_json_number(self.floor),
            "holds": self.holds,
        }


def mixture_grid_sweep(
    c: DistinguishingClass,
    v: int,
    p1: Distribution,
    p2: Distribution,
    budget=None,
) -> GridSweep:
    """
    Sweeps q over {0, 1/k, ..., 1} and compares the best lifted IPM with the floor
    IPM_{G_v}(p1, p2) / 2^(3k^2) that at least one grid point must reach.

    For k = 1 the pinned class is constant, so the projected IPM is 0.
    """
    ensure_same_universe(c, p1, p2)
    v = c.universe.check_vertex(v)
    k = c.arity
    exact = p1.exact and p2.exact
    grid = tuple(Fraction(j, k) for j in range(k + 1))
    lifted = tuple(
        ipm_exact(c, mixture(p1, v, q), mixture(p2, v, q), budget).value
        for q in grid
    )
    if k == 1:
        projected = Fraction(0) if exact else 0.0
    else:
        projected = ipm_exact(c.project((v,)), p1, p2, budget).value
    scale = Fraction(1, 2 ** (3 * k * k))
    floor = projected * scale if exact else float(projected) * float(scale)
    logger.debug("grid sweep k=%d best=%s floor=%s", k, max(lifted), floor)
    return GridSweep(grid, lifted, projected, floor)
