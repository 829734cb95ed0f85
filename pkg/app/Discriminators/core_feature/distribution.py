"""
Distributions and samples over a finite vertex universe.

Two numeric modes are supported. A distribution whose entries are all
`fractions.Fraction` (or int) is exact, and every kernel that consumes it keeps
exact rational arithmetic. A distribution with any float entry is in float mode
and the kernels switch to numpy.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational

import numpy as np

from .universe import VertexUniverse, ensure_same_universe

FLOAT_TOLERANCE = 1e-12


def is_exact_number(x) -> bool:
    return isinstance(x, Rational) and not isinstance(x, bool)


def to_exact(x) -> Fraction:
    """Converts an int, Fraction, float or "a/b" string to a Fraction without rounding."""
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def make_rng(seed) -> np.random.Generator:
    """
    Returns a numpy Generator for `seed`.

    Args:
        seed (int | np.random.SeedSequence | np.random.Generator): A Generator is
            passed through untouched, so callers that own RNG state keep it.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class Distribution:
    """
    A probability vector over the vertices of a universe.

    Attributes:
        universe (VertexUniverse): The universe the distribution lives on.
        probs (tuple): One non-negative entry per vertex. All-rational entries
            keep the distribution exact; any float entry switches it to float mode.
    """

    universe: VertexUniverse
    probs: tuple

    def __post_init__(self):
        probs = tuple(self.probs)
        if len(probs) != self.universe.size:
            raise ValueError(
                f"distribution has {len(probs)} entries for a universe of size {self.universe.size}"
            )
        if all(is_exact_number(x) for x in probs):
            probs = tuple(Fraction(x) for x in probs)
            total = sum(probs, Fraction(0))
            if total != 1:
                raise ValueError(f"probabilities sum to {total}, expected exactly 1")
        else:
            probs = tuple(float(x) for x in probs)
            total = float(np.sum(probs))
            if abs(total - 1.0) > FLOAT_TOLERANCE:
                raise ValueError(f"probabilities sum to {total!r}, expected 1 within 1e-12")
        if any(x < 0 for x in probs):
            raise ValueError("probabilities must be non-negative")
        object.__setattr__(self, "probs", probs)

    @property
    def exact(self) -> bool:
        return isinstance(self.probs[0], Fraction)

    def __getitem__(self, vertex: int):
        return self.probs[vertex]

    @cached_property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, x in enumerate(self.probs) if x > 0)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array([float(x) for x in self.probs], dtype=np.float64)
        arr.flags.writeable = False
        return arr

    def as_exact(self) -> "Distribution":
        """Returns the exact-mode copy; float entries are converted exactly and renormalized."""
        if self.exact:
            return self
        values = [Fraction(x) for x in self.probs]
        total = sum(values, Fraction(0))
        return Distribution(self.universe, tuple(x / total for x in values))

    def as_float(self) -> "Distribution":
        if not self.exact:
            return self
        return Distribution(self.universe, tuple(float(x) for x in self.probs))

    def to_dict(self) -> dict:
        probs = [str(x) for x in self.probs] if self.exact else list(self.probs)
        return {"universe": self.universe.to_dict(), "probs": probs}

    @classmethod
    def uniform(cls, universe: VertexUniverse, over=None, exact: bool = True):
        """
        Builds the uniform distribution on `over` (default: the whole universe).

        Args:
            universe (VertexUniverse): Target universe.
            over (Iterable[int] | None): Vertices that receive equal mass.
            exact (bool): Whether to build in rational mode.
        """
        vertices = sorted(set(range(universe.size) if over is None else over))
        if not vertices:
            raise ValueError("uniform distribution needs at least one vertex")
        mass = Fraction(1, len(vertices)) if exact else 1.0 / len(vertices)
        zero = Fraction(0) if exact else 0.0
        probs = [zero] * universe.size
        for v in vertices:
            probs[universe.check_vertex(v)] = mass
        return cls(universe, tuple(probs))

    @classmethod
    def point_mass(cls, universe: VertexUniverse, vertex: int):
        vertex = universe.check_vertex(vertex)
        return cls(
            universe,
            tuple(Fraction(int(v == vertex)) for v in range(universe.size)),
        )

    @classmethod
    def from_weights(cls, universe: VertexUniverse, weights):
        """Normalizes non-negative weights; exact when every weight is rational."""
        weights = list(weights)
        if all(is_exact_number(w) for w in weights):
            total = sum((Fraction(w) for w in weights), Fraction(0))
            if total <= 0:
                raise ValueError("weights must have positive total mass")
            return cls(universe, tuple(Fraction(w) / total for w in weights))
        arr = np.asarray(weights, dtype=np.float64)
        if np.any(arr < 0) or arr.sum() <= 0:
            raise ValueError("weights must be non-negative with positive total mass")
        arr = arr / arr.sum()
        # renormalize drift onto the largest entry so the sum check passes
        arr[int(np.argmax(arr))] += 1.0 - arr.sum()
        return cls(universe, tuple(arr.tolist()))

    @classmethod
    def empirical(cls, sample: "Sample"):
        """The empirical distribution p_S of a sample, in exact mode."""
        m = len(sample.vertices)
        counts = Counter(sample.vertices)
        return cls(
            sample.universe,
            tuple(Fraction(counts.get(v, 0), m) for v in range(sample.universe.size)),
        )


@dataclass(frozen=True)
class Sample:
    """
    An ordered sequence of vertex ids.

    Attributes:
        universe (VertexUniverse): The universe the vertices belong to.
        vertices (tuple[int, ...]): The draws, in order; repeats are allowed.
    """

    universe: VertexUniverse
    vertices: tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        if not vertices:
            raise ValueError("a sample needs at least one vertex")
        for v in vertices:
            if not 0 <= v < self.universe.size:
                raise ValueError(f"sample vertex {v} outside universe of size {self.universe.size}")
        object.__setattr__(self, "vertices", vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def counts(self) -> np.ndarray:
        arr = np.bincount(np.asarray(self.vertices, dtype=np.int64), minlength=self.universe.size)
        arr.flags.writeable = False
        return arr

    def replace(self, position: int, vertex: int) -> "Sample":
        """Returns a copy with the draw at `position` swapped for `vertex`."""
        vertices = list(self.vertices)
        vertices[position] = vertex
        return Sample(self.universe, tuple(vertices))

    def to_dict(self) -> dict:
        return {"universe": self.universe.to_dict(), "vertices": list(self.vertices)}


def mixture(p: Distribution, v: int, q) -> Distribution:
    """
    Returns q * delta_v + (1 - q) * p.

    Args:
        p (Distribution): Base distribution.
        v (int): Vertex receiving the point mass.
        q (Fraction | int | float): Mixture weight in [0, 1]. The result stays exact
            only when both `p` and `q` are exact.

    Returns:
        Distribution: The lifted distribution p^q.

    Raises:
        ValueError: If q is outside [0, 1] or v is not a vertex.
    """
    v = p.universe.check_vertex(v)
    if not 0 <= q <= 1:
        raise ValueError(f"mixture weight must lie in [0, 1], got {q!r}")
    if p.exact and is_exact_number(q):
        q = Fraction(q)
        probs = [(1 - q) * x for x in p.probs]
        probs[v] += q
        return Distribution(p.universe, tuple(probs))
    q = float(q)
    arr = (1.0 - q) * p.array
    arr[v] += q
    return Distribution.from_weights(p.universe, arr)


def sample_from(p: Distribution, m: int, seed) -> Sample:
    """
    Draws m IID vertices from p by inverse-CDF over its support.

    Args:
        p (Distribution): The distribution to sample.
        m (int): Number of draws, at least 1.
        seed (int | np.random.Generator): Same seed and same p give the same sample.

    Returns:
        Sample: The drawn sample.
    """
    if m < 1:
        raise ValueError(f"sample size must be at least 1, got {m}")
    rng = make_rng(seed)
    support = np.asarray(p.support, dtype=np.int64)
    cdf = np.cumsum(p.array[support])
    cdf[-1] = 1.0
    idx = np.searchsorted(cdf, rng.random(m), side="right")
    idx = np.minimum(idx, len(support) - 1)
    return Sample(p.universe, tuple(support[idx].tolist()))


def tv_distance(p1: Distribution, p2: Distribution):
    """
    Total variation distance, half the L1 distance.

    Exact when both inputs are exact.
    """
    ensure_same_universe(p1, p2)
    if p1.exact and p2.exact:
        return sum((abs(a - b) for a, b in zip(p1.probs, p2.probs)), Fraction(0)) / 2
    return float(np.abs(p1.array - p2.array).sum() / 2.0)
