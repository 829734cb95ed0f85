"""
The grid Vandermonde matrix V[i, j] = ((i - 1) / k)^(j - 1) and the bounds that
make a polynomial's linear coefficient visible on the grid {0, 1/k, ..., 1}.

Checked facts, for 1 <= k <= 12:
  - the largest singular value is at most k + 1;
  - the smallest singular value is at least 2^(-2k^2) (compared in log space);
  - |det V| equals prod_{i<j} |i - j| / k;
  - every degree-k polynomial f has max_grid |f| >= |a_1| 2^(-3k^2).
"""

import logging
from dataclasses import dataclass
from math import lgamma, log

import numpy as np

from ..errors import ConvergenceError

logger = logging.getLogger(__name__)

MAX_K = 12
JACOBI_TOLERANCE = 1e-13
MAX_SWEEPS = 60
DET_RELATIVE_TOLERANCE = 1e-9


def _check_k(k: int):
    if not isinstance(k, int) or not 1 <= k <= MAX_K:
        raise ValueError(f"k must be an integer in [1, {MAX_K}], got {k!r}")


def build_vandermonde(k: int) -> np.ndarray:
    """(k+1) x (k+1) matrix with row i holding the powers of the grid point i / k."""
    _check_k(k)
    nodes = np.arange(k + 1, dtype=np.float64) / k
    return np.vander(nodes, k + 1, increasing=True)


def jacobi_singular_values(a: np.ndarray, tol: float = JACOBI_TOLERANCE, max_sweeps: int = MAX_SWEEPS):
    """
    One-sided (Hestenes) Jacobi: rotate column pairs until all are orthogonal.

    Returns:
        tuple[np.ndarray, int]: Ascending singular values and the sweeps used.

    Raises:
        ConvergenceError: If columns are still not orthogonal after `max_sweeps`.
    """
    u = np.array(a, dtype=np.float64, copy=True)
    n = u.shape[1]
    for sweep in range(1, max_sweeps + 1):
        rotated = False
        for i in range(n - 1):
            for j in range(i + 1, n):
                alpha = float(u[:, i] @ u[:, i])
                beta = float(u[:, j] @ u[:, j])
                gamma = float(u[:, i] @ u[:, j])
                if abs(gamma) <= tol * np.sqrt(alpha * beta) or gamma == 0.0:
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                t = np.copysign(1.0, zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                ui = u[:, i].copy()
                u[:, i] = c * ui - s * u[:, j]
                u[:, j] = s * ui + c * u[:, j]
        if not rotated:
            return np.sort(np.linalg.norm(u, axis=0)), sweep
    raise ConvergenceError(f"one-sided Jacobi did not converge in {max_sweeps} sweeps")


def log_product_formula(k: int) -> float:
    """ln prod_{1<=i<j<=k+1} (j - i) / k, using prod_{i<j}(j - i) = prod_{d=1}^{k} d!."""
    pairs = k * (k + 1) // 2
    return sum(lgamma(d + 1) for d in range(1, k + 1)) - pairs * log(k)


@dataclass(frozen=True)
class SpectrumReport:
    """
    Attributes:
        k (int): Grid parameter.
        singular_values (tuple[float, ...]): Ascending.
        det_abs (float): |det V| from an LU factorization.
        product_formula (float): prod_{i<j} |i - j| / k.
        sweeps (int): Jacobi sweeps used.
    """

    k: int
    singular_values: tuple
    det_abs: float
    product_formula: float
    sweeps: int

    @property
    def smallest(self) -> float:
        return self.singular_values[0]

    @property
    def largest(self) -> float:
        return self.singular_values[-1]

    @property
    def largest_within_bound(self) -> bool:
        return self.largest <= self.k + 1

    @property
    def smallest_within_bound(self) -> bool:
        return log(self.smallest) >= -2 * self.k**2 * log(2)

    @property
    def determinant_matches(self) -> bool:
        return abs(self.det_abs - self.product_formula) <= DET_RELATIVE_TOLERANCE * self.product_formula

    @property
    def singular_product_matches(self) -> bool:
        return (
            abs(float(np.prod(self.singular_values)) - self.det_abs)
            <= DET_RELATIVE_TOLERANCE * self.det_abs
        )

    @property
    def holds(self) -> bool:
        return self.largest_within_bound and self.smallest_within_bound and self.determinant_matches

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "singular_values": list(self.singular_values),
            "det_abs": self.det_abs,
            "product_formula": self.product_formula,
            "sweeps": self.sweeps,
            "largest_within_bound": self.largest_within_bound,
            "smallest_within_bound": self.smallest_within_bound,
            "determinant_matches": self.determinant_matches,
        }


def spectrum(k: int) -> SpectrumReport:
    """
    Singular values of V by one-sided Jacobi, |det V| by LU with partial
    pivoting, and the closed-form determinant.
    """
    v = build_vandermonde(k)
    values, sweeps = jacobi_singular_values(v)
    sign, logdet = np.linalg.slogdet(v)
    if sign == 0:
        raise ConvergenceError(f"LU factorization reports a singular Vandermonde matrix for k={k}")
    report = SpectrumReport(
        k,
        tuple(float(x) for x in values),
        float(np.exp(logdet)),
        float(np.exp(log_product_formula(k))),
        sweeps,
    )
    logger.debug("spectrum k=%d: min %.3e max %.3e", k, report.smallest, report.largest)
    return report


@dataclass(frozen=True)
class GridPolynomial:
    """f(q) = a_0 + a_1 q + ... + a_k q^k."""

    k: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(float(a) for a in self.coeffs)
        if self.k < 1 or len(coeffs) != self.k + 1:
            raise ValueError(f"degree-{self.k} grid polynomial needs {self.k + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, q: float) -> float:
        value = 0.0
        for a in reversed(self.coeffs):
            value = value * q + a
        return value

    @property
    def grid(self) -> tuple:
        return tuple(j / self.k for j in range(self.k + 1))


@dataclass(frozen=True)
class GridDominance:
    max_abs_on_grid: float
    bound: float
    holds: bool

    def to_dict(self) -> dict:
        return {"max_abs_on_grid": self.max_abs_on_grid, "bound": self.bound, "holds": self.holds}


def grid_dominance_check(poly: GridPolynomial) -> GridDominance:
    """Compares max |f| over the grid with |a_1| 2^(-3k^2)."""
    peak = max(abs(poly(q)) for q in poly.grid)
    bound = abs(poly.coeffs[1]) * 2.0 ** (-3 * poly.k**2)
    return GridDominance(peak, bound, peak >= bound)


def random_grid_checks(k: int, trials: int, seed) -> list[GridDominance]:
    """Runs the grid check on `trials` polynomials with coefficients uniform in [-1, 1]."""
    _check_k(k)
    rng = np.random.default_rng(seed)
    coeffs = rng.uniform(-1.0, 1.0, size=(trials, k + 1))
    return [grid_dominance_check(GridPolynomial(k, tuple(row))) for row in coeffs]
