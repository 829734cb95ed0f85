from .vandermonde import (
    GridDominance,
    GridPolynomial,
    SpectrumReport,
    build_vandermonde,
    grid_dominance_check,
    jacobi_singular_values,
    random_grid_checks,
    spectrum,
)

__all__ = [
    "GridDominance",
    "GridPolynomial",
    "SpectrumReport",
    "build_vandermonde",
    "grid_dominance_check",
    "jacobi_singular_values",
    "random_grid_checks",
    "spectrum",
]
