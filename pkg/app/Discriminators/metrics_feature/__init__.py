from .ipm import IpmResult, ipm_exact, ipm_sampled, to_json_number, tv_distance
from .lift import GridSweep, MixtureExpansion, delta_n, mixture_grid_sweep, mixture_ipm_expansion

__all__ = [
    "GridSweep",
    "IpmResult",
    "MixtureExpansion",
    "delta_n",
    "ipm_exact",
    "ipm_sampled",
    "mixture_grid_sweep",
    "mixture_ipm_expansion",
    "to_json_number",
    "tv_distance",
]
