from .vc import VcReport, graph_vc_dim, is_shattered, restriction_count, sauer_bound, vc_dim

__all__ = [
    "VcReport",
    "graph_vc_dim",
    "is_shattered",
    "restriction_count",
    "sauer_bound",
    "vc_dim",
]
