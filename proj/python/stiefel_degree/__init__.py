"""Degrees of Stiefel manifolds St(k, n) and the Gelfand-Tsetlin machinery behind them."""

from ._core import (
    ConsistencyError,
    DimensionError,
    DomainError,
    SizeError,
    aztec_check,
    count_invariants,
    count_nilp,
    degree,
    degree_table,
    degree_via_integral,
    det,
    dim_irrep,
    gt_polytope_dim,
    lgv_matrix,
    omega,
    path_config,
    verify,
    vol_closed,
    vol_symbolic,
    volume,
)

__all__ = [
    "ConsistencyError",
    "DimensionError",
    "DomainError",
    "SizeError",
    "aztec_check",
    "count_invariants",
    "count_nilp",
    "degree",
    "degree_table",
    "degree_via_integral",
    "det",
    "dim_irrep",
    "gt_polytope_dim",
    "lgv_matrix",
    "omega",
    "path_config",
    "verify",
    "vol_closed",
    "vol_symbolic",
    "volume",
]
