"""Algorithmic complexity estimation for binary strings, grids and cellular automata."""

from ._alab import (
    CtmTable,
    Error,
    Estimator,
    build_ctm_sampled,
    build_ctm_table,
    complement_complete,
    evolve,
    information_delta,
    interact,
    langton_lambda,
    load_ctm_table,
    loads_ctm_table,
    lzw_compress,
    machine_count,
    merge_ctm_tables,
    reconstruct_time_order,
    row_impact_profile,
    run_benchmark,
    run_cli,
    shannon_entropy,
    simplify,
)

__all__ = [
    "CtmTable",
    "Error",
    "Estimator",
    "build_ctm_sampled",
    "build_ctm_table",
    "complement_complete",
    "evolve",
    "information_delta",
    "interact",
    "langton_lambda",
    "load_ctm_table",
    "loads_ctm_table",
    "lzw_compress",
    "machine_count",
    "merge_ctm_tables",
    "reconstruct_time_order",
    "row_impact_profile",
    "run_benchmark",
    "run_cli",
    "shannon_entropy",
    "simplify",
]
