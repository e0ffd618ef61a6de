"""Stable equivalence: invertible matrix operations, twist logs and their verification."""

from .builder import chain, jacobi_trudi_chain, permute_to_canonical, reduction_steps, twist_transform_ops
from .ops import (
    AddCol,
    AddRow,
    Checkpoint,
    Coef,
    Destabilize,
    OpLog,
    ScaleCol,
    ScaleRow,
    Stabilize,
    SwapCols,
    SwapRows,
    apply_op,
    inverse,
    invert_log,
    transpose_log,
)
from .replay import ChainReport, faithful_vars, replay, verify_chain, verify_log

__all__ = [
    "AddCol",
    "AddRow",
    "ChainReport",
    "Checkpoint",
    "Coef",
    "Destabilize",
    "OpLog",
    "ScaleCol",
    "ScaleRow",
    "Stabilize",
    "SwapCols",
    "SwapRows",
    "apply_op",
    "chain",
    "faithful_vars",
    "inverse",
    "invert_log",
    "jacobi_trudi_chain",
    "permute_to_canonical",
    "reduction_steps",
    "replay",
    "transpose_log",
    "twist_transform_ops",
    "verify_chain",
    "verify_log",
]
