"""Giambelli-type matrices of skew Schur functions and the stable equivalence of Jacobi-Trudi matrices."""

from .gmatrix import canonical_form, determinant, dual_jacobi_trudi, evaluate, giambelli_matrix, jacobi_trudi
from .shapes import SkewShape, parse_partition, parse_shape
from .strips import (
    CuttingStrip,
    OutsideDecomposition,
    decomposition_from_cutting_strip,
    enumerate_decompositions,
    horizontal_decomposition,
    twist,
    vertical_decomposition,
)
from .symfun import SymPoly, schur_poly

__version__ = "0.1.0"

__all__ = [
    "CuttingStrip",
    "OutsideDecomposition",
    "SkewShape",
    "SymPoly",
    "canonical_form",
    "decomposition_from_cutting_strip",
    "determinant",
    "dual_jacobi_trudi",
    "enumerate_decompositions",
    "evaluate",
    "giambelli_matrix",
    "horizontal_decomposition",
    "jacobi_trudi",
    "parse_partition",
    "parse_shape",
    "schur_poly",
    "twist",
    "vertical_decomposition",
]
