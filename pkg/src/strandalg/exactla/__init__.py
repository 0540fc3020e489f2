"""Exact linear algebra over Q, F_p and (for Smith form) Z."""

from ._backend import HAVE_EXT, backend_name, use_extension
from .complexes import ChainComplex, ComplexError, complex_from_blocks, homology, integral_homology, is_acyclic
from .fields import F2, F3, QQ, ZZ, FieldSpec
from .matrix import (
    Quotient,
    SparseMatrix,
    image_basis,
    kernel_basis,
    nullity,
    quotient_basis,
    rank,
    rank_over_q,
    row_space_basis,
    rref,
    snf,
    torsion,
)

__all__ = [
    "HAVE_EXT",
    "backend_name",
    "use_extension",
    "ChainComplex",
    "ComplexError",
    "complex_from_blocks",
    "homology",
    "integral_homology",
    "is_acyclic",
    "FieldSpec",
    "QQ",
    "ZZ",
    "F2",
    "F3",
    "Quotient",
    "SparseMatrix",
    "image_basis",
    "kernel_basis",
    "nullity",
    "quotient_basis",
    "rank",
    "rank_over_q",
    "row_space_basis",
    "rref",
    "snf",
    "torsion",
]
