"""Spectral computations for complex tensors."""

from ._core import (
    EigenClass,
    EigenReport,
    Tensor,
    char_poly,
    det_trace_crosscheck,
    det_trace_formula,
    determinant,
    discriminant_check,
    e_eigenvalues,
    eigenpairs,
    expected_charpoly_degree,
    expected_eigen_count,
    is_singular,
    mode_transform_all,
    random_orthogonal,
    random_tensor,
    singular_tensor,
)

__all__ = [
    "EigenClass",
    "EigenReport",
    "Tensor",
    "char_poly",
    "det_trace_crosscheck",
    "det_trace_formula",
    "determinant",
    "discriminant_check",
    "e_eigenvalues",
    "eigenpairs",
    "expected_charpoly_degree",
    "expected_eigen_count",
    "is_singular",
    "mode_transform_all",
    "random_orthogonal",
    "random_tensor",
    "singular_tensor",
]
