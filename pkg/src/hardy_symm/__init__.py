"""Toolkit for first-order differential operators psi0 f + psi1 f' on the
coefficient model of the Hardy space: exact symbol algebra, finite sections,
weighted-composition conjugations, symmetry classifiers, and point spectra.
"""

from .poly import Poly, parse_poly, poly_derivative, poly_eval
from .hardy import HardyElement, KernelSpec, derivative_at, inner_product, kernel_coefficients
from .diffop import (
    KernelCombination,
    OperatorMatrix,
    SymbolPair,
    adjoint_on_kernel,
    adjoint_symbols,
    apply,
    expand_combination,
    numeric_adjoint_matrix,
    truncated_matrix,
)
from .conjugations import (
    AntiLinearMatrix,
    CAlphaBeta,
    JBetaLambda,
    apply_c,
    apply_j,
    c_matrix,
    conjugated_symbols,
    conjugated_symbols_c,
    conjugated_symbols_j,
    conjugation_axioms,
    involution_residual_curve,
    j_matrix,
)
from .symmetry import (
    ClassificationReport,
    Verdict,
    classify,
    classify_c_selfadjoint,
    classify_hermitian,
    classify_j_selfadjoint,
    hermitian_to_conjugation,
    residual,
    residual_paths,
)
from .spectrum import (
    EigenfunctionResult,
    SpectrumResult,
    TriangularKernelMatrix,
    eigenfunction,
    formula_spectrum,
    kernel_basis_matrix,
    truncated_eigenvalues,
    zeros_in_disk,
)
from .eigen import companion_matrix, hessenberg, qr_eigenvalues
from . import errors

__all__ = [
    "Poly",
    "parse_poly",
    "poly_eval",
    "poly_derivative",
    "HardyElement",
    "KernelSpec",
    "inner_product",
    "kernel_coefficients",
    "derivative_at",
    "SymbolPair",
    "OperatorMatrix",
    "KernelCombination",
    "apply",
    "truncated_matrix",
    "adjoint_symbols",
    "adjoint_on_kernel",
    "numeric_adjoint_matrix",
    "expand_combination",
    "CAlphaBeta",
    "JBetaLambda",
    "AntiLinearMatrix",
    "apply_c",
    "apply_j",
    "c_matrix",
    "j_matrix",
    "conjugated_symbols",
    "conjugated_symbols_c",
    "conjugated_symbols_j",
    "conjugation_axioms",
    "involution_residual_curve",
    "Verdict",
    "ClassificationReport",
    "classify",
    "classify_hermitian",
    "classify_c_selfadjoint",
    "classify_j_selfadjoint",
    "hermitian_to_conjugation",
    "residual",
    "residual_paths",
    "SpectrumResult",
    "TriangularKernelMatrix",
    "EigenfunctionResult",
    "zeros_in_disk",
    "formula_spectrum",
    "kernel_basis_matrix",
    "eigenfunction",
    "truncated_eigenvalues",
    "companion_matrix",
    "hessenberg",
    "qr_eigenvalues",
    "errors",
]

__version__ = "0.1.0"
