"""Exact arithmetic kernel: Gaussian integers, integer polynomials, rational matrices."""

from .gaussian import GaussianInt
from .poly import IntPolynomial, poly_gcd, squarefree_part
from .linalg import (
    DimensionError,
    RationalMatrix,
    char_poly,
    det,
    kernel_basis,
    rank,
    rref,
    solve_in_span,
    symmetric_signature,
)
from .roots import (
    IsolatingInterval,
    Ordering,
    RootComparison,
    compare_largest_real_roots,
    count_roots,
    root_comparison,
    sturm_isolate_real_roots,
)
from .cyclotomic import (
    cyclotomic_factors,
    cyclotomic_polynomial,
    cyclotomic_split,
    is_quasi_unipotent,
)

__all__ = [
    "GaussianInt", "IntPolynomial", "poly_gcd", "squarefree_part",
    "DimensionError", "RationalMatrix", "char_poly", "det", "kernel_basis", "rank", "rref",
    "solve_in_span", "symmetric_signature",
    "IsolatingInterval", "Ordering", "RootComparison", "compare_largest_real_roots",
    "count_roots", "root_comparison", "sturm_isolate_real_roots",
    "cyclotomic_factors", "cyclotomic_polynomial", "cyclotomic_split", "is_quasi_unipotent",
]
