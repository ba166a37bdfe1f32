"""Orthogonal Grassmannian codes, caps and Hadamard matrices.

Thin python surface over the C++ core: point-set enumeration, code
parameters with exact minimum distances at desk scale, the tabulated
subspace families with their sign matrices, partial spreads, and the
quadric intersection scan.
"""

from ._ogc import (
    BudgetExceeded,
    Field,
    VerificationFailed,
    a_matrix_formula,
    a_matrix_from_cap,
    cap_family,
    code_report,
    delta_count_formula,
    delta_points,
    hadamard_design_params,
    hyperplane_distance,
    is_hadamard,
    max_partial_spread,
    quadric_scan,
    rm_code_params,
    run_acceptance,
    sylvester_matrix,
)

__all__ = [
    "BudgetExceeded",
    "Field",
    "VerificationFailed",
    "a_matrix_formula",
    "a_matrix_from_cap",
    "cap_family",
    "code_report",
    "delta_count_formula",
    "delta_points",
    "hadamard_design_params",
    "hyperplane_distance",
    "is_hadamard",
    "max_partial_spread",
    "quadric_scan",
    "rm_code_params",
    "run_acceptance",
    "sylvester_matrix",
]
