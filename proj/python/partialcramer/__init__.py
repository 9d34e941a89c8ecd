"""Linear systems by Cramer's rule, including the partial-variable form.

The heavy lifting lives in the C++ extension ``partialcramer._core``. All
indices in this API are 1-based, matching the printed output of the CLI.
"""

from ._core import (
    AffineSolution,
    ChainSpec,
    ColumnVector,
    CramerError,
    DimensionError,
    EliminationTrace,
    FullSolution,
    Matrix,
    MinorSequence,
    OracleSolution,
    ParseError,
    PerpContribution,
    ReorderedSystem,
    ScalarKindError,
    Scalar,
    SingularMatrixError,
    SystemSpec,
    TraceStep,
    ZeroLeadingMinorError,
    affine_from_json,
    affine_to_json,
    build_chain_system,
    chain_closed_form,
    chain_inverse_matrix,
    check_induction_identity,
    det_fast,
    det_leibniz,
    eliminate_stepwise,
    flt,
    format_affine,
    identity,
    leading_minors,
    leading_submatrix,
    make_matrix,
    multiply_mm,
    multiply_mv,
    parse_chain_model,
    parse_system,
    partial_solve_by_substitution,
    perp_contribution,
    rat,
    reorder_for_nonzero_minors,
    replace_column,
    residual,
    solve_elimination,
    solve_full,
    solve_partial,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
