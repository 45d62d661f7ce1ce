"""Exact Lax operator and vector R-matrices for U_q[osp(2|n)]."""

from .graded import (
    BasisTable,
    GradedMatrix,
    GradingError,
    basis_info,
    elem_matrix,
    gcomm,
    gdagger,
    graded_swap,
    graded_twist,
    gtensor,
    leg_embed,
)
from .qscalar import ONE, ZERO, EvalPoint, LaurentScalar, laurent_eval, laurent_mul, laurent_normalize, q_power
from .report import VerificationReport
from .roots import RootData, WeightVector, bilinear, cartan_matrix, rho, root_data, simple_roots
from .sigma import (
    SigmaExpr,
    SigmaTable,
    build_vector_R,
    build_vector_RT,
    closed_form_sigma,
    eval_sigma,
    extend_sigma_table,
    lax_operator,
    opposite_lax_operator,
    sigma_table,
    simple_sigma_exprs,
)
from .vector_rep import RepImages, coproduct_matrix, rep_generator, tensor_rep, vector_rep
from .verify import (
    CHECKS,
    check_appendix_relations,
    check_classical_limit,
    check_extra_qserre,
    check_fusion,
    check_intertwining,
    check_mode_agreement,
    check_ybe,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "BasisTable",
    "CHECKS",
    "EvalPoint",
    "GradedMatrix",
    "GradingError",
    "LaurentScalar",
    "ONE",
    "RepImages",
    "RootData",
    "SigmaExpr",
    "SigmaTable",
    "VerificationReport",
    "WeightVector",
    "ZERO",
    "basis_info",
    "bilinear",
    "build_vector_R",
    "build_vector_RT",
    "cartan_matrix",
    "check_appendix_relations",
    "check_classical_limit",
    "check_extra_qserre",
    "check_fusion",
    "check_intertwining",
    "check_mode_agreement",
    "check_ybe",
    "closed_form_sigma",
    "coproduct_matrix",
    "elem_matrix",
    "eval_sigma",
    "extend_sigma_table",
    "gcomm",
    "gdagger",
    "graded_swap",
    "graded_twist",
    "gtensor",
    "laurent_eval",
    "laurent_mul",
    "laurent_normalize",
    "lax_operator",
    "leg_embed",
    "opposite_lax_operator",
    "q_power",
    "rep_generator",
    "rho",
    "root_data",
    "run_checks",
    "sigma_table",
    "simple_roots",
    "simple_sigma_exprs",
    "tensor_rep",
    "vector_rep",
]
