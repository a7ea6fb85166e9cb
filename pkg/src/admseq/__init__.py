"""Constructive decompositions of positive operators into rank-one projections."""

from .bridge import (
    BridgeRecord,
    decomp_to_isometry,
    gram_matrix,
    isometry_to_decomp,
)
from .carpenter import (
    CASE_BOTH_SUMMABLE,
    CASE_FINITE_RANK,
    CASE_LAMBDA_DIVERGES,
    CASE_M_FINITE,
    CASE_MU_DIVERGES,
    BlockPlan,
    CaseTag,
    StageCertificate,
    carpenter_decompose,
    classify_case,
    decompose_finite_rank,
    decompose_m_finite,
    keycase_recursion,
    plan_both_summable,
    plan_lambda_diverges,
    plan_mu_diverges,
    realize_block_plans,
)
from .checkers import (
    IneqReport,
    ProjectionDiagReport,
    SumOfProjReport,
    adm_transform,
    ineq_check,
    projection_diag_check,
    sum_of_projections_check,
)
from .errors import (
    AdmseqError,
    DimensionError,
    KadisonError,
    MajorizationError,
    PlanningError,
    SequenceError,
    TraceMismatchError,
)
from .horn import (
    MixResult,
    horn_decompose,
    mix_two,
    schur_horn_matrix,
)
from .operators import (
    RankOneDecomp,
    RankOneTerm,
    decomp_from_json,
    decomp_residual,
    decomp_to_json,
    eigenvalues_desc,
    frame_operator,
    make_term,
    op_from_json,
    op_to_json,
    polar_partial_isometry,
    sqrt_psd,
)
from .seqkit import (
    KadisonReport,
    MajorizationVerdict,
    SplitSeq,
    WeightSeq,
    elem_check_ii,
    elem_eta_i,
    kadison_check,
    majorizes,
    rearrange_desc,
    seq_from_json,
    seq_to_json,
    split_mu_lambda,
    strip_zeros_ones,
    tail_sum,
)
from .streams import VectorStream, stream_from_json, stream_to_json

__all__ = [
    "AdmseqError",
    "BlockPlan",
    "BridgeRecord",
    "CASE_BOTH_SUMMABLE",
    "CASE_FINITE_RANK",
    "CASE_LAMBDA_DIVERGES",
    "CASE_M_FINITE",
    "CASE_MU_DIVERGES",
    "CaseTag",
    "DimensionError",
    "IneqReport",
    "KadisonError",
    "KadisonReport",
    "MajorizationError",
    "MajorizationVerdict",
    "MixResult",
    "PlanningError",
    "ProjectionDiagReport",
    "RankOneDecomp",
    "RankOneTerm",
    "SequenceError",
    "SplitSeq",
    "StageCertificate",
    "SumOfProjReport",
    "TraceMismatchError",
    "VectorStream",
    "WeightSeq",
    "adm_transform",
    "carpenter_decompose",
    "classify_case",
    "decomp_from_json",
    "decomp_residual",
    "decomp_to_isometry",
    "decomp_to_json",
    "decompose_finite_rank",
    "decompose_m_finite",
    "eigenvalues_desc",
    "elem_check_ii",
    "elem_eta_i",
    "frame_operator",
    "gram_matrix",
    "horn_decompose",
    "ineq_check",
    "isometry_to_decomp",
    "kadison_check",
    "keycase_recursion",
    "majorizes",
    "make_term",
    "mix_two",
    "op_from_json",
    "op_to_json",
    "plan_both_summable",
    "plan_lambda_diverges",
    "plan_mu_diverges",
    "polar_partial_isometry",
    "projection_diag_check",
    "realize_block_plans",
    "rearrange_desc",
    "schur_horn_matrix",
    "seq_from_json",
    "seq_to_json",
    "split_mu_lambda",
    "sqrt_psd",
    "stream_from_json",
    "stream_to_json",
    "strip_zeros_ones",
    "sum_of_projections_check",
    "tail_sum",
]

__version__ = "0.1.0"
