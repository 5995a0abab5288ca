"""Yu-Gong interleaved sequences: construction, autocorrelation, 2-adic complexity."""

from .correlate import (
    AutocorrProfile,
    Optimality,
    autocorrelation,
    classify_optimality,
    full_profile,
    naive_profile,
    predict_yu_gong,
    verify_theorem1,
)
from .gf2k import INF, FieldContext, FieldError, build_field, dlog, trace
from .seqgen import (
    BinarySeq,
    InterleaveSpec,
    ShiftSeq,
    YuGongParams,
    decompose_m_sequence,
    interleave,
    m_sequence,
    shift_matrix,
    yu_gong,
)
from .adic import two_adic_complexity, theorem3_bound

__version__ = "0.1.0"
