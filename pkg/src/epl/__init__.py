"""Evidential path logic over sparse multi-relational networks."""

from epl.evidence import (
    DEFAULT_K,
    ONE,
    ZERO,
    EvidenceTuple,
    TruthValue,
    evidence_product,
    evidence_sum,
    truth_value,
)
from epl.matrix import (
    DimensionError,
    EvidenceMatrix,
    NotIndicatorError,
    clip,
    converse_transpose,
    entrywise_sum,
    hadamard,
    identity,
    matmul,
    not_filter,
    transpose,
)
from epl.network import EvidenceNetwork, UnknownVertexError
from epl.syllogisms import (
    InferenceResult,
    SyllogismKind,
    abduce,
    apply,
    deduce,
    exemplify,
    induce,
    infer,
)
from epl.dsl import (
    EvaluationError,
    RuleProgram,
    RuleSyntaxError,
    evaluate,
    parse,
    parse_expr,
    run,
    step,
    to_source,
)
from epl.quads import QuadFormatError, load_quads, report_truth, save_quads

__all__ = [
    "DEFAULT_K", "ONE", "ZERO", "EvidenceTuple", "TruthValue", "evidence_product",
    "evidence_sum", "truth_value", "DimensionError", "EvidenceMatrix",
    "NotIndicatorError", "clip", "converse_transpose", "entrywise_sum", "hadamard",
    "identity", "matmul", "not_filter", "transpose", "EvidenceNetwork",
    "UnknownVertexError", "InferenceResult", "SyllogismKind", "abduce", "apply",
    "deduce", "exemplify", "induce", "infer", "EvaluationError", "RuleProgram",
    "RuleSyntaxError", "evaluate", "parse", "parse_expr", "run", "step", "to_source",
    "QuadFormatError", "load_quads", "report_truth", "save_quads",
]
