"""Graphic degree sequences: exact Erdős–Gallai testing, realization,
closed-form sufficiency bounds, extremal families and exhaustive checks."""

from .bounds import (
    BoundVerdict,
    Predicate,
    bhjw_bound,
    bounds_summary,
    improved_bound,
    remark_thresholds,
    zz_corollary,
    zz_general,
    zz_simplified,
)
from .errors import (
    BadParameters,
    DegSeqError,
    EmptySequence,
    IndexOutOfRange,
    Malformed,
    NotGraphic,
    Overflow,
    ParseError,
    Refused,
    ZeroEntry,
)
from .extremal import gap_example, proof_extremal_form, proof_forms, witness_nongraphic
from .oracle import cross_check, enumerate_sequences, sharpness_scan
from .seqcore import (
    DegreeSequence,
    EGReport,
    Realization,
    Violation,
    eg_terms,
    erdos_gallai_check,
    flatten_at,
    format_sequence,
    havel_hakimi_realize,
    parse_sequence,
    realization_problems,
)

__version__ = "0.1.0"
