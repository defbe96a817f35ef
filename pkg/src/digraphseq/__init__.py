"""Realizability of (in-degree, out-degree) sequences as digraphs."""

from ._backend import BACKEND
from .checkers import (
    CheckReport,
    Verdict,
    Violation,
    chen_check,
    check_with_ordering,
    digraph_check,
    erdos_gallai_check,
    evaluate_ordering,
    loop_check,
    reduced_indices,
)
from .oracle import (
    InstanceTooLarge,
    OracleVerdict,
    brute_force_realizable,
    flow_realizable,
    random_sequence,
)
from .realizer import (
    Digraph,
    RealizationError,
    RealizationResult,
    kleitman_wang,
    loop_realize,
    verify_realization,
)
from .seqcore import (
    CapacityError,
    DegreePair,
    DegreeSequence,
    InequalityProfile,
    Ordering,
    Variant,
    normalize,
    profile_fast,
    profile_naive,
    sort_decreasing_a,
    sort_lexicographic,
)
from .threshold import (
    NotThresholdError,
    ThresholdReport,
    corrected_ferrers_matrix,
    ferrers_matrix_loops,
    is_threshold,
)

__version__ = "0.1.0"
