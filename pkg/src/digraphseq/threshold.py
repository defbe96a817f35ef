"""Threshold sequences and their Ferrers-matrix realizations.

A sequence is threshold when, in decreasing lexicographic order, every
no-loop inequality holds with equality. Its realization is the corrected
Ferrers matrix: row ``i`` carries ``b_i`` ones packed to the left, skipping
the diagonal cell.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .realizer import Digraph, realization_errors
from .seqcore import (
    CapacityError,
    DegreeSequence,
    Variant,
    check_capacity,
    normalize,
    profile_fast,
    sort_decreasing_a,
    sort_lexicographic,
)

__all__ = [
    "NotThresholdError",
    "ThresholdReport",
    "corrected_ferrers_matrix",
    "ferrers_matrix_loops",
    "is_threshold",
    "is_loop_threshold",
]


class NotThresholdError(ValueError):
    pass


@dataclass(frozen=True)
class ThresholdReport:
    is_threshold: bool
    tight_indices: tuple
    slack: tuple
    ordering: tuple = ()
    diagnostic: str = ""

    def to_json(self) -> dict:
        out = {
            "is_threshold": self.is_threshold,
            "tight_k": list(self.tight_indices),
            "slack": list(self.slack),
            "ordering": list(self.ordering),
        }
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        return out


def _tightness(seq, ordering, variant):
    profile = profile_fast(seq, ordering, variant)
    slack = profile.slack()
    tight = tuple((np.flatnonzero(slack == 0) + 1).tolist())
    return len(tight) == seq.n, tight, tuple(slack.tolist())


def _screen(seq):
    try:
        check_capacity(seq)
    except CapacityError as exc:
        return str(exc)
    if not seq.balanced:
        return f"not balanced: in-degree total {seq.sum_a} != out-degree total {seq.sum_b}"
    return ""


def is_threshold(seq: DegreeSequence) -> ThresholdReport:
    """Check tightness of every no-loop inequality in lexicographic order.

    ``(0, 0)`` pairs are dropped first, so ``tight_indices`` refer to the
    remaining pairs.
    """
    problem = _screen(seq)
    if problem:
        return ThresholdReport(False, (), (), diagnostic=problem)
    core, _ = normalize(seq)
    order = sort_lexicographic(core)
    ok, tight, slack = _tightness(core, order, Variant.NO_LOOP)
    return ThresholdReport(ok, tight, slack, tuple(order.labels(core)))


def is_loop_threshold(seq: DegreeSequence) -> ThresholdReport:
    """Loop-model analogue: ``sum_i min(b_i, k) == A_k`` for all ``k``."""
    problem = _screen(seq)
    if problem:
        return ThresholdReport(False, (), (), diagnostic=problem)
    core, _ = normalize(seq)
    order = sort_decreasing_a(core)
    ok, tight, slack = _tightness(core, order, Variant.LOOP)
    return ThresholdReport(ok, tight, slack, tuple(order.labels(core)))


def _packed(seq, report, skip_diagonal, variant):
    core, _ = normalize(seq)
    index = {lab: i for i, lab in enumerate(core.labels)}
    order = [index[lab] for lab in report.ordering]
    arcs = []
    for r, i in enumerate(order):
        cols = [c for c in range(core.n) if not (skip_diagonal and c == r)][: core.b[i]]
        arcs.extend((core.labels[i], core.labels[order[c]]) for c in cols)
    graph = Digraph(seq.labels, frozenset(arcs))
    problems = realization_errors(graph, seq, variant)
    if problems:
        raise RuntimeError(f"Ferrers packing failed verification: {problems[:3]}")
    return graph


def corrected_ferrers_matrix(seq: DegreeSequence) -> Digraph:
    """Loopless realization of a threshold sequence.

    Raises
    ------
    NotThresholdError
        If :func:`is_threshold` is false for ``seq``.
    """
    report = is_threshold(seq)
    if not report.is_threshold:
        raise NotThresholdError(report.diagnostic or f"not threshold; tight at {report.tight_indices}")
    return _packed(seq, report, True, Variant.NO_LOOP)


def ferrers_matrix_loops(seq: DegreeSequence) -> Digraph:
    """Ferrers matrix (diagonal allowed) for a sequence tight in the loop model."""
    report = is_loop_threshold(seq)
    if not report.is_threshold:
        raise NotThresholdError(report.diagnostic or f"not loop-tight; tight at {report.tight_indices}")
    return _packed(seq, report, False, Variant.LOOP)
