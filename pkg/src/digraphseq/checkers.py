"""Decision procedures for digraph, loop-digraph and graph degree sequences.

Every checker returns a :class:`CheckReport` carrying the ordering it used,
the prefix lengths it tested and, on failure, the smallest violated one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .seqcore import (
    CapacityError,
    DegreeSequence,
    InequalityProfile,
    Ordering,
    Variant,
    check_capacity,
    normalize,
    profile_fast,
    profile_naive,
    sort_decreasing_a,
    sort_lexicographic,
)

__all__ = [
    "CheckReport",
    "REPORT_SCHEMA",
    "Verdict",
    "Violation",
    "chen_check",
    "check_with_ordering",
    "digraph_check",
    "erdos_gallai_check",
    "evaluate_ordering",
    "loop_check",
    "reduced_indices",
]


class Verdict(str, enum.Enum):
    REALIZABLE = "Realizable"
    NOT_REALIZABLE = "NotRealizable"
    NOT_BALANCED = "NotBalanced"
    INVALID_INPUT = "InvalidInput"

    def __str__(self):
        return self.value


class Violation(NamedTuple):
    k: int
    x: int
    a: int


@dataclass(frozen=True)
class CheckReport:
    verdict: Verdict
    variant: Variant
    checked_indices: tuple = ()
    first_violation: Violation | None = None
    ordering: tuple = ()  # original labels in display order
    profile: InequalityProfile | None = None
    message: str = ""

    @property
    def realizable(self) -> bool:
        return self.verdict is Verdict.REALIZABLE

    def to_json(self, include_profile: bool = True) -> dict:
        out = {
            "verdict": str(self.verdict),
            "variant": str(self.variant),
            "checked_k": list(self.checked_indices),
            "violation": None if self.first_violation is None else self.first_violation._asdict(),
            "ordering": list(self.ordering),
        }
        if include_profile and self.profile is not None:
            out["profile"] = {"x": self.profile.x.tolist(), "acc_a": self.profile.acc_a.tolist()}
        if self.message:
            out["message"] = self.message
        return out


_INT_LIST = {"type": "array", "items": {"type": "integer"}}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["verdict", "variant", "checked_k", "violation", "ordering"],
    "properties": {
        "verdict": {"enum": [v.value for v in Verdict]},
        "variant": {"enum": [v.value for v in Variant]},
        "checked_k": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "violation": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["k", "x", "a"],
                    "properties": {
                        "k": {"type": "integer", "minimum": 1},
                        "x": {"type": "integer"},
                        "a": {"type": "integer"},
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "ordering": _INT_LIST,
        "profile": {
            "type": "object",
            "required": ["x", "acc_a"],
            "properties": {"x": _INT_LIST, "acc_a": _INT_LIST},
        },
        "message": {"type": "string"},
    },
}


def reduced_indices(a_ordered) -> np.ndarray:
    """1-based ``k < n`` with ``a_k > a_{k+1}``, plus ``n``."""
    a = np.asarray(a_ordered)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    ks = np.flatnonzero(a[:-1] > a[1:]) + 1
    return np.append(ks, n).astype(np.int64)


_PROFILERS = {"fast": profile_fast, "naive": profile_naive}


def _early_exit(seq, variant):
    try:
        check_capacity(seq)
    except CapacityError as exc:
        return CheckReport(Verdict.INVALID_INPUT, variant, message=str(exc))
    if not seq.balanced:
        return CheckReport(
            Verdict.NOT_BALANCED, variant,
            message=f"in-degree total {seq.sum_a} != out-degree total {seq.sum_b}",
        )
    return None


def _judge(seq, ordering, variant, indices, evaluator):
    profile = _PROFILERS[evaluator](seq, ordering, variant)
    bad = profile.violations(indices) if indices is not None else profile.violations()
    if indices is None:
        indices = np.arange(1, seq.n + 1)
    violation = None
    if bad.shape[0]:
        k = int(bad[0])
        violation = Violation(k, int(profile.x[k - 1]), int(profile.acc_a[k - 1]))
    return CheckReport(
        Verdict.NOT_REALIZABLE if violation else Verdict.REALIZABLE,
        variant,
        tuple(np.asarray(indices).tolist()),
        violation,
        tuple(ordering.labels(seq)),
        profile,
    )


def check_with_ordering(seq: DegreeSequence, ordering: Ordering, variant=Variant.NO_LOOP,
                        reduced: bool = True, evaluator: str = "fast") -> CheckReport:
    """Decide realizability under a caller-chosen ordering with nonincreasing in-degrees.

    Any such ordering gives an exact answer. With ``reduced`` only the prefix
    lengths where the in-degree strictly drops (and ``n``) are tested.
    ``seq`` must already be free of ``(0, 0)`` pairs if the ordering refers
    to it directly.
    """
    variant = Variant(variant)
    early = _early_exit(seq, variant)
    if early:
        return early
    a = seq.a_array[ordering.perm]
    if a.shape[0] > 1 and np.any(a[:-1] < a[1:]):
        raise ValueError("ordering must list in-degrees in nonincreasing order")
    indices = reduced_indices(a) if reduced else None
    return _judge(seq, ordering, variant, indices, evaluator)


def digraph_check(seq: DegreeSequence, evaluator: str = "fast") -> CheckReport:
    """Decide whether ``seq`` is realizable by a digraph with no loops.

    The pairs are sorted stably by nonincreasing in-degree only; out-degree
    ties need not be resolved. Inequalities are tested only where the
    in-degree drops and at ``k = n``.

    Parameters
    ----------
    seq : DegreeSequence
    evaluator : {"fast", "naive"}
        Profile evaluator; both are exact.

    Examples
    --------
    >>> s = DegreeSequence.from_pairs([(3, 3), (1, 2), (3, 3), (3, 2)])
    >>> digraph_check(s).first_violation
    Violation(k=3, x=8, a=9)
    """
    early = _early_exit(seq, Variant.NO_LOOP)
    if early:
        return early
    core, _ = normalize(seq)
    return check_with_ordering(core, sort_decreasing_a(core), Variant.NO_LOOP, True, evaluator)


def chen_check(seq: DegreeSequence, evaluator: str = "fast") -> CheckReport:
    """Classical form: lexicographic sort, every ``k`` in ``1..n`` tested."""
    early = _early_exit(seq, Variant.NO_LOOP)
    if early:
        return early
    core, _ = normalize(seq)
    return _judge(core, sort_lexicographic(core), Variant.NO_LOOP, None, evaluator)


def loop_check(seq: DegreeSequence, evaluator: str = "fast") -> CheckReport:
    """Decide realizability when each vertex may carry one loop.

    Equivalently: is there a 0/1 matrix with row sums ``b`` and column sums
    ``a``, i.e. a bipartite graph with these two degree sides.
    """
    early = _early_exit(seq, Variant.LOOP)
    if early:
        return early
    core, _ = normalize(seq)
    return check_with_ordering(core, sort_decreasing_a(core), Variant.LOOP, True, evaluator)


def evaluate_ordering(seq: DegreeSequence, ordering: Ordering, variant=Variant.NO_LOOP,
                      evaluator: str = "fast") -> CheckReport:
    """Test every inequality under ``ordering`` exactly as given.

    A violation proves non-realizability for any ordering. Satisfying all
    inequalities proves realizability only when the in-degrees are
    nonincreasing in the ordering; otherwise ``verdict=Realizable`` here
    just means "no inequality fails".
    """
    variant = Variant(variant)
    early = _early_exit(seq, variant)
    if early:
        return early
    if len(ordering) != seq.n:
        raise ValueError(f"ordering has length {len(ordering)}, sequence has {seq.n}")
    return _judge(seq, ordering, variant, None, evaluator)


def erdos_gallai_check(d: Sequence[int]) -> CheckReport:
    """Decide whether ``d`` is the degree sequence of a simple graph.

    Tests ``sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`` after sorting
    nonincreasingly, only at ``k`` where ``d_k > d_{k+1}`` and at ``k = n``.
    An odd degree sum with no failing inequality is reported as
    ``NotBalanced``. The report's ``first_violation`` stores the right-hand side as ``x`` and
    the prefix sum as ``a``.
    """
    variant = Variant.UNDIRECTED
    try:
        seq = DegreeSequence(tuple(d), tuple(d))
        check_capacity(seq)
    except CapacityError as exc:
        return CheckReport(Verdict.INVALID_INPUT, variant, message=str(exc))
    n = seq.n
    order = sort_decreasing_a(seq)
    ds = seq.a_array[order.perm]
    ks = reduced_indices(ds)
    acc = np.cumsum(ds, dtype=np.int64)
    # suffix sums of min(d_i, k) for sorted d via searchsorted on the ascending copy
    asc = ds[::-1]
    asc_cum = np.concatenate(([0], np.cumsum(asc, dtype=np.int64)))
    violation = None
    for k in ks.tolist():
        tail = asc[: n - k]  # d_{k+1..n}, ascending
        below = int(np.searchsorted(tail, k, side="left"))
        rhs = k * (k - 1) + int(asc_cum[below]) + k * (n - k - below)
        if acc[k - 1] > rhs:
            violation = Violation(k, rhs, int(acc[k - 1]))
            break
    if violation is None and seq.sum_a % 2:
        return CheckReport(Verdict.NOT_BALANCED, variant, tuple(ks.tolist()),
                           ordering=tuple(order.labels(seq)),
                           message=f"degree sum {seq.sum_a} is odd")
    return CheckReport(
        Verdict.NOT_REALIZABLE if violation else Verdict.REALIZABLE,
        variant,
        tuple(ks.tolist()),
        violation,
        tuple(order.labels(seq)),
    )
