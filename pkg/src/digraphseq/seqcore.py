"""Degree-pair sequences, orderings, and inequality profiles.

For an ordering of the pairs, the no-loop profile at prefix length ``k`` is

    X(k) = sum_{i <= k} min(b_i, k - 1) + sum_{i > k} min(b_i, k)

and the loop profile is ``X(k) = sum_i min(b_i, k)``. Either one is compared
against the prefix sums ``A_k = a_1 + ... + a_k`` of the in-degrees taken in
the same ordering.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _backend

__all__ = [
    "CapacityError",
    "DegreePair",
    "DegreeSequence",
    "InequalityProfile",
    "Ordering",
    "Variant",
    "check_capacity",
    "normalize",
    "profile_fast",
    "profile_naive",
    "sort_decreasing_a",
    "sort_lexicographic",
]

INT64_MAX = 2**63 - 1


class Variant(str, enum.Enum):
    NO_LOOP = "no-loop"
    LOOP = "loop"
    UNDIRECTED = "undirected"

    def __str__(self):
        return self.value


class CapacityError(ValueError):
    """Input too large for exact 64-bit evaluation."""


class DegreePair(NamedTuple):
    a: int
    b: int
    label: int


def _as_degree_tuple(values, what):
    values = tuple(values)
    if all(type(v) is int for v in values):
        if values and min(values) < 0:
            raise ValueError(f"{what} must be nonnegative, got {min(values)}")
        return values
    out = []
    for v in values:
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise TypeError(f"{what} must be integers, got {v!r}")
        v = int(v)
        if v < 0:
            raise ValueError(f"{what} must be nonnegative, got {v}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """Prescribed ``(in-degree, out-degree)`` pairs with original labels.

    ``a`` holds in-degrees, ``b`` out-degrees. Labels default to the 1-based
    input positions and survive :func:`normalize`, so witnesses can always be
    reported on the caller's vertex names.
    """

    a: tuple = ()
    b: tuple = ()
    labels: tuple = None
    sum_a: int = field(init=False)
    sum_b: int = field(init=False)

    def __post_init__(self):
        a = _as_degree_tuple(self.a, "in-degrees")
        b = _as_degree_tuple(self.b, "out-degrees")
        if len(a) != len(b):
            raise ValueError(f"length mismatch: {len(a)} in-degrees, {len(b)} out-degrees")
        if self.labels is None:
            labels = tuple(range(1, len(a) + 1))
        else:
            labels = tuple(int(x) for x in self.labels)
            if len(labels) != len(a):
                raise ValueError("one label per pair is required")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be unique")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "sum_a", sum(a))
        object.__setattr__(self, "sum_b", sum(b))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "DegreeSequence":
        """Build from ``(a, b)`` tuples in input order."""
        pairs = [tuple(p) for p in pairs]
        for p in pairs:
            if len(p) != 2:
                raise ValueError(f"expected an (a, b) pair, got {p!r}")
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @classmethod
    def from_arrays(cls, a, b, labels=None) -> "DegreeSequence":
        return cls(tuple(np.asarray(a).tolist()), tuple(np.asarray(b).tolist()), labels)

    @classmethod
    def _trusted(cls, a: tuple, b: tuple, labels: tuple) -> "DegreeSequence":
        # caller guarantees validated int tuples, e.g. a sub-sequence of a checked one
        obj = object.__new__(cls)
        for name, value in (("a", a), ("b", b), ("labels", labels),
                            ("sum_a", sum(a)), ("sum_b", sum(b))):
            object.__setattr__(obj, name, value)
        return obj

    @cached_property
    def pairs(self) -> tuple:
        return tuple(DegreePair(*t) for t in zip(self.a, self.b, self.labels))

    @cached_property
    def a_array(self) -> np.ndarray:
        check_capacity(self)
        arr = np.array(self.a, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def b_array(self) -> np.ndarray:
        check_capacity(self)
        arr = np.array(self.b, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def balanced(self) -> bool:
        return self.sum_a == self.sum_b

    def __len__(self):
        return len(self.a)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return (self.a, self.b, self.labels) == (other.a, other.b, other.labels)

    def __hash__(self):
        return hash((self.a, self.b, self.labels))

    def __repr__(self):
        body = ", ".join(f"({x},{y})" for x, y in zip(self.a, self.b))
        return f"DegreeSequence([{body}])"

    def to_json(self) -> dict:
        return {
            "pairs": [[x, y] for x, y in zip(self.a, self.b)],
            "labels": list(self.labels),
        }


def check_capacity(seq) -> None:
    """Raise :class:`CapacityError` unless ``n * (1 + max degree)`` fits in int64.

    Every profile entry and prefix sum is bounded by that product.
    """
    a, b = seq.a, seq.b
    n = len(a)
    if n == 0:
        return
    top = max(max(a), max(b))
    if n * (1 + top) > INT64_MAX:
        raise CapacityError(
            f"n={n} with maximum degree {top} exceeds exact 64-bit evaluation"
        )


@dataclass(frozen=True, eq=False)
class Ordering:
    """A display order of a sequence: ``perm[p]`` is the 0-based index of the
    pair shown at display position ``p``."""

    perm: np.ndarray

    def __post_init__(self):
        perm = np.asarray(self.perm, dtype=np.int64)
        n = perm.shape[0]
        if perm.ndim != 1 or (n and not np.array_equal(np.sort(perm), np.arange(n))):
            raise ValueError("ordering must be a permutation of 0..n-1")
        perm = perm.copy()
        perm.flags.writeable = False
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(np.arange(n, dtype=np.int64))

    @classmethod
    def from_one_based(cls, positions: Sequence[int]) -> "Ordering":
        return cls(np.asarray(positions, dtype=np.int64) - 1)

    def one_based(self) -> list:
        return (self.perm + 1).tolist()

    def labels(self, seq: DegreeSequence) -> list:
        """Original labels of the pairs in display order."""
        if not len(self):
            return []
        return np.asarray(seq.labels, dtype=np.int64)[self.perm].tolist()

    def apply(self, values) -> np.ndarray:
        return np.asarray(values)[self.perm]

    def __len__(self):
        return int(self.perm.shape[0])

    def __eq__(self, other):
        if not isinstance(other, Ordering):
            return NotImplemented
        return np.array_equal(self.perm, other.perm)

    def __hash__(self):
        return hash(self.perm.tobytes())

    def __repr__(self):
        return f"Ordering({self.one_based()})"


def sort_decreasing_a(seq: DegreeSequence) -> Ordering:
    """Stable ordering with nonincreasing in-degrees; ties keep input order."""
    a = np.asarray(seq.a, dtype=np.int64) if seq.n else np.zeros(0, np.int64)
    return Ordering(np.argsort(-a, kind="stable"))


def sort_lexicographic(seq: DegreeSequence) -> Ordering:
    """Stable decreasing lexicographic ordering on ``(a, b)``."""
    if not seq.n:
        return Ordering.identity(0)
    a = np.asarray(seq.a, dtype=np.int64)
    b = np.asarray(seq.b, dtype=np.int64)
    return Ordering(np.lexsort((-b, -a)))


@dataclass(frozen=True, eq=False)
class InequalityProfile:
    """Left-hand sides ``x`` and in-degree prefix sums ``acc_a`` for one ordering.

    Both arrays are 0-based here (``x[k - 1]`` is ``X(k)``); :meth:`to_json`
    emits them as plain lists whose first entry is ``k = 1``.
    """

    x: np.ndarray
    acc_a: np.ndarray
    variant: Variant

    def __len__(self):
        return int(self.x.shape[0])

    def __eq__(self, other):
        if not isinstance(other, InequalityProfile):
            return NotImplemented
        return (
            self.variant == other.variant
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.acc_a, other.acc_a)
        )

    __hash__ = None

    def slack(self) -> np.ndarray:
        return self.x - self.acc_a

    def violations(self, indices=None) -> np.ndarray:
        """1-based ``k`` (restricted to ``indices`` if given) with ``X(k) < A_k``."""
        bad = np.flatnonzero(self.x < self.acc_a) + 1
        if indices is not None:
            bad = bad[np.isin(bad, np.asarray(indices))]
        return bad

    def to_json(self) -> dict:
        return {"variant": str(self.variant), "x": self.x.tolist(), "acc_a": self.acc_a.tolist()}


def _ordered(seq, ordering):
    if ordering is None:
        ordering = Ordering.identity(seq.n)
    if len(ordering) != seq.n:
        raise ValueError(f"ordering has length {len(ordering)}, sequence has {seq.n}")
    return seq.a_array[ordering.perm], seq.b_array[ordering.perm]


def _acc(a):
    return np.cumsum(a, dtype=np.int64)


def profile_naive(seq: DegreeSequence, ordering: Ordering | None = None,
                  variant=Variant.NO_LOOP) -> InequalityProfile:
    """Profile by direct summation of the defining minima, O(n^2)."""
    variant = Variant(variant)
    a, b = _ordered(seq, ordering)
    n = seq.n
    x = np.zeros(n, dtype=np.int64)
    for k in range(1, n + 1):
        if variant is Variant.LOOP:
            x[k - 1] = np.minimum(b, k).sum()
        else:
            x[k - 1] = np.minimum(b[:k], k - 1).sum() + np.minimum(b[k:], k).sum()
    return InequalityProfile(x, _acc(a), variant)


def profile_fast(seq: DegreeSequence, ordering: Ordering | None = None,
                 variant=Variant.NO_LOOP, backend=None) -> InequalityProfile:
    """Profile in linear time after the counting pass.

    Uses the double-counting identity ``sum_i min(b_i, k) = sum_{j<=k}
    |{i : b_i >= j}|`` and the first-difference recurrence
    ``X(k+1) - X(k) = |{i <= k : b_i >= k}| + |{i >= k+2 : b_i >= k+1}|``.
    ``backend`` picks ``"compiled"`` or ``"python"`` kernels; default is the
    one selected at import.
    """
    variant = Variant(variant)
    a, b = _ordered(seq, ordering)
    kernels = _backend.get(backend)
    if variant is Variant.LOOP:
        x = kernels.loop_profile(b)
    else:
        x = kernels.noloop_profile(b)
    return InequalityProfile(np.asarray(x, dtype=np.int64), _acc(a), variant)


def normalize(seq: DegreeSequence) -> tuple[DegreeSequence, list]:
    """Drop ``(0, 0)`` pairs; return the rest and the removed labels."""
    try:
        a, b = seq.a_array, seq.b_array
    except CapacityError:
        mask = [bool(x or y) for x, y in zip(seq.a, seq.b)]
    else:
        mask = ((a != 0) | (b != 0)).tolist()
    if all(mask):
        return seq, []
    removed = list(itertools.compress(seq.labels, (not m for m in mask)))
    out = DegreeSequence._trusted(
        tuple(itertools.compress(seq.a, mask)),
        tuple(itertools.compress(seq.b, mask)),
        tuple(itertools.compress(seq.labels, mask)),
    )
    return out, removed
