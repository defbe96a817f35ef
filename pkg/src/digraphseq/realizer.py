"""Witness construction and verification.

:func:`kleitman_wang` builds a loopless digraph, :func:`loop_realize` a
digraph with at most one loop per vertex. Both report on the caller's
original labels; ``(0, 0)`` pairs come back as isolated vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .checkers import CheckReport, Verdict, digraph_check, loop_check
from .seqcore import DegreeSequence, Variant, normalize

__all__ = [
    "Digraph",
    "RealizationError",
    "RealizationResult",
    "kleitman_wang",
    "kleitman_wang_arcs",
    "loop_realize",
    "loop_realize_arcs",
    "realization_errors",
    "verify_realization",
]


class RealizationError(RuntimeError):
    """The constructive reduction disagreed with the inequality checker."""


@dataclass(frozen=True)
class Digraph:
    """Labeled 0/1 adjacency structure; ``arcs`` holds ``(tail, head)`` labels."""

    vertices: tuple
    arcs: frozenset

    @classmethod
    def from_arcs(cls, n_or_vertices, arcs: Iterable) -> "Digraph":
        if isinstance(n_or_vertices, int):
            vertices = tuple(range(1, n_or_vertices + 1))
        else:
            vertices = tuple(n_or_vertices)
        return cls(vertices, frozenset((int(u), int(v)) for u, v in arcs))

    @classmethod
    def from_matrix(cls, matrix, vertices=None) -> "Digraph":
        m = np.asarray(matrix)
        n = m.shape[0]
        vertices = tuple(range(1, n + 1)) if vertices is None else tuple(vertices)
        rows, cols = np.nonzero(m)
        return cls(vertices, frozenset((vertices[r], vertices[c]) for r, c in zip(rows.tolist(), cols.tolist())))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.arcs)

    def in_degrees(self) -> dict:
        c = Counter(v for _, v in self.arcs)
        return {x: c.get(x, 0) for x in self.vertices}

    def out_degrees(self) -> dict:
        c = Counter(u for u, _ in self.arcs)
        return {x: c.get(x, 0) for x in self.vertices}

    def matrix(self) -> np.ndarray:
        index = {x: i for i, x in enumerate(self.vertices)}
        m = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.arcs:
            m[index[u], index[v]] = 1
        return m

    def to_arc_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in sorted(self.arcs))

    def to_matrix_text(self) -> str:
        return "".join("".join("1" if x else "0" for x in row) + "\n" for row in self.matrix())


@dataclass(frozen=True)
class RealizationResult:
    graph: Digraph | None
    report: CheckReport

    @property
    def realizable(self) -> bool:
        return self.graph is not None


def realization_errors(graph: Digraph, seq: DegreeSequence, variant=Variant.NO_LOOP) -> list:
    """Human-readable reasons ``graph`` fails to realize ``seq``; empty if it does."""
    variant = Variant(variant)
    errors = []
    if graph.n != seq.n:
        return [f"graph has {graph.n} vertices, sequence has {seq.n}"]
    if set(graph.vertices) != set(seq.labels):
        return ["graph vertex labels differ from sequence labels"]
    verts = set(graph.vertices)
    for u, v in graph.arcs:
        if u not in verts or v not in verts:
            errors.append(f"arc ({u},{v}) leaves the vertex set")
        elif u == v and variant is not Variant.LOOP:
            errors.append(f"loop at {u} is forbidden")
    if errors:
        return errors
    indeg, outdeg = graph.in_degrees(), graph.out_degrees()
    for p in seq.pairs:
        if indeg[p.label] != p.a:
            errors.append(f"vertex {p.label}: in-degree {indeg[p.label]} != {p.a}")
        if outdeg[p.label] != p.b:
            errors.append(f"vertex {p.label}: out-degree {outdeg[p.label]} != {p.b}")
    return errors


def verify_realization(graph: Digraph, seq: DegreeSequence, variant=Variant.NO_LOOP) -> bool:
    """True iff ``graph`` has exactly the prescribed degrees and respects the loop rule.

    Arcs are a set, so parallel arcs cannot occur.
    """
    return not realization_errors(graph, seq, variant)


def kleitman_wang_arcs(a, b) -> list | None:
    """Run the Kleitman-Wang reduction on 0-based vertices.

    Each round takes the vertex with the largest residual ``(out, in)`` and
    sends all its remaining out-arcs to the vertices with the largest residual
    ``(in, out)``; ties go to the smaller index. Returns the arc list, or
    ``None`` when some round runs out of heads.
    """
    n = len(a)
    if sum(a) != sum(b):
        return None
    res_a, res_b = list(a), list(b)
    arcs = []
    while True:
        pivot, best = -1, None
        for i in range(n):
            if res_b[i] and (best is None or (res_b[i], res_a[i]) > best):
                pivot, best = i, (res_b[i], res_a[i])
        if pivot < 0:
            break
        need = res_b[pivot]
        heads = sorted((j for j in range(n) if j != pivot), key=lambda j: (-res_a[j], -res_b[j], j))[:need]
        if len(heads) < need or res_a[heads[-1]] == 0:
            return None
        for j in heads:
            res_a[j] -= 1
            arcs.append((pivot, j))
        res_b[pivot] = 0
    if any(res_a):
        return None
    return arcs


def loop_realize_arcs(a, b) -> list | None:
    """Column packing for the loop model on 0-based vertices.

    Columns (heads) are filled in nonincreasing in-degree order, each from the
    rows with the largest remaining out-degree; ties go to the smaller index.
    """
    n = len(a)
    if sum(a) != sum(b):
        return None
    res_b = list(b)
    cols = sorted(range(n), key=lambda j: -a[j])
    arcs = []
    for j in cols:
        need = a[j]
        if not need:
            continue
        rows = sorted(range(n), key=lambda i: (-res_b[i], i))[:need]
        if len(rows) < need or res_b[rows[-1]] == 0:
            return None
        for i in rows:
            res_b[i] -= 1
            arcs.append((i, j))
    if any(res_b):
        return None
    return arcs


def _realize(seq, checker, builder, variant):
    report = checker(seq)
    if report.verdict in (Verdict.NOT_BALANCED, Verdict.INVALID_INPUT):
        return RealizationResult(None, report)
    core, _ = normalize(seq)
    found = builder(core.a, core.b)
    if (found is not None) != report.realizable:
        raise RealizationError(
            f"{builder.__name__} {'succeeded' if found is not None else 'failed'} "
            f"but checker says {report.verdict} for {seq!r}"
        )
    if found is None:
        return RealizationResult(None, report)
    lab = core.labels
    graph = Digraph(seq.labels, frozenset((lab[u], lab[v]) for u, v in found))
    problems = realization_errors(graph, seq, variant)
    if problems:
        raise RealizationError(f"{builder.__name__} produced an invalid witness: {problems[:3]}")
    return RealizationResult(graph, report)


def kleitman_wang(seq: DegreeSequence) -> RealizationResult:
    """Loopless realization of ``seq``, or the failing check report."""
    return _realize(seq, digraph_check, kleitman_wang_arcs, Variant.NO_LOOP)


def loop_realize(seq: DegreeSequence) -> RealizationResult:
    """Realization allowing one loop per vertex (row sums ``b``, column sums ``a``)."""
    return _realize(seq, loop_check, loop_realize_arcs, Variant.LOOP)
