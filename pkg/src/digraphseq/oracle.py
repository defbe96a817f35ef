"""Independent ground truth: exhaustive search, max-flow, and instance generators.

Nothing here uses the characterization inequalities, so agreement with
:mod:`digraphseq.checkers` is real evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .realizer import Digraph
from .seqcore import DegreeSequence, Variant, check_capacity

__all__ = [
    "BRUTE_FORCE_MAX_N",
    "InstanceTooLarge",
    "OracleVerdict",
    "brute_force_realizable",
    "flow_realizable",
    "random_digraph_degrees",
    "random_sequence",
]

BRUTE_FORCE_MAX_N = 5


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleVerdict:
    realizable: bool
    witness: Digraph | None
    method: str


def _witness(seq, arcs):
    lab = seq.labels
    return Digraph(lab, frozenset((lab[u], lab[v]) for u, v in arcs))


def brute_force_realizable(seq: DegreeSequence, variant=Variant.NO_LOOP) -> OracleVerdict:
    """Search all 0/1 matrices with row sums ``b`` and column sums ``a``.

    Rows are filled one at a time; a branch is cut as soon as some column
    needs more ones than there are rows left to give them.
    """
    variant = Variant(variant)
    n = seq.n
    if n > BRUTE_FORCE_MAX_N:
        raise InstanceTooLarge(f"exhaustive search is limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if seq.sum_a != seq.sum_b:
        return OracleVerdict(False, None, "exhaustive")
    loops = variant is Variant.LOOP
    col = list(seq.a)
    chosen = []

    def feasible_after(row):
        left = n - row - 1
        for j in range(n):
            # rows still to come that may write column j
            cap = left - (0 if loops or j <= row else 1)
            if col[j] > cap:
                return False
        return True

    def fill(row):
        if row == n:
            return not any(col)
        allowed = [j for j in range(n) if col[j] and (loops or j != row)]
        for cols in combinations(allowed, seq.b[row]):
            for j in cols:
                col[j] -= 1
            if feasible_after(row):
                chosen.append(cols)
                if fill(row + 1):
                    return True
                chosen.pop()
            for j in cols:
                col[j] += 1
        return False

    if fill(0):
        arcs = [(i, j) for i, cols in enumerate(chosen) for j in cols]
        return OracleVerdict(True, _witness(seq, arcs), "exhaustive")
    return OracleVerdict(False, None, "exhaustive")


def flow_realizable(seq: DegreeSequence, variant=Variant.NO_LOOP) -> OracleVerdict:
    """Decide by integral max-flow on the tail/head bipartite network.

    source -> tail i (capacity b_i), tail i -> head j (capacity 1, i != j
    unless loops are allowed), head j -> sink (capacity a_j). The sequence is
    realizable iff the flow saturates every head.
    """
    variant = Variant(variant)
    check_capacity(seq)
    n = seq.n
    if seq.sum_a != seq.sum_b:
        return OracleVerdict(False, None, "flow")
    if n == 0 or seq.sum_a == 0:
        return OracleVerdict(True, _witness(seq, []), "flow")
    # no vertex can use more than n unit arcs, which keeps capacities in int32
    a = np.minimum(np.asarray(seq.a, dtype=np.int64), n)
    b = np.minimum(np.asarray(seq.b, dtype=np.int64), n)
    src, sink = 0, 2 * n + 1
    tails = np.arange(1, n + 1)
    heads = np.arange(n + 1, 2 * n + 1)
    ti, hj = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    keep = np.ones((n, n), dtype=bool) if variant is Variant.LOOP else ~np.eye(n, dtype=bool)
    mid_t, mid_h = tails[ti[keep]], heads[hj[keep]]
    rows = np.concatenate([np.full(n, src), mid_t, heads])
    cols = np.concatenate([tails, mid_h, np.full(n, sink)])
    caps = np.concatenate([b, np.ones(mid_t.shape[0], dtype=np.int64), a]).astype(np.int32)
    graph = csr_matrix((caps, (rows, cols)), shape=(2 * n + 2, 2 * n + 2))
    result = maximum_flow(graph, src, sink)
    if result.flow_value != seq.sum_a:
        return OracleVerdict(False, None, "flow")
    flow = result.flow.tocoo()
    sel = (flow.data > 0) & (flow.row >= 1) & (flow.row <= n) & (flow.col > n) & (flow.col <= 2 * n)
    arcs = list(zip((flow.row[sel] - 1).tolist(), (flow.col[sel] - n - 1).tolist()))
    return OracleVerdict(True, _witness(seq, arcs), "flow")


def random_digraph_degrees(n: int, max_degree: int, rng: np.random.Generator, p=None):
    """Degrees of a random loopless digraph on ``n`` vertices.

    Each off-diagonal arc is present independently with probability ``p``
    (default: drawn from ``rng``, scaled so the mean degree is at most
    ``max_degree``); arcs above ``max_degree`` at a vertex are then dropped.
    Returns in-degree and out-degree arrays.
    """
    if n < 2:
        return np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64)
    if p is None:
        p = min(1.0, max_degree / (n - 1)) * rng.random()
    cells = n * (n - 1)
    if cells <= 4_000_000:
        mask = rng.random((n, n)) < p
        np.fill_diagonal(mask, False)
        u, v = np.nonzero(mask)
    else:
        idx = rng.choice(cells, size=rng.binomial(cells, p), replace=False)
        u, r = np.divmod(idx, n - 1)
        v = r + (r >= u)
    perm = rng.permutation(u.shape[0])
    u, v = u[perm], v[perm]
    u = u.astype(np.int64)
    v = v.astype(np.int64)
    # trim out-degrees first, then in-degrees
    for first in (True, False):
        key = u if first else v
        if key.shape[0] == 0:
            break
        order = np.argsort(key, kind="stable")
        sk = key[order]
        starts = np.flatnonzero(np.r_[True, sk[1:] != sk[:-1]])
        counts = np.diff(np.r_[starts, sk.shape[0]])
        rank = np.arange(sk.shape[0]) - np.repeat(starts, counts)
        keep = np.zeros(key.shape[0], dtype=bool)
        keep[order[rank < max_degree]] = True
        u, v = u[keep], v[keep]
    a = np.bincount(v, minlength=n).astype(np.int64)
    b = np.bincount(u, minlength=n).astype(np.int64)
    return a, b


def random_sequence(n: int, max_degree: int | None = None, mode: str = "realizable",
                    seed=None) -> DegreeSequence:
    """Random degree sequence, deterministic for a given ``seed``.

    Modes
    -----
    realizable
        Degrees read off a random digraph; always a digraph sequence.
    arbitrary
        I.i.d. pairs in ``0..max_degree``; the larger total is then reduced
        by removing uniformly chosen degree units until both totals agree.
    perturbed
        A realizable sequence with one unit of in-degree moved between two
        random vertices; lands near the realizability boundary.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_degree is None:
        max_degree = max(n - 1, 0)
    rng = np.random.default_rng(seed)
    if mode in ("realizable", "perturbed"):
        a, b = random_digraph_degrees(n, max_degree, rng)
        if mode == "perturbed" and n >= 2:
            donors = np.flatnonzero(a > 0)
            if donors.shape[0]:
                i = rng.choice(donors)
                j = rng.choice(np.delete(np.arange(n), i))
                a[i] -= 1
                a[j] += 1
    elif mode == "arbitrary":
        a = rng.integers(0, max_degree + 1, size=n, dtype=np.int64)
        b = rng.integers(0, max_degree + 1, size=n, dtype=np.int64)
        diff = int(a.sum() - b.sum())
        if diff > 0:
            a = a - rng.multivariate_hypergeometric(a, diff)
        elif diff < 0:
            b = b - rng.multivariate_hypergeometric(b, -diff)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return DegreeSequence.from_arrays(a, b)
