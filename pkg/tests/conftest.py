from itertools import permutations, product

import numpy as np
import pytest

from digraphseq import DegreeSequence, Ordering

ACCEPTANCE_LINES = []


def balanced_sequences(max_n=4, max_deg=3, min_n=0):
    """Every balanced sequence with n in [min_n, max_n] and degrees <= max_deg."""
    for n in range(min_n, max_n + 1):
        by_sum = {}
        for vec in product(range(max_deg + 1), repeat=n):
            by_sum.setdefault(sum(vec), []).append(vec)
        for vecs in by_sum.values():
            for a in vecs:
                for b in vecs:
                    yield DegreeSequence(a, b)


def decreasing_orderings(seq):
    """All orderings with nonincreasing in-degree (within-block permutations)."""
    a = np.asarray(seq.a)
    base = np.argsort(-a, kind="stable")
    blocks = np.split(base, np.flatnonzero(np.diff(a[base])) + 1) if seq.n else []
    for choice in product(*(permutations(bl.tolist()) for bl in blocks)):
        yield Ordering(np.array([i for part in choice for i in part], dtype=np.int64))


def random_decreasing_ordering(seq, rng):
    a = np.asarray(seq.a)
    keys = rng.random(seq.n)
    return Ordering(np.lexsort((keys, -a)))


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


@pytest.fixture
def criterion():
    def record(number, passed, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
