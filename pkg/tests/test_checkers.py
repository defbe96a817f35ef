from itertools import combinations, permutations, product

import jsonschema
import numpy as np
import pytest

from digraphseq import (
    DegreeSequence,
    Ordering,
    Variant,
    Verdict,
    brute_force_realizable,
    chen_check,
    check_with_ordering,
    digraph_check,
    erdos_gallai_check,
    evaluate_ordering,
    flow_realizable,
    loop_check,
    normalize,
    random_sequence,
    sort_decreasing_a,
)
from digraphseq.checkers import REPORT_SCHEMA

from .conftest import balanced_sequences, random_decreasing_ordering

COUNTER = DegreeSequence.from_pairs([(3, 3), (1, 2), (3, 3), (3, 2)])


def seq_of(pairs):
    return DegreeSequence.from_pairs(pairs)


class TestDigraphCheck:
    def test_counterexample(self):
        r = digraph_check(COUNTER)
        assert r.verdict is Verdict.NOT_REALIZABLE
        assert r.first_violation == (3, 8, 9)

    @pytest.mark.parametrize(
        "pairs, verdict",
        [
            ([(1, 1), (1, 1)], Verdict.REALIZABLE),
            ([(1, 0), (0, 2)], Verdict.NOT_BALANCED),
            ([(2, 2), (2, 2), (2, 2)], Verdict.REALIZABLE),
            ([(1, 1)], Verdict.NOT_REALIZABLE),
            ([], Verdict.REALIZABLE),
        ],
    )
    def test_examples(self, pairs, verdict):
        assert digraph_check(seq_of(pairs)).verdict is verdict

    def test_checked_indices_are_reduced_set(self):
        r = digraph_check(COUNTER)
        # a in stable decreasing order is (3, 3, 3, 1): drop after position 3, plus n
        assert r.checked_indices == (3, 4)
        assert r.ordering == (1, 3, 4, 2)

    def test_zero_pairs_are_ignored(self):
        base = seq_of([(1, 1), (1, 1)])
        padded = seq_of([(0, 0), (1, 1), (0, 0), (1, 1)])
        assert digraph_check(padded).verdict is digraph_check(base).verdict is Verdict.REALIZABLE
        assert digraph_check(padded).ordering == (2, 4)

    def test_capacity_is_invalid_input(self):
        huge = 2**62
        r = digraph_check(DegreeSequence((huge, 0), (0, huge)))
        assert r.verdict is Verdict.INVALID_INPUT and r.first_violation is None

    def test_naive_evaluator_agrees(self, rng):
        for i in range(200):
            s = random_sequence(int(rng.integers(0, 30)), mode=("perturbed", "arbitrary")[i % 2], seed=i)
            fast, naive = digraph_check(s), digraph_check(s, "naive")
            assert (fast.verdict, fast.first_violation) == (naive.verdict, naive.first_violation)


class TestChenCheck:
    def test_counterexample(self):
        r = chen_check(COUNTER)
        assert r.verdict is Verdict.NOT_REALIZABLE and r.first_violation.k == 3
        assert r.checked_indices == (1, 2, 3, 4)

    def test_two_cycle_is_tight(self):
        r = chen_check(seq_of([(1, 1), (1, 1)]))
        assert r.realizable
        assert r.profile.x.tolist() == [1, 2] == r.profile.acc_a.tolist()

    def test_empty(self):
        assert chen_check(DegreeSequence()).realizable

    def test_agrees_with_digraph_check_exhaustive(self):
        for s in balanced_sequences(4, 3):
            assert chen_check(s).verdict is digraph_check(s).verdict


class TestEvaluateOrdering:
    def test_counterexample_given_order_passes(self):
        r = evaluate_ordering(COUNTER, Ordering.identity(4))
        assert r.verdict is Verdict.REALIZABLE
        assert r.profile.x.tolist() == [3, 6, 8, 10]
        assert r.profile.acc_a.tolist() == [3, 4, 7, 10]
        assert r.checked_indices == (1, 2, 3, 4)

    def test_empty(self):
        assert evaluate_ordering(DegreeSequence(), Ordering.identity(0)).realizable

    def test_necessity_under_every_ordering(self):
        for s in balanced_sequences(4, 3, min_n=1):
            if not flow_realizable(s).realizable:
                continue
            for perm in permutations(range(s.n)):
                r = evaluate_ordering(s, Ordering(np.array(perm)))
                assert r.realizable, (s, perm)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            evaluate_ordering(COUNTER, Ordering.identity(3))


class TestLoopCheck:
    def test_single_loop(self):
        assert loop_check(seq_of([(1, 1)])).realizable

    def test_two_zero_two(self):
        r = loop_check(seq_of([(2, 0), (0, 2)]))
        assert r.verdict is Verdict.NOT_REALIZABLE
        assert r.first_violation == (1, 1, 2)

    def test_three_vertices(self):
        assert loop_check(seq_of([(2, 1), (1, 2), (1, 1)])).realizable

    def test_agrees_with_brute_force_exhaustive(self):
        for s in balanced_sequences(3, 3):
            assert loop_check(s).realizable == brute_force_realizable(s, Variant.LOOP).realizable


def graph_degree_sequences(n):
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for bit, (u, v) in enumerate(pairs):
            if mask >> bit & 1:
                deg[u] += 1
                deg[v] += 1
        seen.add(tuple(deg))
    return seen


class TestErdosGallai:
    @pytest.mark.parametrize("d, verdict", [((1, 1), True), ((3, 1, 1), False), ((2, 2, 2), True)])
    def test_examples(self, d, verdict):
        r = erdos_gallai_check(d)
        assert r.realizable is verdict
        if not verdict:
            assert r.verdict is Verdict.NOT_REALIZABLE

    @pytest.mark.parametrize("n", range(0, 6))
    def test_against_enumerated_graphs(self, n):
        graphical = graph_degree_sequences(n)
        for d in product(range(n + 1), repeat=n):
            assert erdos_gallai_check(d).realizable == (d in graphical), d

    def test_odd_sum_without_violation(self):
        r = erdos_gallai_check([1, 1, 1])
        assert r.verdict is Verdict.NOT_BALANCED and r.first_violation is None


class TestReportInvariants:
    def test_violation_iff_not_realizable(self, rng):
        for i in range(500):
            s = random_sequence(int(rng.integers(0, 25)), mode=("perturbed", "arbitrary", "realizable")[i % 3], seed=i)
            for check in (digraph_check, chen_check, loop_check):
                r = check(s)
                assert (r.first_violation is not None) == (r.verdict is Verdict.NOT_REALIZABLE)
                if r.first_violation:
                    v = r.first_violation
                    assert v.x < v.a and v.k in r.checked_indices
                    assert v.x == r.profile.x[v.k - 1] and v.a == r.profile.acc_a[v.k - 1]
                    earlier = [k for k in r.checked_indices if k < v.k]
                    assert all(r.profile.x[k - 1] >= r.profile.acc_a[k - 1] for k in earlier)

    def test_reduced_indices_formula(self, rng):
        for i in range(200):
            s = random_sequence(int(rng.integers(1, 25)), max_degree=4, mode="arbitrary", seed=i)
            r = digraph_check(s)
            if r.verdict in (Verdict.NOT_BALANCED, Verdict.INVALID_INPUT):
                continue
            core, _ = normalize(s)
            a = [core.a[core.labels.index(lab)] for lab in r.ordering]
            expect = [k for k in range(1, len(a)) if a[k - 1] > a[k]] + ([len(a)] if a else [])
            assert list(r.checked_indices) == expect

    def test_json_schema(self, rng):
        reports = [digraph_check(COUNTER), chen_check(COUNTER), loop_check(COUNTER),
                   digraph_check(seq_of([(1, 0)])), erdos_gallai_check([3, 1, 1]),
                   evaluate_ordering(COUNTER, Ordering.identity(4)), digraph_check(DegreeSequence())]
        for r in reports:
            jsonschema.validate(r.to_json(), REPORT_SCHEMA)
        doc = digraph_check(COUNTER).to_json()
        assert doc["violation"] == {"k": 3, "x": 8, "a": 9}
        assert doc["checked_k"] == [3, 4] and doc["ordering"] == [1, 3, 4, 2]

    def test_check_with_ordering_rejects_increasing_a(self):
        with pytest.raises(ValueError):
            check_with_ordering(COUNTER, Ordering.identity(4))


def test_reduced_matches_full(rng):
    modes = ("perturbed", "arbitrary", "realizable")
    for i in range(2000):
        n = int(rng.integers(1, 51))
        s, _ = normalize(random_sequence(n, int(rng.integers(1, n + 1)), modes[i % 3], seed=[7, i]))
        if not s.balanced:
            continue
        o = random_decreasing_ordering(s, rng)
        for variant in (Variant.NO_LOOP, Variant.LOOP):
            full = check_with_ordering(s, o, variant, reduced=False)
            red = check_with_ordering(s, o, variant, reduced=True)
            assert full.verdict is red.verdict


def test_semi_regular_constant_a(rng):
    for _ in range(300):
        n = int(rng.integers(1, 60))
        c = int(rng.integers(0, n))
        b = np.full(n, c)
        for _ in range(3 * n):
            i, j = rng.integers(0, n, 2)
            if b[i] > 0 and b[j] < n - 1 and i != j:
                b[i] -= 1
                b[j] += 1
        s = DegreeSequence.from_arrays(np.full(n, c), b)
        assert digraph_check(s).realizable


def test_semi_regular_constant_b_via_oracle(rng):
    # mirror reading: constant out-degree; decided by the flow oracle, not assumed
    for _ in range(200):
        n = int(rng.integers(1, 30))
        c = int(rng.integers(0, n))
        a = np.full(n, c)
        for _ in range(3 * n):
            i, j = rng.integers(0, n, 2)
            if a[i] > 0 and a[j] < n - 1 and i != j:
                a[i] -= 1
                a[j] += 1
        s = DegreeSequence.from_arrays(a, np.full(n, c))
        assert digraph_check(s).realizable == flow_realizable(s).realizable


def test_stable_sort_is_used_not_lexicographic():
    s = seq_of([(2, 0), (2, 3), (1, 1), (1, 2)])
    assert digraph_check(s).ordering == tuple(l + 1 for l in sort_decreasing_a(s).perm.tolist())
