"""Command-line front end.

Exit codes: 0 realizable (or, for ``--order as-given``, no inequality
fails), 1 not realizable, 2 unbalanced / invalid input / I/O error,
3 disagreement in ``crosscheck`` or ``bench``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import _backend
from .checkers import (
    Verdict,
    chen_check,
    digraph_check,
    erdos_gallai_check,
    evaluate_ordering,
    loop_check,
)
from .fileio import ParseError, parse_degree_list, parse_sequence, read_text
from .oracle import flow_realizable, random_digraph_degrees, random_sequence
from .realizer import kleitman_wang, kleitman_wang_arcs, loop_realize, loop_realize_arcs, verify_realization
from .seqcore import DegreeSequence, Ordering, Variant
from .threshold import corrected_ferrers_matrix, is_threshold

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3

AS_GIVEN_BANNER = (
    "note: --order as-given tests the inequalities in the input order only. "
    "Passing is a necessary condition, not a realizability decision."
)


def _exit_for(verdict):
    if verdict is Verdict.REALIZABLE:
        return EXIT_OK
    if verdict is Verdict.NOT_REALIZABLE:
        return EXIT_NO
    return EXIT_INPUT


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def _load(path, mode="digraph"):
    text = read_text(path)
    if mode == "graph":
        return parse_degree_list(text)
    return parse_sequence(text)


def _describe(report):
    v = report.first_violation
    if report.verdict is Verdict.NOT_REALIZABLE:
        return f"NotRealizable: inequality fails at k={v.k} (X={v.x} < A={v.a})"
    if report.message:
        return f"{report.verdict}: {report.message}"
    return str(report.verdict)


def cmd_check(args):
    data = _load(args.input, args.mode)
    as_given = args.order == "as-given"
    if args.mode == "graph":
        if as_given:
            _err("--order as-given is only available for digraph and loop modes")
            return EXIT_INPUT
        report = erdos_gallai_check(data)
    elif as_given:
        print(AS_GIVEN_BANNER, file=sys.stderr)
        variant = Variant.LOOP if args.mode == "loop" else Variant.NO_LOOP
        report = evaluate_ordering(data, Ordering.identity(data.n), variant)
    else:
        report = (loop_check if args.mode == "loop" else digraph_check)(data)
    if args.json:
        print(json.dumps(report.to_json()))
    elif as_given and report.verdict is Verdict.REALIZABLE:
        print("all inequalities satisfied (necessity only)")
    elif as_given and report.verdict is Verdict.NOT_REALIZABLE:
        v = report.first_violation
        print(f"inequality fails at k={v.k} (X={v.x} < A={v.a}); not realizable")
    else:
        print(_describe(report))
    return _exit_for(report.verdict)


def _write(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_realize(args):
    seq = _load(args.input)
    variant = Variant.LOOP if args.mode == "loop" else Variant.NO_LOOP
    result = (loop_realize if args.mode == "loop" else kleitman_wang)(seq)
    if result.graph is None:
        print(_describe(result.report), file=sys.stderr)
        return _exit_for(result.report.verdict)
    if not verify_realization(result.graph, seq, variant):
        _err("constructed witness failed verification")
        return EXIT_DISAGREE
    g = result.graph
    _write(g.to_matrix_text() if args.format == "matrix" else g.to_arc_text(), args.out)
    return EXIT_OK


def cmd_threshold(args):
    seq = _load(args.input)
    report = is_threshold(seq)
    if report.diagnostic:
        _err(report.diagnostic)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(f"is_threshold={'true' if report.is_threshold else 'false'}")
        print("tight_k=" + " ".join(map(str, report.tight_indices)))
    if args.emit_matrix and report.is_threshold:
        sys.stdout.write(corrected_ferrers_matrix(seq).to_matrix_text())
    return EXIT_OK if report.is_threshold else EXIT_NO


_MODES = ("realizable", "arbitrary", "perturbed")


def _crosscheck_one(job):
    n, max_degree, seed, index = job
    seq = random_sequence(n, max_degree, _MODES[index % 3], seed=[seed, index])
    votes = {
        "digraph_check": digraph_check(seq).realizable,
        "chen_check": chen_check(seq).realizable,
        "flow": flow_realizable(seq, Variant.NO_LOOP).realizable,
        "kleitman_wang": kleitman_wang_arcs(seq.a, seq.b) is not None,
    }
    loop_votes = {
        "loop_check": loop_check(seq).realizable,
        "flow_loop": flow_realizable(seq, Variant.LOOP).realizable,
        "loop_realize": loop_realize_arcs(seq.a, seq.b) is not None,
    }
    ok = len(set(votes.values())) == 1 and len(set(loop_votes.values())) == 1
    return ok, seq, {**votes, **loop_votes}


def cmd_crosscheck(args):
    max_degree = args.max_degree if args.max_degree is not None else max(1, args.n // 2)
    jobs = [(args.n, max_degree, args.seed, i) for i in range(args.count)]
    if args.workers > 1 and jobs:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_crosscheck_one, jobs, chunksize=32))
    else:
        results = [_crosscheck_one(j) for j in jobs]
    bad = [(seq, votes) for ok, seq, votes in results if not ok]
    print(f"{len(results) - len(bad)}/{len(results)} agree")
    for seq, votes in bad[:5]:
        print(f"  disagreement on {seq!r}: {votes}", file=sys.stderr)
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_bench(args):
    rng = np.random.default_rng(args.seed)
    t0 = time.perf_counter()
    a, b = random_digraph_degrees(args.n, args.max_degree, rng)
    seq = DegreeSequence.from_arrays(a, b)
    gen = time.perf_counter() - t0
    evaluators = ("naive", "fast") if args.evaluator == "both" else (args.evaluator,)
    verdicts = {}
    with _backend.using(None if args.backend == "auto" else args.backend) as kernels:
        print(f"n={args.n} arcs={seq.sum_a} generate={gen:.3f}s backend={kernels.name}")
        for ev in evaluators:
            t0 = time.perf_counter()
            report = digraph_check(seq, evaluator=ev)
            elapsed = time.perf_counter() - t0
            verdicts[ev] = report.verdict
            print(f"evaluator={ev} verdict={report.verdict} time={elapsed:.3f}s")
    if len(set(verdicts.values())) > 1:
        _err(f"evaluators disagree: {verdicts}")
        return EXIT_DISAGREE
    return _exit_for(next(iter(verdicts.values())))


def build_parser():
    p = argparse.ArgumentParser(prog="digraphseq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide realizability of a sequence file")
    c.add_argument("input", help="sequence file ('-' for stdin)")
    c.add_argument("--mode", choices=("digraph", "loop", "graph"), default="digraph")
    c.add_argument("--order", choices=("auto", "as-given"), default="auto")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("realize", help="construct and print a witness")
    r.add_argument("input")
    r.add_argument("--mode", choices=("digraph", "loop"), default="digraph")
    r.add_argument("--format", choices=("arcs", "matrix"), default="arcs")
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_realize)

    t = sub.add_parser("threshold", help="test for a threshold sequence")
    t.add_argument("input")
    t.add_argument("--emit-matrix", action="store_true")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_threshold)

    x = sub.add_parser("crosscheck", help="checkers vs flow oracle vs realizers on random instances")
    x.add_argument("--n", type=int, default=20)
    x.add_argument("--max-degree", type=int, default=None)
    x.add_argument("--count", type=int, default=100)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--workers", type=int, default=1)
    x.set_defaults(func=cmd_crosscheck)

    bch = sub.add_parser("bench", help="time the full check on a random realizable instance")
    bch.add_argument("--n", type=int, default=1_000_000)
    bch.add_argument("--max-degree", type=int, default=10)
    bch.add_argument("--evaluator", choices=("naive", "fast", "both"), default="fast")
    bch.add_argument("--backend", choices=("auto", "compiled", "python"), default="auto")
    bch.add_argument("--seed", type=int, default=0)
    bch.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, TypeError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    except OSError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
