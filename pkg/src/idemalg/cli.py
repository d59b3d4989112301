"""Command-line front end.

Subcommands: ``solve`` runs a path or Bellman problem from a file (or
stdin with ``-``); ``check-axioms`` samples the semiring laws;
``integrate`` evaluates plain or weighted idempotent integrals of a
function literal; ``fuzzy`` applies set operations or possibility to
fuzzy-set literals.

Exit codes: 0 on success, 2 for parse or validation problems, 3 when a
computation diverges (for min-plus, a negative cycle).  With
``--format json`` the output, including error documents, goes to stdout
with a fixed key order; text-mode errors go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .analysis import IdempotentMeasure, SemiringFunction, integrate, integrate_against
from .fuzzy import FuzzySet
from .graphs import (GraphProblem, ParseError, ResultDocument, _weight_json,
                     has_interval_tokens, matrix_to_problem, parse_graph,
                     parse_matrix, run_problem)
from .intervals import Interval, interval_extension
from .linalg import DivergenceError, SemiringMatrix
from .semirings import (CarrierError, SEMIRINGS, UnsupportedOperationError,
                        check_axioms, lookup)

__all__ = ["main"]


def _fmt_scalar(v: float) -> str:
    if v == float("inf"):
        return "inf"
    if v == float("-inf"):
        return "-inf"
    return format(v, "g")


def _fmt_entry(e) -> str:
    if isinstance(e, Interval):
        return f"[{_fmt_scalar(e.lo)}, {_fmt_scalar(e.hi)}]"
    return _fmt_scalar(e)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(fmt: str, doc: dict, text: str) -> int:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)
    return 0


def _emit_error(fmt: str, kind: str, detail: str, extra: dict | None, code: int) -> int:
    if fmt == "json":
        doc = {"error": kind, "detail": detail}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2))
    else:
        print(f"error ({kind}): {detail}", file=sys.stderr)
    return code


def _unconverged_witness(problem: GraphProblem, args, rhs) -> tuple | None:
    # one extra iteration exposes an entry that is still moving
    doc = run_problem(problem, method=args.method,
                      max_iter=(args.max_iter or problem.nodes) + 1, rhs=rhs)
    return doc


def _cmd_solve(args) -> int:
    ring = lookup(args.ring) if args.ring else None
    text = _read_input(args.input)
    rhs = None
    if args.query == "bellman":
        if ring is None:
            raise ValueError("--ring is required for the bellman query")
        rhs_text = _read_input(args.rhs) if args.rhs else None
        interval_mode = has_interval_tokens(text) or (
            rhs_text is not None and has_interval_tokens(rhs_text))
        final = interval_extension(ring) if interval_mode else ring
        h = parse_matrix(text, final)
        problem = matrix_to_problem(h, "bellman")
        if rhs_text is not None:
            rhs = parse_matrix(rhs_text, final)
    else:
        if args.rhs:
            raise ValueError("--rhs only applies to the bellman query")
        problem = parse_graph(text, ring=ring, query=args.query)

    doc = run_problem(problem, method=args.method, max_iter=args.max_iter, rhs=rhs)
    if not doc.converged:
        extra = {"method": doc.method, "iterations": doc.iterations}
        one_more = run_problem(problem, method=args.method,
                               max_iter=doc.iterations + 1, rhs=rhs)
        for i in range(doc.solution.rows):
            for j in range(doc.solution.cols):
                if doc.solution[i, j] != one_more.solution[i, j]:
                    entry = [i, j]
                    if problem.query.startswith("dist:"):
                        entry = [j]  # a row vector: name the node still moving
                    extra["entry"] = entry
                    break
            if "entry" in extra:
                break
        return _emit_error(args.format, "divergence",
                           f"no fixed point within {doc.iterations} iterations of {doc.method}",
                           extra, code=3)

    body = doc.to_dict(include_timing=args.timing)
    header = (f"ring: {body['problem']['ring']}  query: {problem.query}  "
              f"method: {doc.method}  iterations: {doc.iterations}  converged: yes")
    if problem.query.startswith("dist:"):
        lines = [" ".join(_fmt_entry(e) for e in doc.solution.row(0))]
    else:
        lines = [" ".join(_fmt_entry(e) for e in doc.solution.row(i))
                 for i in range(doc.solution.rows)]
    if args.timing:
        header += f"  elapsed_ms: {body['elapsed_ms']}"
    return _emit(args.format, body, "\n".join([header] + lines))


def _cmd_check_axioms(args) -> int:
    ring = lookup(args.ring)
    if args.trials < 1:
        raise ValueError(f"--trials must be positive, got {args.trials}")
    seed = os.environ.get("IDEMPOTENT_SEED")
    rng = random.Random(int(seed)) if seed is not None else random.Random()
    report = check_axioms(ring, trials=args.trials, rng=rng)
    return _emit(args.format, report.to_dict(), str(report))


def _cmd_integrate(args) -> int:
    ring = lookup(args.ring)
    phi = SemiringFunction.parse(ring, args.function)
    doc = {"ring": ring.name}
    if args.density is not None:
        measure = IdempotentMeasure(SemiringFunction.parse(ring, args.density))
        value = integrate_against(phi, measure)
        doc.update(operation="integrate-against", function=phi.to_literal(),
                   density=measure.density.to_literal())
    else:
        value = integrate(phi)
        doc.update(operation="integrate", function=phi.to_literal())
    doc["value"] = _weight_json(value)
    return _emit(args.format, doc, _fmt_entry(value))


def _cmd_fuzzy(args) -> int:
    ring = lookup(args.ring)
    a = FuzzySet(SemiringFunction.parse(ring, args.a))
    doc = {"ring": ring.name, "operation": args.operation, "a": a.membership.to_literal()}
    if args.operation == "possibility":
        distribution = IdempotentMeasure(SemiringFunction.parse(ring, args.b))
        value = a.possibility(distribution)
        doc["density"] = distribution.density.to_literal()
        doc["result"] = _weight_json(value)
        return _emit(args.format, doc, _fmt_entry(value))
    b = FuzzySet(SemiringFunction.parse(ring, args.b))
    result = a.union(b) if args.operation == "union" else a.intersection(b)
    doc["b"] = b.membership.to_literal()
    doc["result"] = {p: _weight_json(v) for p, v in result.membership.items()}
    return _emit(args.format, doc, result.membership.to_literal())


def _add_format(parser):
    parser.add_argument("--format", choices=["text", "json"], default="text",
                        help="output format (default: text)")


def _build_parser() -> argparse.ArgumentParser:
    ring_names = ", ".join(sorted(SEMIRINGS))
    parser = argparse.ArgumentParser(
        prog="idemalg",
        description="Algebraic path problems and idempotent-semiring calculations.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a graph or Bellman problem")
    solve.add_argument("input", help="edge-list/JSON file for graph queries, "
                                     "dense matrix file for bellman; - for stdin")
    solve.add_argument("--ring", help=f"semiring name: {ring_names}")
    solve.add_argument("--query", required=True,
                       help="closure, dist:<source>, or bellman")
    solve.add_argument("--method", choices=["star", "jacobi", "gauss-seidel"],
                       default="star", help="solution method (default: star)")
    solve.add_argument("--max-iter", type=int, default=None,
                       help="iteration cap for the iterative methods (default: node count)")
    solve.add_argument("--rhs", help="matrix file with the bellman right-hand side "
                                     "(default: identity)")
    solve.add_argument("--timing", action="store_true",
                       help="include elapsed milliseconds in the output")
    _add_format(solve)
    solve.set_defaults(handler=_cmd_solve)

    axioms = sub.add_parser("check-axioms", help="sample the semiring laws")
    axioms.add_argument("--ring", required=True, help=f"semiring name: {ring_names}")
    axioms.add_argument("--trials", type=int, default=1000,
                        help="random triples to sample (default: 1000)")
    _add_format(axioms)
    axioms.set_defaults(handler=_cmd_check_axioms)

    integ = sub.add_parser("integrate", help="idempotent integral of a function literal")
    integ.add_argument("--ring", required=True, help=f"semiring name: {ring_names}")
    integ.add_argument("function", help="function literal, e.g. \"a:1 b:5 c:inf\"")
    integ.add_argument("--density", help="density literal for the weighted integral")
    _add_format(integ)
    integ.set_defaults(handler=_cmd_integrate)

    fuzzy = sub.add_parser("fuzzy", help="fuzzy-set operations on set literals")
    fuzzy.add_argument("--ring", required=True, help=f"semiring name: {ring_names}")
    fuzzy.add_argument("operation", choices=["union", "intersect", "possibility"])
    fuzzy.add_argument("a", help="fuzzy-set literal, e.g. \"rain:0.6 storm:1\"")
    fuzzy.add_argument("b", help="second set literal (the density, for possibility)")
    _add_format(fuzzy)
    fuzzy.set_defaults(handler=_cmd_fuzzy)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        return args.handler(args)
    except ParseError as e:
        extra = {"line": e.line} if e.line is not None else None
        return _emit_error(fmt, "parse", str(e), extra, code=2)
    except DivergenceError as e:
        extra = {}
        if e.entry is not None:
            extra["entry"] = list(e.entry)
        if e.bound is not None:
            extra["bound"] = e.bound
        return _emit_error(fmt, "divergence", str(e), extra, code=3)
    except (CarrierError, UnsupportedOperationError, OSError, ValueError) as e:
        return _emit_error(fmt, "validation", str(e), None, code=2)


if __name__ == "__main__":
    sys.exit(main())
