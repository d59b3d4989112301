"""Weighted-graph problems: parsing, path closures, and solver dispatch.

Two input formats are supported.  The edge-list text format starts with a
node-count line followed by ``from to weight`` triples; blank lines and
``#`` comments are skipped, ``inf``/``-inf`` are valid weights, ``_`` is
the ring's zero, and interval weights are written ``lo,hi``.  The JSON
format is a document with ``nodes``, ``edges``, and optional ``ring`` and
``query`` fields.  Duplicate edges are combined with semiring addition,
so parsing is order-independent.

The adjacency matrix of a problem has the edge weight at (from, to) and
the ring's zero where no edge exists; its star closure holds every
path-sum at once, which is what all queries are answered from.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from time import perf_counter

from .intervals import Interval, interval_extension, is_interval_semiring
from .linalg import (BellmanSolution, SemiringMatrix, _star_counted,
                     solve_bellman_gauss_seidel, solve_bellman_interval,
                     solve_bellman_jacobi)
from .semirings import CarrierError, Semiring, lookup

__all__ = ["ParseError", "GraphProblem", "ResultDocument", "parse_element",
           "parse_graph", "parse_matrix", "has_interval_tokens",
           "shortest_paths", "run_problem"]

_QUERY_RE = re.compile(r"^(closure|bellman|dist:\d+)$")
METHODS = ("star", "jacobi", "gauss-seidel")


class ParseError(ValueError):
    """Malformed problem input; carries the offending line when known."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


def _parse_scalar(ring: Semiring, token: str):
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"not a number: {token!r}") from None
    return ring.require(value)


def parse_element(ring: Semiring, token: str):
    """Parse one element token for ``ring``.

    ``_`` is the ring's zero.  For an interval ring, ``lo,hi`` and
    ``[lo, hi]`` denote an interval and a bare scalar denotes the
    degenerate interval on it.
    """
    token = token.strip()
    if token == "_":
        return ring.zero
    if is_interval_semiring(ring):
        base = ring.zero.base
        inner = token[1:-1] if token.startswith("[") and token.endswith("]") else token
        if "," in inner:
            parts = inner.split(",")
            if len(parts) != 2:
                raise ParseError(f"bad interval token {token!r}: expected lo,hi")
            lo = _parse_scalar(base, parts[0])
            hi = _parse_scalar(base, parts[1])
            return Interval(lo, hi, base)
        return Interval.degenerate(_parse_scalar(base, inner), base)
    return _parse_scalar(ring, token)


def _scalar_text(v: float) -> str:
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return repr(float(v))


def _weight_text(w) -> str:
    if isinstance(w, Interval):
        return f"{_scalar_text(w.lo)},{_scalar_text(w.hi)}"
    return _scalar_text(w)


def _scalar_json(v: float):
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return float(v)


def _weight_json(w):
    if isinstance(w, Interval):
        return [_scalar_json(w.lo), _scalar_json(w.hi)]
    return _scalar_json(w)


def _ring_name(ring: Semiring) -> str:
    return ring.zero.base.name if is_interval_semiring(ring) else ring.name


@dataclass(frozen=True)
class GraphProblem:
    """A weighted directed graph, the semiring to read it in, and a query.

    ``query`` is one of ``closure``, ``dist:<source>`` or ``bellman``.
    Edges are (from, to, weight) with node indices below ``nodes``;
    weights must lie in the ring's carrier (possibly intervals over it).
    """

    nodes: int
    edges: tuple
    ring: Semiring
    query: str = "closure"

    def __post_init__(self):
        if not isinstance(self.nodes, int) or self.nodes < 1:
            raise ValueError(f"node count must be a positive integer, got {self.nodes!r}")
        if not _QUERY_RE.match(self.query):
            raise ValueError(f"unknown query {self.query!r}; expected closure, dist:<src> or bellman")
        if self.query.startswith("dist:"):
            src = int(self.query[5:])
            if src >= self.nodes:
                raise ValueError(f"source {src} out of range for {self.nodes} nodes")
        edges = []
        for edge in self.edges:
            try:
                u, v, w = edge
            except (TypeError, ValueError):
                raise ValueError(f"edges must be (from, to, weight) triples, got {edge!r}") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"node indices must be integers, got {edge!r}")
            if not (0 <= u < self.nodes and 0 <= v < self.nodes):
                raise ValueError(f"edge {u}->{v} out of range for {self.nodes} nodes")
            edges.append((u, v, self.ring.require(w)))
        object.__setattr__(self, "edges", tuple(sorted(edges, key=lambda e: (e[0], e[1]))))

    @property
    def source(self) -> int:
        if not self.query.startswith("dist:"):
            raise ValueError(f"query {self.query!r} has no source node")
        return int(self.query[5:])

    def to_matrix(self) -> SemiringMatrix:
        """Adjacency matrix: weight at (from, to), zero where no edge."""
        n = self.nodes
        data = [self.ring.zero] * (n * n)
        for u, v, w in self.edges:
            data[u * n + v] = self.ring.add(data[u * n + v], w)
        return SemiringMatrix(n, n, data, self.ring)

    def to_edge_text(self) -> str:
        lines = [str(self.nodes)]
        lines.extend(f"{u} {v} {_weight_text(w)}" for u, v, w in self.edges)
        return "\n".join(lines) + "\n"

    def to_json_doc(self) -> dict:
        return {
            "nodes": self.nodes,
            "ring": _ring_name(self.ring),
            "query": self.query,
            "edges": [[u, v, _weight_json(w)] for u, v, w in self.edges],
        }


def has_interval_tokens(text: str) -> bool:
    """Whether an edge-list or matrix text carries any ``lo,hi`` weight."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        if "," in line:
            return True
    return False


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _resolve_ring(ring, name, where):
    if ring is not None:
        return ring
    if name:
        return lookup(name)
    raise ParseError(f"no semiring given for {where}: pass one explicitly or add a \"ring\" field")


def parse_graph(text: str, ring: Semiring | None = None, query: str | None = None) -> GraphProblem:
    """Parse a problem from edge-list text or a JSON document.

    Explicit ``ring``/``query`` arguments take precedence over fields in a
    JSON document.  A ``lo,hi`` weight anywhere switches the whole problem
    to the interval extension; plain weights then become degenerate
    intervals.
    """
    if text.lstrip().startswith("{"):
        return _parse_graph_json(text, ring, query)
    return _parse_graph_edges(text, ring, query)


def _parse_graph_edges(text, ring, query):
    ring = _resolve_ring(ring, None, "edge-list input")
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty input: expected a node-count line")
    lineno, first = lines[0]
    if len(first.split()) != 1:
        raise ParseError(f"line {lineno}: expected a single node count, got {first!r}", line=lineno)
    try:
        nodes = int(first)
    except ValueError:
        raise ParseError(f"line {lineno}: node count must be an integer, got {first!r}",
                         line=lineno) from None
    if nodes < 1:
        raise ParseError(f"line {lineno}: node count must be positive, got {nodes}", line=lineno)

    if is_interval_semiring(ring):
        final = ring
    elif any("," in line for _, line in lines[1:]):
        final = interval_extension(ring)
    else:
        final = ring

    merged: dict[tuple[int, int], object] = {}
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected \"from to weight\", got {line!r}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"line {lineno}: node indices must be integers, got {line!r}",
                             line=lineno) from None
        if not (0 <= u < nodes and 0 <= v < nodes):
            raise ParseError(f"line {lineno}: edge {u}->{v} out of range for {nodes} nodes",
                             line=lineno)
        try:
            w = parse_element(final, tokens[2])
        except (ParseError, CarrierError, ValueError) as e:
            raise ParseError(f"line {lineno}: {e}", line=lineno) from None
        key = (u, v)
        merged[key] = final.add(merged[key], w) if key in merged else w

    edges = tuple((u, v, w) for (u, v), w in merged.items())
    return GraphProblem(nodes=nodes, edges=edges, ring=final, query=query or "closure")


def _scalar_from_json(base: Semiring, value):
    if isinstance(value, bool):
        raise ParseError(f"bad weight {value!r}")
    if isinstance(value, (int, float)):
        return base.require(float(value))
    if isinstance(value, str):
        return _parse_scalar(base, value)
    raise ParseError(f"bad weight {value!r}")


def _parse_graph_json(text, ring, query):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("JSON input must be an object")
    nodes = doc.get("nodes")
    if not isinstance(nodes, int) or isinstance(nodes, bool) or nodes < 1:
        raise ParseError(f"\"nodes\" must be a positive integer, got {nodes!r}")
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("\"edges\" must be a list of [from, to, weight] triples")
    base = _resolve_ring(ring, doc.get("ring"), "JSON input")
    query = query or doc.get("query") or "closure"

    if is_interval_semiring(base):
        final = base
    else:
        interval_mode = any(
            isinstance(e, list) and len(e) == 3
            and (isinstance(e[2], list) or (isinstance(e[2], str) and "," in e[2]))
            for e in raw_edges)
        final = interval_extension(base) if interval_mode else base

    merged: dict[tuple[int, int], object] = {}
    for e in raw_edges:
        if not isinstance(e, list) or len(e) != 3:
            raise ParseError(f"bad edge {e!r}: expected [from, to, weight]")
        u, v, raw_w = e
        if not isinstance(u, int) or not isinstance(v, int) or isinstance(u, bool) or isinstance(v, bool):
            raise ParseError(f"bad edge {e!r}: node indices must be integers")
        if is_interval_semiring(final):
            inner = final.zero.base
            if isinstance(raw_w, list):
                if len(raw_w) != 2:
                    raise ParseError(f"bad interval weight {raw_w!r}: expected [lo, hi]")
                w = Interval(_scalar_from_json(inner, raw_w[0]),
                             _scalar_from_json(inner, raw_w[1]), inner)
            elif isinstance(raw_w, str):
                w = parse_element(final, raw_w)
            else:
                w = Interval.degenerate(_scalar_from_json(inner, raw_w), inner)
        else:
            w = _scalar_from_json(final, raw_w)
        key = (u, v)
        merged[key] = final.add(merged[key], w) if key in merged else w

    edges = tuple((u, v, w) for (u, v), w in merged.items())
    try:
        return GraphProblem(nodes=nodes, edges=edges, ring=final, query=query)
    except ValueError as e:
        raise ParseError(str(e)) from None


def parse_matrix(text: str, ring: Semiring) -> SemiringMatrix:
    """Parse the dense textual matrix form over ``ring``.

    Rows are lines of whitespace-separated entries; ``_`` stands for the
    ring's zero and ``inf``/``-inf`` for the infinities.
    """
    rows = []
    width = None
    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise ParseError(f"line {lineno}: expected {width} entries, got {len(tokens)}",
                             line=lineno)
        try:
            rows.append([parse_element(ring, t) for t in tokens])
        except (ParseError, CarrierError, ValueError) as e:
            raise ParseError(f"line {lineno}: {e}", line=lineno) from None
    if not rows:
        raise ParseError("empty input: expected matrix rows")
    return SemiringMatrix.from_rows(rows, ring)


def matrix_to_problem(h: SemiringMatrix, query: str = "bellman") -> GraphProblem:
    """View a square matrix as the graph whose adjacency matrix it is."""
    if h.rows != h.cols:
        raise ValueError(f"expected a square matrix, got {h.rows}x{h.cols}")
    edges = tuple((i, j, h[i, j]) for i in range(h.rows) for j in range(h.cols)
                  if h[i, j] != h.ring.zero)
    return GraphProblem(nodes=h.rows, edges=edges, ring=h.ring, query=query)


def shortest_paths(problem: GraphProblem) -> SemiringMatrix:
    """All-pairs path sums: the star closure of the adjacency matrix.

    Entry (i, j) is the semiring sum over all i-to-j paths of the product
    of edge weights: distances under min-plus, longest paths under
    max-plus (diverging on positive cycles), reachability under the
    Booleans, bottleneck capacity under max-min, strongest chain strength
    over the fuzzy segment.
    """
    star, _ = _star_counted(problem.to_matrix())
    return star


@dataclass
class ResultDocument:
    """What a solved problem reports: the echoed problem, the solution
    matrix, and how it was obtained.  When ``converged`` is set the
    solution satisfies X = H*X + F entrywise exactly."""

    problem: GraphProblem
    solution: SemiringMatrix
    method: str
    iterations: int
    converged: bool
    elapsed_ms: float

    def to_dict(self, include_timing: bool = False) -> dict:
        if self.problem.query.startswith("dist:"):
            solution = [_weight_json(e) for e in self.solution.row(0)]
        else:
            solution = [[_weight_json(e) for e in self.solution.row(i)]
                        for i in range(self.solution.rows)]
        doc = {
            "problem": self.problem.to_json_doc(),
            "method": self.method,
            "iterations": self.iterations,
            "converged": self.converged,
            "solution": solution,
        }
        if include_timing:
            doc["elapsed_ms"] = round(self.elapsed_ms, 3)
        return doc


def _unit_column(n: int, index: int, ring: Semiring) -> SemiringMatrix:
    data = [ring.zero] * n
    data[index] = ring.one
    return SemiringMatrix(n, 1, data, ring)


def run_problem(problem: GraphProblem, method: str = "star",
                max_iter: int | None = None,
                rhs: SemiringMatrix | None = None) -> ResultDocument:
    """Answer a problem's query with the chosen method.

    ``closure`` returns the full star matrix; ``dist:<src>`` the source
    row of it (for the iterative methods, by solving the transposed
    system against a unit right-hand side); ``bellman`` solves
    X = H*X + F with ``rhs`` as F, defaulting to the identity.  Interval
    systems solved by ``star`` go through the exact two-bound solve.
    Divergence of the star raises; the iterative methods instead report
    ``converged=False``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
    if rhs is not None and problem.query != "bellman":
        raise ValueError("a right-hand side only applies to the bellman query")
    t0 = perf_counter()
    ring = problem.ring
    h = problem.to_matrix()
    query = problem.query

    if query == "bellman":
        f = rhs if rhs is not None else SemiringMatrix.identity(problem.nodes, ring)
        if method == "star":
            if is_interval_semiring(ring):
                sol = solve_bellman_interval(h, f)
            else:
                star, count = _star_counted(h)
                sol = BellmanSolution(star @ f, count, True, "star")
        elif method == "jacobi":
            sol = solve_bellman_jacobi(h, f, max_iter)
        else:
            sol = solve_bellman_gauss_seidel(h, f, max_iter)
        solution, iterations, converged = sol.x, sol.iterations, sol.converged
    elif query == "closure":
        if method == "star":
            solution, iterations = _star_counted(h)
            converged = True
        else:
            ident = SemiringMatrix.identity(problem.nodes, ring)
            solver = solve_bellman_jacobi if method == "jacobi" else solve_bellman_gauss_seidel
            sol = solver(h, ident, max_iter)
            solution, iterations, converged = sol.x, sol.iterations, sol.converged
    else:
        src = problem.source
        if method == "star":
            star, iterations = _star_counted(h)
            solution = SemiringMatrix(1, problem.nodes, star.row(src), ring)
            converged = True
        else:
            # distances from src solve the transposed system against a
            # unit column: relaxation over incoming edges
            solver = solve_bellman_jacobi if method == "jacobi" else solve_bellman_gauss_seidel
            sol = solver(h.transpose(), _unit_column(problem.nodes, src, ring), max_iter)
            solution, iterations, converged = sol.x.transpose(), sol.iterations, sol.converged

    elapsed_ms = (perf_counter() - t0) * 1000.0
    return ResultDocument(problem=problem, solution=solution, method=method,
                          iterations=iterations, converged=converged,
                          elapsed_ms=elapsed_ms)
