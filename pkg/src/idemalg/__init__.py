"""Generic algebra over idempotent semirings.

Tropical and related semirings, closed intervals over them, dense
semiring matrices with star closure and Bellman solvers, idempotent
integration on finite point sets, generalized fuzzy sets, and a CLI for
algebraic path problems on weighted graphs.
"""

from .analysis import (IdempotentMeasure, SemiringFunction, integrate,
                       integrate_against)
from .fuzzy import FuzzySet, fuzzy_semiring, interval_fuzzy, possibility
from .graphs import (GraphProblem, ParseError, ResultDocument,
                     matrix_to_problem, parse_element, parse_graph,
                     parse_matrix, run_problem, shortest_paths)
from .intervals import (Interval, interval_add, interval_extension,
                        interval_mul, is_interval_semiring)
from .linalg import (BellmanSolution, DivergenceError, SemiringMatrix,
                     kleene_star, solve_bellman_gauss_seidel,
                     solve_bellman_interval, solve_bellman_jacobi)
from .semirings import (AxiomCheck, AxiomReport, BOOLE, CarrierError,
                        FUZZY_SEGMENT, MAX_MIN, MAX_PLUS, MIN_PLUS,
                        NONNEG_ARITH, SEMIRINGS, Semiring,
                        UnsupportedOperationError, check_axioms, dequantize,
                        dequantized_add, lookup)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheck", "AxiomReport", "BOOLE", "BellmanSolution", "CarrierError",
    "DivergenceError", "FUZZY_SEGMENT", "FuzzySet", "GraphProblem",
    "IdempotentMeasure", "Interval", "MAX_MIN", "MAX_PLUS", "MIN_PLUS",
    "NONNEG_ARITH", "ParseError", "ResultDocument", "SEMIRINGS", "Semiring",
    "SemiringFunction", "SemiringMatrix", "UnsupportedOperationError",
    "check_axioms", "dequantize", "dequantized_add", "fuzzy_semiring",
    "integrate", "integrate_against", "interval_add", "interval_extension",
    "interval_fuzzy", "interval_mul", "is_interval_semiring", "kleene_star",
    "lookup", "matrix_to_problem", "parse_element", "parse_graph",
    "parse_matrix", "possibility", "run_problem", "shortest_paths",
    "solve_bellman_gauss_seidel", "solve_bellman_interval",
    "solve_bellman_jacobi",
]
