"""Dense matrices over a semiring, Kleene star closure, and iterative
solvers for the stationary Bellman equation X = H*X + F.

Everything here is semiring-generic: the same code computes shortest
paths over min-plus, reachability over the Booleans, bottleneck capacities
over max-min and strongest chains over the fuzzy segment.  Fixed points
are detected by exact entry equality, which is legitimate because the
idempotent operations (max, min, +) are exact on exact inputs.  Iteration
counts are capped at the matrix dimension: when the powers of H stabilize
at all, the partial star sums close by exponent n-1, and one further term
is computed as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import Interval, is_interval_semiring
from .semirings import Semiring, UnsupportedOperationError

__all__ = ["SemiringMatrix", "DivergenceError", "BellmanSolution",
           "kleene_star", "solve_bellman_jacobi", "solve_bellman_gauss_seidel",
           "solve_bellman_interval"]


class DivergenceError(ArithmeticError):
    """Partial star sums kept changing past the dimension bound.

    ``entry`` names a witnessing matrix position whose value still moved
    after the cap; ``bound`` is "lower" or "upper" when the failure comes
    from one side of an interval system.
    """

    def __init__(self, message, entry=None, bound=None):
        super().__init__(message)
        self.entry = entry
        self.bound = bound


class SemiringMatrix:
    """Immutable dense matrix with entries in one semiring."""

    __slots__ = ("rows", "cols", "ring", "_data")

    def __init__(self, rows: int, cols: int, entries, ring: Semiring):
        if rows < 1 or cols < 1:
            raise ValueError(f"matrix shape must be positive, got {rows}x{cols}")
        data = tuple(entries)
        if len(data) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(data)}")
        for e in data:
            ring.require(e)
        self.rows = rows
        self.cols = cols
        self.ring = ring
        self._data = data

    @classmethod
    def _wrap(cls, rows, cols, data, ring):
        # internal fast path: entries are outputs of ring operations,
        # already known to lie in the carrier
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.ring = ring
        m._data = tuple(data)
        return m

    @classmethod
    def from_rows(cls, rows_of_entries, ring: Semiring) -> "SemiringMatrix":
        rows = list(rows_of_entries)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows: all rows must have the same length")
            flat.extend(r)
        return cls(len(rows), width, flat, ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: Semiring) -> "SemiringMatrix":
        return cls(rows, cols, [ring.zero] * (rows * cols), ring)

    @classmethod
    def identity(cls, n: int, ring: Semiring) -> "SemiringMatrix":
        data = [ring.zero] * (n * n)
        for i in range(n):
            data[i * n + i] = ring.one
        return cls(n, n, data, ring)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "SemiringMatrix":
        data = [self._data[i * self.cols + j]
                for j in range(self.cols) for i in range(self.rows)]
        return SemiringMatrix._wrap(self.cols, self.rows, data, self.ring)

    def map_entries(self, fn, ring: Semiring) -> "SemiringMatrix":
        """Matrix of ``fn(entry)`` over ``ring``; used to split interval bounds."""
        return SemiringMatrix(self.rows, self.cols, [fn(e) for e in self._data], ring)

    def __eq__(self, other):
        return (isinstance(other, SemiringMatrix) and other.ring is self.ring
                and other.rows == self.rows and other.cols == self.cols
                and other._data == self._data)

    def __hash__(self):
        return hash((id(self.ring), self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(repr(e) for e in self.row(i)) for i in range(self.rows))
        return f"<{self.rows}x{self.cols} over {self.ring.name}: {body}>"

    def _same_ring(self, other):
        if not isinstance(other, SemiringMatrix):
            raise TypeError(f"expected a matrix, got {other!r}")
        if other.ring is not self.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def __add__(self, other) -> "SemiringMatrix":
        """Entrywise semiring addition."""
        self._same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")
        add = self.ring.add
        data = [add(a, b) for a, b in zip(self._data, other._data)]
        return SemiringMatrix._wrap(self.rows, self.cols, data, self.ring)

    def __matmul__(self, other) -> "SemiringMatrix":
        """Row-by-column product with semiring addition and multiplication."""
        self._same_ring(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        add, mul, zero = self.ring.add, self.ring.mul, self.ring.zero
        n, inner, m = self.rows, self.cols, other.cols
        bdata = other._data
        out = []
        for i in range(n):
            arow = self._data[i * inner:(i + 1) * inner]
            for j in range(m):
                acc = zero
                for k in range(inner):
                    acc = add(acc, mul(arow[k], bdata[k * m + j]))
                out.append(acc)
        return SemiringMatrix._wrap(n, m, out, self.ring)


def _require_square_idempotent(h: SemiringMatrix):
    if h.rows != h.cols:
        raise ValueError(f"star closure needs a square matrix, got {h.rows}x{h.cols}")
    if not h.ring.idempotent:
        raise UnsupportedOperationError(
            f"star closure is defined over idempotent semirings; {h.ring.name} is not")


def _star_counted(h: SemiringMatrix) -> tuple[SemiringMatrix, int]:
    _require_square_idempotent(h)
    n = h.rows
    ident = SemiringMatrix.identity(n, h.ring)
    prev = ident
    for k in range(1, n + 1):
        cur = (h @ prev) + ident  # partial sum of powers 0..k
        if cur == prev:
            # a repeated partial sum is a fixed point; later powers add nothing
            return prev, k
        prev = cur
    final = (h @ prev) + ident
    if final == prev:
        return prev, n + 1
    for idx, (a, b) in enumerate(zip(prev._data, final._data)):
        if a != b:
            i, j = divmod(idx, n)
            raise DivergenceError(
                f"star closure does not stabilize: entry ({i}, {j}) still moved "
                f"from {a!r} to {b!r} after {n} terms", entry=(i, j))
    raise AssertionError("unreachable")


def kleene_star(h: SemiringMatrix) -> SemiringMatrix:
    """Star closure: the sum of all matrix powers of ``h``.

    Entry (i, j) is the semiring sum over all paths from i to j of the
    product of edge weights, with the identity contributing the empty
    path.  Raises :class:`DivergenceError` with a witnessing entry when
    the partial sums fail to stabilize by exponent ``n - 1`` (for
    min-plus, that is a negative cycle).
    """
    star, _ = _star_counted(h)
    return star


@dataclass
class BellmanSolution:
    """Solution record for X = H*X + F."""

    x: SemiringMatrix
    iterations: int
    converged: bool
    method: str


def _check_system(h: SemiringMatrix, f: SemiringMatrix):
    if h.rows != h.cols:
        raise ValueError(f"coefficient matrix must be square, got {h.rows}x{h.cols}")
    if not isinstance(f, SemiringMatrix):
        raise TypeError(f"expected a matrix right-hand side, got {f!r}")
    if f.ring is not h.ring:
        raise ValueError(f"ring mismatch: {h.ring.name} vs {f.ring.name}")
    if f.rows != h.rows:
        raise ValueError(f"right-hand side has {f.rows} rows, expected {h.rows}")


def solve_bellman_jacobi(h: SemiringMatrix, f: SemiringMatrix,
                         max_iter: int | None = None) -> BellmanSolution:
    """Iterate X <- H*X + F from X = F until a fixed point repeats.

    On convergence the result is the least solution, equal to star(H)*F.
    Exhausting ``max_iter`` (default: the dimension of H) yields a result
    with ``converged=False`` rather than an exception.
    """
    _check_system(h, f)
    if max_iter is None:
        max_iter = h.rows
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    x = f
    for k in range(1, max_iter + 1):
        x_next = (h @ x) + f
        if x_next == x:
            return BellmanSolution(x, k, True, "jacobi")
        x = x_next
    return BellmanSolution(x, max_iter, False, "jacobi")


def solve_bellman_gauss_seidel(h: SemiringMatrix, f: SemiringMatrix,
                               max_iter: int | None = None) -> BellmanSolution:
    """Like the Jacobi iteration, but each sweep reuses entries already
    updated within the sweep (ascending row order), the scheme behind
    Ford's relaxation.  Converges to the same fixed point, usually in
    fewer sweeps."""
    _check_system(h, f)
    if max_iter is None:
        max_iter = h.rows
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    add, mul = h.ring.add, h.ring.mul
    n, m = h.rows, f.cols
    x = [list(f.row(i)) for i in range(n)]
    for sweep in range(1, max_iter + 1):
        changed = False
        for i in range(n):
            hrow = h.row(i)
            for j in range(m):
                acc = f[i, j]
                for k in range(n):
                    acc = add(acc, mul(hrow[k], x[k][j]))
                if acc != x[i][j]:
                    x[i][j] = acc
                    changed = True
        if not changed:
            flat = [e for row in x for e in row]
            return BellmanSolution(SemiringMatrix._wrap(n, m, flat, h.ring),
                                   sweep, True, "gauss-seidel")
    flat = [e for row in x for e in row]
    return BellmanSolution(SemiringMatrix._wrap(n, m, flat, h.ring),
                           max_iter, False, "gauss-seidel")


def solve_bellman_interval(h: SemiringMatrix, f: SemiringMatrix) -> BellmanSolution:
    """Exact interval solution of X = H*X + F over an interval extension.

    Splits the system into its bound systems over the base semiring,
    solves each exactly through the star closure, and reassembles the
    interval matrix [star(H.lo)*F.lo, star(H.hi)*F.hi].  By inclusion
    isotonicity every point system drawn from inside [H, F] has its least
    solution inside the result, entrywise.
    """
    _check_system(h, f)
    if not is_interval_semiring(h.ring):
        raise UnsupportedOperationError(
            f"interval solve needs interval entries, got ring {h.ring.name}")
    base = h.ring.zero.base

    def solve_bound(pick, label):
        try:
            star, count = _star_counted(h.map_entries(pick, base))
        except DivergenceError as e:
            raise DivergenceError(f"{label}-bound system diverged: {e}",
                                  entry=e.entry, bound=label) from None
        return star @ f.map_entries(pick, base), count

    x_lo, count_lo = solve_bound(lambda e: e.lo, "lower")
    x_hi, count_hi = solve_bound(lambda e: e.hi, "upper")
    data = [Interval(lo, hi, base) for lo, hi in zip(x_lo._data, x_hi._data)]
    x = SemiringMatrix._wrap(h.rows, f.cols, data, h.ring)
    return BellmanSolution(x, max(count_lo, count_hi), True, "star")
