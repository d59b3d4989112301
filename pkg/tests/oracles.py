"""Independent brute-force references that library results are checked
against.  These deliberately use plain Python arithmetic and explicit
enumeration, not the library's own operations."""

import math


def min_plus_distances(n, weights, src):
    """Shortest distances from ``src`` by exhaustive enumeration of simple
    paths; ``weights`` maps (u, v) to a float."""
    adj = [[] for _ in range(n)]
    for (u, v), w in weights.items():
        adj[u].append((v, w))
    best = [math.inf] * n
    best[src] = 0.0
    def go(u, cost, seen):
        for v, w in adj[u]:
            if v in seen:
                continue
            c = cost + w
            if c < best[v]:
                best[v] = c
            go(v, c, seen | {v})
    go(src, 0.0, frozenset({src}))
    return best


def reachable_from(n, edges, src):
    """Nodes reachable from ``src`` (including itself) by plain BFS."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
    seen = {src}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def walk_closure(weights_grid, add, mul, zero, one, max_edges):
    """Sum over all walks with at most ``max_edges`` edges of the product
    of their edge weights, by explicit recursive enumeration.

    ``weights_grid`` is an n x n list of lists with ``zero`` where no edge
    exists.  The empty walk contributes ``one`` on the diagonal.  Matches
    the star closure whenever the closure stabilizes within the dimension.
    """
    n = len(weights_grid)
    out = [[zero] * n for _ in range(n)]

    def go(start, u, acc, edges_used):
        for v in range(n):
            w = weights_grid[u][v]
            if w == zero:
                continue
            piece = mul(acc, w)
            out[start][v] = add(out[start][v], piece)
            if edges_used + 1 < max_edges:
                go(start, v, piece, edges_used + 1)

    for i in range(n):
        out[i][i] = add(out[i][i], one)
        if max_edges >= 1:
            go(i, i, one, 0)
    return out
