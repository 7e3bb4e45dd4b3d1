"""(2,3)-pebble game: rank computation in the 2-dimensional rigidity matroid.

Each vertex starts with two pebbles.  An edge is accepted when three pebbles
can be gathered on its endpoints; accepted edges form a maximal (2,3)-sparse
subset of the input, whose size is the rank of the edge set.  Pebbles are
fetched by depth-first search along accepted-edge orientations, reversing
the path walked.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph


class PebbleGame:
    """Incremental (2,3)-pebble game on n vertices."""

    def __init__(self, n: int):
        self.n = n
        self.pebbles = [2] * n
        self.out: list[set[int]] = [set() for _ in range(n)]
        self.accepted = 0

    def _fetch(self, root: int, avoid: int) -> bool:
        """Pull one pebble to root via a directed path, avoiding ``avoid``."""
        seen = {root, avoid}
        parent: dict[int, int | None] = {root: None}
        stack = [root]
        found = None
        while stack:
            v = stack.pop()
            for w in self.out[v]:
                if w in seen:
                    continue
                seen.add(w)
                parent[w] = v
                if self.pebbles[w] > 0:
                    found = w
                    stack.clear()
                    break
                stack.append(w)
        if found is None:
            return False
        self.pebbles[found] -= 1
        self.pebbles[root] += 1
        w = found
        while parent[w] is not None:  # reverse the path root -> ... -> found
            v = parent[w]
            self.out[v].discard(w)
            self.out[w].add(v)
            w = v
        return True

    def try_insert(self, a: int, b: int) -> bool:
        """Accept edge ab iff the accepted set stays (2,3)-sparse.

        Acceptance needs l+1 = 4 pebbles gathered on the endpoints: three
        would only witness sparsity before the insertion.
        """
        if a == b:
            raise ValueError("loop edge")
        while self.pebbles[a] < 2 and self._fetch(a, b):
            pass
        while self.pebbles[b] < 2 and self._fetch(b, a):
            pass
        if self.pebbles[a] + self.pebbles[b] < 4:
            return False
        self.accepted += 1
        self.pebbles[a] -= 1
        self.out[a].add(b)
        return True


def pebble_rank_23(g: Graph, eprime: Iterable[tuple[int, int]] | None = None) -> int:
    """Rank of the edge set eprime (default: all edges) in R_2(g)."""
    if eprime is None:
        edges = g.edge_list()
    else:
        edges = sorted((e if e[0] < e[1] else (e[1], e[0])) for e in eprime)
        for e in edges:
            if e not in g.edges:
                raise ValueError(f"edge {e} is not an edge of the graph")
    game = PebbleGame(g.n)
    for a, b in edges:
        game.try_insert(a, b)
    return game.accepted


def is_laman_sparse(g: Graph, eprime: Iterable[tuple[int, int]] | None = None) -> bool:
    """True iff the edge set is independent in R_2 (i.e. (2,3)-sparse)."""
    edges = list(eprime) if eprime is not None else g.edge_list()
    return pebble_rank_23(g, edges) == len(edges)
