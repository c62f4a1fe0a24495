"""Hop-count distances, compactness and diameter of unweighted graphs."""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np

from .errors import Disconnected
from .graph import Edge, Graph, canonical


def _bfs_row(nbrs, source: int, n: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in nbrs[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def apsp(graph: Graph) -> np.ndarray:
    """All-pairs hop counts by one BFS per source."""
    n = graph.n
    nbrs = graph.neighbors
    out = np.empty((n, n), dtype=np.int64)
    for s in range(n):
        row = _bfs_row(nbrs, s, n)
        if s == 0 and min(row) < 0:
            raise Disconnected(f"graph with n={n}, m={graph.m} is not connected")
        out[s] = row
    return out


def distance_sum(graph: Graph) -> int:
    """Sum of hop counts over all ordered vertex pairs (exact integer)."""
    return int(apsp(graph).sum())


def compactness(graph: Graph) -> float:
    """Mean hop count over all n**2 ordered pairs, diagonal included."""
    return distance_sum(graph) / graph.n ** 2


def diameter(graph: Graph) -> int:
    return int(apsp(graph).max())


def validate_spanning_tree(graph: Graph, tree: Graph | Iterable[Edge]) -> bool:
    """True iff ``tree`` is an (n-1)-edge connected subgraph of ``graph``."""
    edges = tree.edges if isinstance(tree, Graph) else tuple(tree)
    if isinstance(tree, Graph) and tree.n != graph.n:
        return False
    n = graph.n
    if len(edges) != n - 1:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen = set()
    for u, v in edges:
        e = canonical(u, v)
        if e in seen or not graph.has_edge(*e):
            return False
        seen.add(e)
        ru, rv = find(e[0]), find(e[1])
        if ru == rv:
            return False
        parent[ru] = rv
    # n-1 edges and no cycle => spanning and connected
    return True
