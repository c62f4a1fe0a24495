"""Simple undirected graphs with dense 0-based vertex ids.

Edges are stored canonically as ``(u, v)`` with ``u < v`` and kept sorted,
so iteration order (and therefore every tie-break downstream) is
deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    MalformedEdgeLine,
    MalformedHeader,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Build through :func:`validate`."""

    n: int
    edges: tuple[Edge, ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_edge_set", frozenset(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical(u, v) in self._edge_set

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        if self.edges:
            e = np.asarray(self.edges)
            a[e[:, 0], e[:, 1]] = 1.0
            a[e[:, 1], e[:, 0]] = 1.0
        return a

    def edge_array(self) -> np.ndarray:
        return np.asarray(self.edges, dtype=np.intp).reshape(-1, 2)

    def without_edge(self, u: int, v: int) -> "Graph":
        e = canonical(u, v)
        if e not in self._edge_set:
            raise KeyError(f"edge {e} not in graph")
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def subgraph_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Spanning subgraph on the same vertex set with the given edges."""
        return validate(self.n, edges)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: np.ndarray
    volume: int


def validate(n: int, edges: Iterable, require_connected: bool = False) -> Graph:
    """Canonicalize a raw edge list, rejecting anything that is not simple.

    Raises SelfLoop, DuplicateEdge, VertexOutOfRange, and (when
    ``require_connected``) Disconnected.
    """
    n = int(n)
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    seen: set[Edge] = set()
    for raw in edges:
        u, v = (int(x) for x in raw)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = canonical(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
    g = Graph(n, tuple(sorted(seen)))
    if require_connected and not is_connected(g):
        raise Disconnected(f"graph with n={n}, m={g.m} is not connected")
    return g


def bfs_order(graph: Graph, source: int = 0) -> list[int]:
    seen = [False] * graph.n
    seen[source] = True
    order = [source]
    queue = deque([source])
    nbrs = graph.neighbors
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def is_connected(graph: Graph) -> bool:
    return len(bfs_order(graph, 0)) == graph.n


def require_connected(graph: Graph) -> None:
    if not is_connected(graph):
        raise Disconnected(f"graph with n={graph.n}, m={graph.m} is not connected")


def degree_profile(graph: Graph) -> DegreeProfile:
    deg = np.zeros(graph.n, dtype=np.int64)
    if graph.m:
        np.add.at(deg, graph.edge_array().ravel(), 1)
    return DegreeProfile(degrees=deg, volume=int(deg.sum()))


def bridges(graph: Graph) -> set[Edge]:
    """Bridges by brute force: an edge is a bridge iff removing it disconnects.

    Deliberately naive; this is the traversal-based reference the
    resistance-based bridge test is checked against.
    """
    base = len(bfs_order(graph, 0))
    out = set()
    for e in graph.edges:
        if len(bfs_order(graph.without_edge(*e), 0)) < base:
            out.add(e)
    return out


# --- edge-list text format -------------------------------------------------


def _content_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s


def parse_graph(text: str, require_connected: bool = False) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-line format."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise MalformedHeader("empty input: expected 'n m' header") from None
    parts = header.split()
    if len(parts) != 2 or not all(_is_int(p) for p in parts):
        raise MalformedHeader(f"line {lineno}: expected 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    if m < 0:
        raise MalformedHeader(f"line {lineno}: negative edge count {m}")
    raw = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            raise MalformedEdgeLine(f"line {lineno}: expected 'u v', got {line!r}")
        raw.append((int(parts[0]), int(parts[1])))
    if len(raw) != m:
        raise MalformedEdgeLine(f"header declares {m} edges, found {len(raw)}")
    return validate(n, raw, require_connected=require_connected)


def _is_int(s: str) -> bool:
    return s.lstrip("-").isdigit()


def serialize_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(path, require_connected: bool = False) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), require_connected=require_connected)


def write_graph(graph: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_graph(graph))


# --- named small graphs ----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return validate(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int, center: int = 0) -> Graph:
    return validate(n, [(center, j) for j in range(n) if j != center])


def path_graph(n: int) -> Graph:
    return validate(n, [(i, i + 1) for i in range(n - 1)])
