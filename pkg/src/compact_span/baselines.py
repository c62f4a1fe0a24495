"""Uniform random spanning trees (Wilson's loop-erased random walk)."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .graph import Graph, require_connected, serialize_graph
from .metrics import apsp
from .rng import make_rng

_CHUNK = 4096


class _UniformStream:
    """Buffered uniform draws; one ``random()`` call per chunk."""

    def __init__(self, rng: np.random.Generator):
        self._rng = rng
        self._buf = rng.random(_CHUNK)
        self._i = 0

    def next(self) -> float:
        if self._i == _CHUNK:
            self._buf = self._rng.random(_CHUNK)
            self._i = 0
        x = self._buf[self._i]
        self._i += 1
        return x


def wilson_random_tree(graph: Graph, root: int, seed: int) -> Graph:
    """Sample a spanning tree uniformly at random, growing it from ``root``.

    Vertices are visited in index order; from each vertex not yet in the
    tree a simple random walk runs until it hits the tree, and the walk's
    loop erasure (kept implicitly via last-exit pointers) is grafted on.
    """
    require_connected(graph)
    n = graph.n
    nbrs = graph.neighbors
    draw = _UniformStream(make_rng(seed, 0x57, root)).next
    in_tree = [False] * n
    in_tree[root] = True
    nxt = [-1] * n
    edges = []
    for start in range(n):
        u = start
        while not in_tree[u]:
            nb = nbrs[u]
            nxt[u] = nb[int(draw() * len(nb))]
            u = nxt[u]
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            edges.append((u, nxt[u]) if u < nxt[u] else (nxt[u], u))
            u = nxt[u]
    return Graph(n, tuple(sorted(edges)))


@dataclass
class RandomTreeSuite:
    seed: int
    trees: list[Graph]
    distance_sums: np.ndarray
    diameters: np.ndarray

    @property
    def compactness(self) -> np.ndarray:
        n = self.trees[0].n
        return self.distance_sums / n ** 2

    @property
    def mean_compactness(self) -> float:
        # exact integer total, one rounding: identical trees give identical means
        n = self.trees[0].n
        return int(self.distance_sums.sum()) / (len(self.trees) * n ** 2)

    @property
    def mean_diameter(self) -> float:
        return float(self.diameters.mean())

    def stats_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("root", "compactness", "diameter"))
        for r, (c, d) in enumerate(zip(self.compactness, self.diameters)):
            w.writerow((r, repr(float(c)), int(d)))
        return buf.getvalue()

    def trees_text(self) -> str:
        return "".join(f"# root {r}\n" + serialize_graph(t) for r, t in enumerate(self.trees))


def random_tree_suite(graph: Graph, seed: int) -> RandomTreeSuite:
    """One Wilson tree per root vertex, each with its own derived stream."""
    trees = [wilson_random_tree(graph, r, seed) for r in range(graph.n)]
    sums = np.empty(len(trees), dtype=np.int64)
    diam = np.empty(len(trees), dtype=np.int64)
    for k, t in enumerate(trees):
        d = apsp(t)
        sums[k] = d.sum()
        diam[k] = d.max()
    return RandomTreeSuite(seed=seed, trees=trees, distance_sums=sums, diameters=diam)
