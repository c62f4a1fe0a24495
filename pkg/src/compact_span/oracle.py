"""Brute-force ground truth for small graphs.

Everything here counts combinatorial objects directly (spanning trees,
spanning rooted forests, connected bi-partitions) with exact integer
arithmetic, and is kept independent of the linear algebra in
:mod:`compact_span.forest` so the two can be checked against each other.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import prod
from typing import NamedTuple

import numpy as np

from .errors import TooLarge
from .extraction import Mode
from .forest import forest_matrices, forest_matrix
from .graph import Edge, Graph, canonical, degree_profile, is_connected, require_connected
from .metrics import distance_sum

MAX_TREE_N = 10
MAX_TREES = 10**6
MAX_CENSUS_M = 20
MAX_BIPARTITION_N = 6


# --- exact determinants ----------------------------------------------------


def int_det(mat) -> int:
    """Exact determinant of an integer matrix (Bareiss fraction-free elimination)."""
    a = [[int(x) for x in row] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _int_laplacian(n: int, edges) -> list[list[int]]:
    lap = [[0] * n for _ in range(n)]
    for u, v in edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return lap


def kirchhoff_tree_count(graph: Graph) -> int:
    """Spanning-tree count as the (0, 0) cofactor of the Laplacian."""
    if graph.n == 1:
        return 1
    lap = _int_laplacian(graph.n, graph.edges)
    return int_det([row[1:] for row in lap[1:]])


def _induced_tree_count(graph: Graph, vertices) -> int:
    vs = sorted(vertices)
    idx = {v: i for i, v in enumerate(vs)}
    sub = [(idx[u], idx[v]) for u, v in graph.edges if u in idx and v in idx]
    if len(vs) == 1:
        return 1
    lap = _int_laplacian(len(vs), sub)
    return int_det([row[1:] for row in lap[1:]])


# --- spanning trees --------------------------------------------------------


def enumerate_spanning_trees(graph: Graph, max_n: int = MAX_TREE_N,
                             max_trees: int = MAX_TREES) -> list[Graph]:
    """Every spanning tree, by include/exclude backtracking over the edges."""
    require_connected(graph)
    n, m = graph.n, graph.m
    if n > max_n:
        raise TooLarge(f"tree enumeration limited to n <= {max_n}, got {n}")
    count = kirchhoff_tree_count(graph)
    if count > max_trees:
        raise TooLarge(f"{count} spanning trees exceeds limit {max_trees}")
    edges = graph.edges
    out: list[Graph] = []
    chosen: list[Edge] = []

    def rec(idx: int, labels: list[int]):
        need = n - 1 - len(chosen)
        if need == 0:
            out.append(Graph(n, tuple(chosen)))
            return
        if m - idx < need:
            return
        u, v = edges[idx]
        lu, lv = labels[u], labels[v]
        if lu != lv:
            merged = [lu if x == lv else x for x in labels]
            chosen.append((u, v))
            rec(idx + 1, merged)
            chosen.pop()
        rec(idx + 1, labels)

    rec(0, list(range(n)))
    return out


class ExtremalTree(NamedTuple):
    value: float
    multiplicity: int


def exact_extremal_tree(graph: Graph, mode: Mode | str,
                        trees: list[Graph] | None = None) -> ExtremalTree:
    """Optimal compactness over all spanning trees and how many attain it."""
    mode = Mode(mode)
    trees = enumerate_spanning_trees(graph) if trees is None else trees
    sums = [distance_sum(t) for t in trees]
    best = min(sums) if mode is Mode.MCST else max(sums)
    return ExtremalTree(best / graph.n ** 2, sums.count(best))


# --- rooted forests --------------------------------------------------------


@dataclass
class ForestCensus:
    """Exact spanning rooted forest counts.

    ``by_k[k]`` counts rooted forests with ``k`` edges; ``pair[k, i, j]``
    counts those in which ``j`` is in the tree rooted at ``i``.
    """

    n: int
    by_k: np.ndarray
    pair: np.ndarray

    @property
    def total(self) -> int:
        return int(self.by_k.sum())

    def check_internal(self) -> list[str]:
        n, problems = self.n, []
        if self.by_k[0] != 1:
            problems.append("by_k[0] != 1")
        if not np.array_equal(self.pair[0], np.eye(n, dtype=self.pair.dtype)):
            problems.append("pair[0] != identity")
        trees = self.pair[n - 1]
        if trees.size and not (trees == trees[0, 0]).all():
            problems.append("pair[n-1] not constant")
        # every rooted forest has exactly one root per tree: sum_i pair[k, i, i] = (n-k) by_k[k]
        roots = np.einsum("kii->k", self.pair)
        if not np.array_equal(roots, (n - np.arange(n)) * self.by_k):
            problems.append("root count mismatch")
        return problems


def enumerate_rooted_forests(graph: Graph, max_m: int = MAX_CENSUS_M) -> ForestCensus:
    """Census of spanning rooted forests by scanning all acyclic edge subsets.

    Subsets containing a cycle are pruned as soon as the cycle closes. Each
    acyclic subset with components of sizes s_1..s_c admits prod(s) rootings;
    of those, ``prod(s) / s_C`` put a given vertex ``i`` at the root of its
    component ``C``.
    """
    n, m = graph.n, graph.m
    if m > max_m:
        raise TooLarge(f"forest census limited to m <= {max_m}, got {m}")
    by_k = np.zeros(n, dtype=np.int64)
    pair = np.zeros((n, n, n), dtype=np.int64)
    edges = graph.edges

    def record(labels: list[int], k: int):
        lab = np.asarray(labels)
        sizes = np.bincount(lab, minlength=n)
        p = prod(int(s) for s in sizes if s)
        by_k[k] += p
        same = lab[:, None] == lab[None, :]
        w = p // sizes[lab]
        pair[k] += same * w[:, None]

    def rec(idx: int, labels: list[int], k: int):
        if idx == m:
            record(labels, k)
            return
        rec(idx + 1, labels, k)
        u, v = edges[idx]
        lu, lv = labels[u], labels[v]
        if lu != lv:
            rec(idx + 1, [lu if x == lv else x for x in labels], k + 1)

    rec(0, list(range(n)), 0)
    return ForestCensus(n=n, by_k=by_k, pair=pair)


# --- bi-partitions ---------------------------------------------------------


@dataclass
class BipartitionReport:
    edge: Edge
    lhs: int
    rhs: int
    partitions: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _induces_connected(graph: Graph, vs: set[int]) -> bool:
    start = next(iter(vs))
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for w in graph.neighbors[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def crossing_bipartitions(graph: Graph, i: int, j: int):
    """Yield ``(S, S', |T(S)| |T(S')|)`` over connected bi-partitions with i in S, j in S'."""
    n = graph.n
    others = [v for v in range(n) if v not in (i, j)]
    for mask in range(1 << len(others)):
        s = {i} | {others[b] for b in range(len(others)) if mask >> b & 1}
        t = set(range(n)) - s
        if _induces_connected(graph, s) and _induces_connected(graph, t):
            yield (tuple(sorted(s)), tuple(sorted(t)),
                   _induced_tree_count(graph, s) * _induced_tree_count(graph, t))


def tau(graph: Graph, i: int, j: int) -> int:
    return sum(w for _, _, w in crossing_bipartitions(graph, i, j))


def verify_bipartition_identity(graph: Graph, edge: Edge, census: ForestCensus | None = None,
                                max_n: int = MAX_BIPARTITION_N) -> BipartitionReport:
    """Compare the (n-2)-edge forest-count combination with n * tau_ij."""
    if graph.n > max_n:
        raise TooLarge(f"bi-partition scan limited to n <= {max_n}, got {graph.n}")
    i, j = canonical(*edge)
    census = enumerate_rooted_forests(graph) if census is None else census
    f = census.pair[graph.n - 2]
    lhs = int(f[i, i] - f[i, j] + f[j, j] - f[j, i])
    parts = list(crossing_bipartitions(graph, i, j))
    rhs = graph.n * sum(w for _, _, w in parts)
    return BipartitionReport(edge=(i, j), lhs=lhs, rhs=rhs,
                             partitions=[(s, t) for s, t, _ in parts])


# --- identity report -------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    max_deviation: float


@dataclass
class IdentityReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, deviation: float, tol: float = 0.0):
        self.checks.append(Check(name, bool(deviation <= tol), float(deviation)))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("check", "status", "max_deviation"))
        for c in self.checks:
            w.writerow((c.name, "pass" if c.passed else "FAIL", repr(c.max_deviation)))
        return buf.getvalue()


def verify_forest_identities(graph: Graph, tol: float = 1e-9,
                             bipartition: bool | None = None) -> IdentityReport:
    """Check the forest-count formulas for Q and L+ against a full census.

    Q and L+ ratios are compared at ``tol``; every count identity is exact.
    The bi-partition check runs on every edge when ``n`` is small enough
    (or when forced with ``bipartition=True``).
    """
    n = graph.n
    census = enumerate_rooted_forests(graph)
    rep = IdentityReport()
    problems = census.check_internal()
    rep.add("census_internal", float(len(problems)))

    connected = is_connected(graph)
    fm = forest_matrices(graph, check=False) if connected else None
    q = fm.q if fm is not None else forest_matrix(graph)
    total = census.total
    q_census = census.pair.sum(axis=0) / total
    rep.add("Q_vs_forest_ratio", float(np.abs(q - q_census).max()), tol)

    rep.add("det_I_plus_L_vs_census",
            float(abs(int_det(np.eye(n, dtype=int) + _int_laplacian(n, graph.edges)) - total)))

    deg = degree_profile(graph).degrees
    if n >= 2:
        rep.add("one_edge_root_count",
                float(np.abs(np.diag(census.pair[1]) - (2 * graph.m - deg)).max()))

    if connected:
        trees = kirchhoff_tree_count(graph)
        rep.add("n-1_edge_counts_vs_tree_count", float(np.abs(census.pair[n - 1] - trees).max()))
        if n >= 2:
            lplus_census = (census.pair[n - 2] - census.by_k[n - 2] / n) / census.by_k[n - 1]
            rep.add("Lplus_vs_dense_forest_ratio",
                    float(np.abs(fm.lplus - lplus_census).max()), tol)

    if bipartition is None:
        bipartition = n <= MAX_BIPARTITION_N
    if bipartition and graph.m:
        worst = 0
        for e in graph.edges:
            r = verify_bipartition_identity(graph, e, census, max_n=max(n, MAX_BIPARTITION_N))
            worst = max(worst, abs(r.lhs - r.rhs))
        rep.add("bipartition_identity", float(worst))
    return rep
