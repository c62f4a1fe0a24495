"""Rank-and-regress extraction of most/least compact spanning trees.

Each round ranks the surviving edges by forest distance, skips bridges
(effective resistance 1) and deletes the single extremal edge: the largest
forest distance for the most compact tree (MCST), the smallest for the least
compact tree (LCST). Rounds repeat until ``n - 1`` edges remain.

Two numerically distinct paths produce the same trace:

* reference (default): ``Q`` and ``L+`` refactorized from scratch each round;
* fast: one factorization up front, then rank-one downdates per deletion.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import NumericalFailure
from .forest import (
    BRIDGE_TOL,
    EdgeMetric,
    ForestMatrices,
    build_laplacian,
    downdate_after_deletion,
    edge_distances,
    forest_matrices,
    spd_inverse,
)
from .graph import Edge, Graph, is_connected, require_connected
from .metrics import validate_spanning_tree
from .rng import make_rng

TIE_TOL = 1e-12


class Mode(str, Enum):
    MCST = "mcst"
    LCST = "lcst"


@dataclass
class ExtractionOptions:
    fast: bool = False
    early_stop: bool = True
    keep_metrics: bool = False
    tie_tol: float = TIE_TOL
    bridge_tol: float = BRIDGE_TOL
    # "lex": smallest canonical edge among ties; "random": seeded uniform pick
    tie_break: str = "lex"
    seed: int | None = None
    check_connectivity: bool = False
    # fast path only: refactorize every k rounds (0 disables)
    refresh_every: int = 0
    observer: Callable[[Graph, ForestMatrices], None] | None = None


@dataclass
class IterationRecord:
    iteration_index: int
    n_edges: int
    deleted_edge: Edge
    deleted_delta: float
    deleted_omega: float
    bridges_skipped: list[Edge]
    edge_metrics: list[EdgeMetric] | None = None

    @property
    def n_edges_remaining(self) -> int:
        return self.n_edges - 1


@dataclass
class ExtractionTrace:
    mode: Mode
    n: int
    m: int
    records: list[IterationRecord] = field(default_factory=list)
    result: Graph | None = None
    early_stopped: bool = False

    @property
    def deleted_edges(self) -> list[Edge]:
        return [r.deleted_edge for r in self.records]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TRACE_COLUMNS)
        for r in self.records:
            w.writerow([r.iteration_index, r.deleted_edge[0], r.deleted_edge[1],
                        repr(r.deleted_delta), repr(r.deleted_omega),
                        len(r.bridges_skipped), r.n_edges_remaining])
        return buf.getvalue()


TRACE_COLUMNS = ("iteration", "deleted_u", "deleted_v", "delta", "omega",
                 "n_bridges_skipped", "n_edges_remaining")


def _select_index(delta: np.ndarray, omega: np.ndarray, mode: Mode,
                  tie_tol: float, bridge_tol: float, rng=None) -> int:
    """Index of the extremal non-bridge entry, or -1 if all are bridges.

    Edges are assumed to be in canonical sorted order, so the lowest index
    among ties is the lexicographically smallest edge.
    """
    ok = omega < 1.0 - bridge_tol
    if not ok.any():
        return -1
    cand = delta[ok]
    if mode is Mode.MCST:
        best = cand.max()
        ties = ok & (delta >= best - tie_tol)
    else:
        best = cand.min()
        ties = ok & (delta <= best + tie_tol)
    idx = np.flatnonzero(ties)
    if rng is not None and len(idx) > 1:
        return int(idx[rng.integers(len(idx))])
    return int(idx[0])


def select_extremal_edge(metrics: Sequence[EdgeMetric], mode: Mode | str,
                         tie_tol: float = TIE_TOL, bridge_tol: float = BRIDGE_TOL,
                         rng=None) -> Edge | None:
    """Extremal non-bridge edge; ``None`` when every edge is a bridge."""
    mode = Mode(mode)
    metrics = sorted(metrics, key=lambda mt: mt.edge)
    if not metrics:
        return None
    delta = np.array([mt.delta for mt in metrics])
    omega = np.array([mt.omega for mt in metrics])
    i = _select_index(delta, omega, mode, tie_tol, bridge_tol, rng)
    return None if i < 0 else metrics[i].edge


def extract(graph: Graph, mode: Mode | str = Mode.MCST,
            options: ExtractionOptions | None = None) -> tuple[Graph, ExtractionTrace]:
    """Run rank-and-regress on a connected simple graph.

    Returns the spanning tree (as a :class:`Graph` on the same vertices) and
    the per-round trace. A graph that is already a tree comes back unchanged
    with an empty trace.
    """
    mode = Mode(mode)
    opts = options or ExtractionOptions()
    require_connected(graph)
    n = graph.n
    trace = ExtractionTrace(mode=mode, n=n, m=graph.m)
    rng = make_rng(opts.seed, 1) if opts.tie_break == "random" else None

    edges = graph.edge_array()
    lap = build_laplacian(graph)
    shift = 1.0 / n
    eye = np.eye(n)
    fm = None
    k = 0
    while len(edges) > n - 1:
        if fm is None or not opts.fast or (opts.refresh_every and k % opts.refresh_every == 0):
            fm = ForestMatrices(q=spd_inverse(eye + lap), lplus=spd_inverse(lap + shift) - shift)
        delta, omega = edge_distances(edges, fm)
        i = _select_index(delta, omega, mode, opts.tie_tol, opts.bridge_tol, rng)
        if i < 0:
            if opts.early_stop:
                trace.early_stopped = True
                break
            raise NumericalFailure(
                f"no deletable edge with {len(edges)} edges left (n={n})")
        u, v = int(edges[i, 0]), int(edges[i, 1])
        bridge_mask = omega >= 1.0 - opts.bridge_tol
        rec = IterationRecord(
            iteration_index=k,
            n_edges=len(edges),
            deleted_edge=(u, v),
            deleted_delta=float(delta[i]),
            deleted_omega=float(omega[i]),
            bridges_skipped=[(int(a), int(b)) for a, b in edges[bridge_mask]],
        )
        if opts.keep_metrics:
            rec.edge_metrics = [EdgeMetric((int(a), int(b)), float(d), float(o))
                                for (a, b), d, o in zip(edges, delta, omega)]
        trace.records.append(rec)

        edges = np.delete(edges, i, axis=0)
        lap[u, u] -= 1.0
        lap[v, v] -= 1.0
        lap[u, v] += 1.0
        lap[v, u] += 1.0
        if opts.fast:
            fm = downdate_after_deletion(fm, (u, v), delta[i], omega[i])
        k += 1

        if opts.check_connectivity or opts.observer is not None:
            current = Graph(n, tuple((int(a), int(b)) for a, b in edges))
            if opts.check_connectivity and not is_connected(current):
                raise NumericalFailure(f"deleting {(u, v)} disconnected the graph")
            if opts.observer is not None:
                opts.observer(current, fm if opts.fast else forest_matrices(current))

    tree = Graph(n, tuple((int(a), int(b)) for a, b in edges))
    if not validate_spanning_tree(graph, tree):
        raise NumericalFailure(f"regress ended with {tree.m} edges that do not form a spanning tree")
    trace.result = tree
    return tree, trace
