"""Forest matrix, Laplacian pseudoinverse and the two edge distances.

For a graph with Laplacian ``L``:

* forest matrix ``Q = (I + L)^-1``; ``Q[i, j]`` is the fraction of spanning
  rooted forests in which ``j`` lies in the tree rooted at ``i``.
* ``L+`` (Moore-Penrose), computed as ``(L + J/n)^-1 - J/n``, valid when the
  graph is connected.
* forest distance ``delta_ij = Q_ii + Q_jj - 2 Q_ij`` and effective resistance
  ``omega_ij = L+_ii + L+_jj - 2 L+_ij``. On an edge, ``omega == 1`` exactly
  when the edge is a bridge.

Both inverses go through a Cholesky factorization (``I + L`` and
``L + J/n`` are SPD for connected graphs).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import lapack

from .errors import BridgeDowndate, NumericalFailure
from .graph import Edge, Graph, canonical, require_connected

BRIDGE_TOL = 1e-9
DENOM_GUARD = 1e-9


@dataclass(frozen=True)
class ForestMatrices:
    q: np.ndarray
    lplus: np.ndarray


@dataclass(frozen=True)
class EdgeMetric:
    edge: Edge
    delta: float
    omega: float

    @property
    def is_bridge(self) -> bool:
        return self.omega >= 1.0 - BRIDGE_TOL


def build_laplacian(graph: Graph) -> np.ndarray:
    a = graph.adjacency_matrix()
    return np.diag(a.sum(axis=1)) - a


def spd_inverse(a: np.ndarray) -> np.ndarray:
    """Inverse of a symmetric positive-definite matrix via Cholesky."""
    c, info = lapack.dpotrf(a, lower=0, clean=1)
    if info != 0:
        raise NumericalFailure(f"Cholesky factorization failed (info={info})")
    inv, info = lapack.dpotri(c, lower=0)
    if info != 0:
        raise NumericalFailure(f"Cholesky inversion failed (info={info})")
    # dpotri fills only the upper triangle
    return np.triu(inv) + np.triu(inv, 1).T


def forest_matrix(graph: Graph, laplacian: np.ndarray | None = None) -> np.ndarray:
    lap = build_laplacian(graph) if laplacian is None else laplacian
    return spd_inverse(np.eye(graph.n) + lap)


def laplacian_pseudoinverse(graph: Graph, laplacian: np.ndarray | None = None,
                            check: bool = True) -> np.ndarray:
    if check:
        require_connected(graph)
    n = graph.n
    lap = build_laplacian(graph) if laplacian is None else laplacian
    shift = 1.0 / n
    return spd_inverse(lap + shift) - shift


def forest_matrices(graph: Graph, check: bool = True) -> ForestMatrices:
    lap = build_laplacian(graph)
    return ForestMatrices(
        q=forest_matrix(graph, lap),
        lplus=laplacian_pseudoinverse(graph, lap, check=check),
    )


def pair_distance(mat: np.ndarray, u, v):
    """``M_uu + M_vv - 2 M_uv`` for scalar or array index pairs."""
    return mat[u, u] + mat[v, v] - 2.0 * mat[u, v]


def distance_matrix(mat: np.ndarray) -> np.ndarray:
    """All-pairs version of :func:`pair_distance`."""
    d = np.diag(mat)
    return d[:, None] + d[None, :] - 2.0 * mat


def edge_distances(edges: np.ndarray, fm: ForestMatrices) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (delta, omega) for an ``(m, 2)`` edge array."""
    u, v = edges[:, 0], edges[:, 1]
    return pair_distance(fm.q, u, v), pair_distance(fm.lplus, u, v)


def edge_metrics(graph: Graph, fm: ForestMatrices) -> list[EdgeMetric]:
    delta, omega = edge_distances(graph.edge_array(), fm)
    return [EdgeMetric(e, float(d), float(o))
            for e, d, o in zip(graph.edges, delta, omega)]


def downdate_after_deletion(fm: ForestMatrices, edge: Edge, delta: float,
                            omega: float) -> ForestMatrices:
    """Sherman-Morrison update of ``Q`` and ``L+`` after deleting ``edge``.

    Removing edge ``(u, v)`` subtracts ``b b^T`` from both ``I + L`` and
    ``L + J/n`` (``b = e_u - e_v``, and ``J b = 0``), so
    ``Q' = Q + (Qb)(Qb)^T / (1 - delta)`` and likewise for ``L+`` with
    ``1 - omega``. The ``J/n`` shift cancels.
    """
    u, v = canonical(*edge)
    if 1.0 - omega < DENOM_GUARD:
        raise BridgeDowndate(f"edge {(u, v)} is a bridge (omega={omega!r})")
    if 1.0 - delta < DENOM_GUARD:
        raise BridgeDowndate(f"forest denominator vanishes for {(u, v)} (delta={delta!r})")
    qb = fm.q[:, u] - fm.q[:, v]
    lb = fm.lplus[:, u] - fm.lplus[:, v]
    q = fm.q + np.outer(qb, qb) / (1.0 - delta)
    lp = fm.lplus + np.outer(lb, lb) / (1.0 - omega)
    return ForestMatrices(q=q, lplus=lp)
