"""Seeded benchmark graph families: complete, star, path, ER and BA."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConnectivityRetriesExhausted, InvalidSpec
from .graph import Graph, complete_graph, is_connected, path_graph, star_graph, validate
from .rng import make_rng

FAMILIES = ("complete", "star", "path", "er", "ba")
ER_MAX_RETRIES = 1000
BA_MAX_ATTACH = 3


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    rho: float | None = None
    m_attach: int | None = None
    seed: int = 0

    def check(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 1:
            raise InvalidSpec(f"n must be >= 1, got {self.n}")
        if self.family == "er":
            if self.rho is None or not 0.0 <= self.rho <= 1.0:
                raise InvalidSpec(f"er needs rho in [0, 1], got {self.rho}")
        if self.family == "ba":
            ma = self.m_attach
            if ma is None or not 1 <= ma <= BA_MAX_ATTACH:
                raise InvalidSpec(f"ba needs m_attach in [1, {BA_MAX_ATTACH}], got {ma}")
            if self.n <= ma:
                raise InvalidSpec(f"ba needs n > m_attach ({self.n} <= {ma})")
        if self.seed < 0:
            raise InvalidSpec("seed must be non-negative")


def erdos_renyi(n: int, rho: float, seed: int, max_retries: int = ER_MAX_RETRIES) -> Graph:
    """G(n, p) with p = rho, redrawn until connected."""
    rng = make_rng(seed, 0xE2)
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(max_retries):
        keep = rng.random(len(iu)) < rho
        g = validate(n, zip(iu[keep].tolist(), ju[keep].tolist()))
        if is_connected(g):
            return g
    raise ConnectivityRetriesExhausted(
        f"no connected G({n}, {rho}) in {max_retries} draws")


def barabasi_albert(n: int, m_attach: int, seed: int) -> Graph:
    """Preferential attachment grown from a clique on ``m_attach + 1`` vertices.

    Each new vertex links to ``m_attach`` distinct earlier vertices drawn with
    probability proportional to their current degree.
    """
    rng = make_rng(seed, 0xBA)
    k0 = m_attach + 1
    edges = [(i, j) for i in range(k0) for j in range(i + 1, k0)]
    deg = np.zeros(n)
    deg[:k0] = k0 - 1
    for v in range(k0, n):
        w = deg[:v]
        targets = rng.choice(v, size=m_attach, replace=False, p=w / w.sum())
        for t in sorted(int(x) for x in targets):
            edges.append((t, v))
            deg[t] += 1
        deg[v] = m_attach
    return validate(n, edges)


def generate(spec: GeneratorSpec) -> Graph:
    spec.check()
    if spec.family == "complete":
        return complete_graph(spec.n)
    if spec.family == "star":
        return star_graph(spec.n)
    if spec.family == "path":
        return path_graph(spec.n)
    if spec.family == "er":
        return erdos_renyi(spec.n, spec.rho, spec.seed)
    return barabasi_albert(spec.n, spec.m_attach, spec.seed)
