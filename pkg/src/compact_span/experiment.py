"""Benchmark suites comparing MCST, LCST and random spanning trees.

A suite draws graph parameters from a master seed, runs both extractions
and a Wilson suite on every graph, and writes

* ``<suite>_records.csv``  one row per graph, sorted by (n, parameter, id);
* ``<suite>_timings.csv``  wall-clock per row (kept apart so the records
  file is reproducible byte for byte);
* ``<suite>_compactness.svg`` and ``<suite>_diameter.svg``.
"""

from __future__ import annotations

import csv
import io
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .baselines import random_tree_suite
from .errors import CompactSpanError
from .extraction import ExtractionOptions, Mode, extract
from .generators import GeneratorSpec, generate
from .metrics import apsp
from .rng import make_rng
from .svg import line_chart

log = logging.getLogger(__name__)

THREADS_ENV = "COMPACT_SPAN_THREADS"


@dataclass
class ExperimentRecord:
    graph_id: str
    family: str
    n: int
    m: int
    parameter: float
    seed: int
    c_graph: float = float("nan")
    c_mcst: float = float("nan")
    c_lcst: float = float("nan")
    c_random_mean: float = float("nan")
    c_random_min: float = float("nan")
    c_random_max: float = float("nan")
    d_graph: int = -1
    d_mcst: int = -1
    d_lcst: int = -1
    d_random_mean: float = float("nan")
    error: str = ""
    runtime_ms: float = 0.0

    def violations(self) -> list[str]:
        """Invariants every successful row must satisfy."""
        if self.error:
            return []
        out = []
        for name in ("c_mcst", "c_lcst", "c_random_min"):
            if getattr(self, name) < self.c_graph:
                out.append(f"{name} < c_graph")
        if not self.c_random_min <= self.c_random_mean <= self.c_random_max:
            out.append("random min/mean/max out of order")
        if self.c_mcst > self.c_lcst:
            out.append("c_mcst > c_lcst")
        return out

    @property
    def mcst_excess(self) -> float:
        """Relative amount by which the MCST exceeds the random-tree mean (0 if not)."""
        return max(0.0, self.c_mcst / self.c_random_mean - 1.0)


RECORD_COLUMNS = tuple(f.name for f in fields(ExperimentRecord) if f.name != "runtime_ms")


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "er"
    count: int | None = None
    seed: int = 0
    n_min: int = 10
    n_max: int = 99
    rho_min: float = 0.25
    rho_max: float = 0.5
    m_attach: tuple[int, ...] = (1, 2)
    fast: bool = False

    @property
    def size(self) -> int:
        if self.count is not None:
            return self.count
        return 50 if self.suite == "er" else 36


def suite_specs(cfg: SuiteConfig) -> list[tuple[str, GeneratorSpec]]:
    """Deterministic (graph_id, spec) list in the canonical row order."""
    if cfg.suite not in ("er", "ba"):
        raise ValueError(f"unknown suite {cfg.suite!r}")
    rng = make_rng(cfg.seed, 0x5E)
    specs = []
    for k in range(cfg.size):
        n = int(rng.integers(cfg.n_min, cfg.n_max + 1))
        gseed = int(rng.integers(0, 2**62))
        if cfg.suite == "er":
            rho = round(float(rng.uniform(cfg.rho_min, cfg.rho_max)), 4)
            spec = GeneratorSpec("er", n, rho=rho, seed=gseed)
        else:
            ma = int(cfg.m_attach[int(rng.integers(len(cfg.m_attach)))])
            spec = GeneratorSpec("ba", n, m_attach=ma, seed=gseed)
        specs.append((f"{cfg.suite}-{k:04d}", spec))
    return sorted(specs, key=lambda it: (it[1].n, _param(it[1]), it[0]))


def _param(spec: GeneratorSpec) -> float:
    return float(spec.rho if spec.family == "er" else spec.m_attach)


def run_row(graph_id: str, spec: GeneratorSpec, fast: bool = False) -> ExperimentRecord:
    rec = ExperimentRecord(graph_id=graph_id, family=spec.family, n=spec.n, m=0,
                           parameter=_param(spec), seed=spec.seed)
    t0 = time.perf_counter()
    try:
        g = generate(spec)
        rec.m = g.m
        opts = ExtractionOptions(fast=fast)
        dg = apsp(g)
        mcst, _ = extract(g, Mode.MCST, opts)
        lcst, _ = extract(g, Mode.LCST, opts)
        dm, dl = apsp(mcst), apsp(lcst)
        rs = random_tree_suite(g, spec.seed)
        nn = g.n ** 2
        rec.c_graph = int(dg.sum()) / nn
        rec.c_mcst = int(dm.sum()) / nn
        rec.c_lcst = int(dl.sum()) / nn
        rec.c_random_mean = rs.mean_compactness
        rec.c_random_min = float(rs.compactness.min())
        rec.c_random_max = float(rs.compactness.max())
        rec.d_graph, rec.d_mcst, rec.d_lcst = int(dg.max()), int(dm.max()), int(dl.max())
        rec.d_random_mean = rs.mean_diameter
    except CompactSpanError as exc:
        log.warning("row %s failed: %s", graph_id, exc)
        rec.error = f"{type(exc).__name__}: {exc}"
    rec.runtime_ms = (time.perf_counter() - t0) * 1000.0
    return rec


def _run_row_args(args):
    return run_row(*args)


def worker_count() -> int:
    cap = os.environ.get(THREADS_ENV)
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def run_suite(cfg: SuiteConfig, workers: int | None = None) -> list[ExperimentRecord]:
    specs = suite_specs(cfg)
    workers = worker_count() if workers is None else workers
    jobs = [(gid, spec, cfg.fast) for gid, spec in specs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves input order, so rows stay sorted
            return list(pool.map(_run_row_args, jobs))
    return [_run_row_args(j) for j in jobs]


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def records_csv(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_COLUMNS)
    for r in records:
        d = asdict(r)
        w.writerow([_cell(d[c]) for c in RECORD_COLUMNS])
    return buf.getvalue()


def timings_csv(records: list[ExperimentRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("graph_id", "runtime_ms"))
    for r in records:
        w.writerow((r.graph_id, f"{r.runtime_ms:.3f}"))
    return buf.getvalue()


def charts(records: list[ExperimentRecord], suite: str) -> tuple[str, str]:
    ok = [r for r in records if not r.error]
    label = suite.upper()
    xlabel = "graph index (sorted by n, then parameter)"
    comp = line_chart(
        {"G": [r.c_graph for r in ok], "MCST": [r.c_mcst for r in ok],
         "LCST": [r.c_lcst for r in ok], "random (mean)": [r.c_random_mean for r in ok]},
        f"{label} graphs: average shortest-path distance", xlabel, "compactness")
    diam = line_chart(
        {"G": [float(r.d_graph) for r in ok], "MCST": [float(r.d_mcst) for r in ok],
         "LCST": [float(r.d_lcst) for r in ok], "random (mean)": [r.d_random_mean for r in ok]},
        f"{label} graphs: diameter", xlabel, "diameter")
    return comp, diam


def write_suite(records: list[ExperimentRecord], suite: str, out_dir) -> dict[str, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    comp, diam = charts(records, suite)
    files = {
        "records": out / f"{suite}_records.csv",
        "timings": out / f"{suite}_timings.csv",
        "compactness_svg": out / f"{suite}_compactness.svg",
        "diameter_svg": out / f"{suite}_diameter.svg",
    }
    for key, text in (("records", records_csv(records)), ("timings", timings_csv(records)),
                      ("compactness_svg", comp), ("diameter_svg", diam)):
        files[key].write_text(text, encoding="utf-8", newline="\n")
    return files
