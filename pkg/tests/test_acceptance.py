"""Acceptance criteria, one test per criterion.

Each test appends a PASS/FAIL line to the ``acceptance criteria`` section of
the pytest summary and also prints it (visible with ``-s``).
"""

import time
import xml.etree.ElementTree as ET
from collections import Counter

import numpy as np
import pytest
from scipy.stats import chi2

from compact_span.baselines import wilson_random_tree
from compact_span.experiment import SuiteConfig, records_csv, run_suite, write_suite
from compact_span.extraction import ExtractionOptions, Mode, extract
from compact_span.forest import build_laplacian, edge_metrics, forest_matrices
from compact_span.generators import erdos_renyi
from compact_span.graph import complete_graph, degree_profile, path_graph, star_graph
from compact_span.metrics import compactness, diameter
from compact_span.oracle import (
    enumerate_spanning_trees,
    exact_extremal_tree,
    verify_forest_identities,
)

from conftest import random_connected_graphs

SVG_NS = "{http://www.w3.org/2000/svg}"


def _report(log, num, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {detail}"
    log.append(line)
    print(line)


def _is_star(tree):
    return tree.m == tree.n - 1 and int(degree_profile(tree).degrees.max()) == tree.n - 1


def _is_path(tree):
    deg = degree_profile(tree).degrees
    return tree.m == tree.n - 1 and int(deg.max()) <= 2 and diameter(tree) == tree.n - 1


def test_c01_k4_end_states(acceptance_log, k4):
    extract(k4, Mode.MCST)  # warm-up (imports, LAPACK dispatch)
    out = {}
    for mode in Mode:
        t0 = time.perf_counter()
        tree, trace = extract(k4, mode)
        out[mode] = (tree, len(trace.records), (time.perf_counter() - t0) * 1000)
    star_ok = _is_star(out[Mode.MCST][0]) and out[Mode.MCST][1] == 3
    path_ok = _is_path(out[Mode.LCST][0]) and out[Mode.LCST][1] == 3
    slowest = max(v[2] for v in out.values())
    ok = star_ok and path_ok and slowest < 10
    _report(acceptance_log, 1, ok, f"K4 MCST star={star_ok}, LCST path={path_ok}, "
                                   f"slowest run {slowest:.2f} ms")
    assert star_ok and path_ok
    assert slowest < 10


def test_c02_pendant_triangle_decision(acceptance_log, tpp):
    by_edge = {m.edge: m for m in edge_metrics(tpp, forest_matrices(tpp))}
    d03, d12, o03 = by_edge[(0, 3)].delta, by_edge[(1, 2)].delta, by_edge[(0, 3)].omega
    _, trace = extract(tpp, Mode.MCST)
    deleted = trace.deleted_edges
    ok = (abs(d03 - 0.6) <= 1e-9 and abs(d12 - 0.5) <= 1e-9 and abs(o03 - 1.0) <= 1e-9
          and deleted == [(1, 2)])
    _report(acceptance_log, 2, ok, f"delta(0,3)={d03:.12f} delta(1,2)={d12:.12f} "
                                   f"omega(0,3)={o03:.12f} deleted={deleted}")
    assert d03 == pytest.approx(0.6, abs=1e-9)
    assert d12 == pytest.approx(0.5, abs=1e-9)
    assert o03 == pytest.approx(1.0, abs=1e-9)
    assert deleted == [(1, 2)]


def test_c03_complete_graph_sweep(acceptance_log):
    t0 = time.perf_counter()
    bad = []
    for n in range(5, 11):
        g = complete_graph(n)
        mcst, _ = extract(g, Mode.MCST)
        lcst, _ = extract(g, Mode.LCST)
        if not _is_star(mcst):
            bad.append(f"MCST K{n}")
        if not _is_path(lcst):
            bad.append(f"LCST K{n}")
        # oracle agreement: S_n and P_n are the exact optima
        assert compactness(mcst) == pytest.approx(compactness(star_graph(n)))
        assert compactness(lcst) == pytest.approx(compactness(path_graph(n)))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    _report(acceptance_log, 3, ok, f"n=5..10 mismatches={bad or 'none'}, {elapsed:.2f} s")
    assert not bad
    assert elapsed < 5


def test_c04_oracle_identity_suite(acceptance_log):
    graphs = random_connected_graphs(200, 2, 6, seed=404)
    t0 = time.perf_counter()
    failures = []
    checks = Counter()
    for k, g in enumerate(graphs):
        rep = verify_forest_identities(g, tol=1e-9, bipartition=True)
        checks.update(c.name for c in rep.checks)
        failures.extend((k, c.name, c.max_deviation) for c in rep.failures())
    elapsed = time.perf_counter() - t0
    ok = not failures and len(graphs) >= 200 and elapsed < 120
    _report(acceptance_log, 4, ok, f"{len(graphs)} graphs, {sum(checks.values())} checks "
                                   f"over {len(checks)} identities, {len(failures)} failures, "
                                   f"{elapsed:.1f} s")
    expected = {"census_internal", "Q_vs_forest_ratio", "det_I_plus_L_vs_census",
                "one_edge_root_count", "n-1_edge_counts_vs_tree_count",
                "Lplus_vs_dense_forest_ratio", "bipartition_identity"}
    assert set(checks) == expected
    assert all(checks[name] == len(graphs) for name in expected)
    assert not failures
    assert elapsed < 120


@pytest.fixture(scope="module")
def er_hundred():
    cfg = SuiteConfig("er", count=100, seed=2022, n_min=10, n_max=60,
                      rho_min=0.25, rho_max=0.5, fast=True)
    return run_suite(cfg, workers=1)


def test_c05_near_extremality(acceptance_log, er_hundred):
    recs = er_hundred
    errors = [r.graph_id for r in recs if r.error]
    below = [r for r in recs if r.c_mcst <= r.c_random_mean]
    exceptions = [r for r in recs if r.c_mcst > r.c_random_mean]
    worst = max((r.mcst_excess for r in exceptions), default=0.0)
    order_ok = all(r.c_mcst <= r.c_lcst for r in recs)
    graph_ok = all(r.c_graph <= min(r.c_mcst, r.c_lcst, r.c_random_min) for r in recs)
    share = len(below) / len(recs)
    ok = not errors and share >= 0.95 and worst < 0.02 and order_ok and graph_ok
    detail = (f"{len(recs)} ER graphs, MCST<=random mean in {share:.0%}, "
              f"{len(exceptions)} exceptions (worst excess {worst:.2%}), "
              f"MCST<=LCST all={order_ok}, G<=trees all={graph_ok}")
    _report(acceptance_log, 5, ok, detail)
    for r in exceptions:
        print(f"    exception {r.graph_id}: n={r.n} rho={r.parameter} excess={r.mcst_excess:.3%}")
    assert not errors
    assert share >= 0.95
    assert worst < 0.02
    assert order_ok and graph_ok


def test_c06_exact_gap_statistics(acceptance_log):
    graphs = random_connected_graphs(50, 3, 7, seed=606, rho_lo=0.3, rho_hi=0.9)
    gaps = []
    for g in graphs:
        best = exact_extremal_tree(g, Mode.MCST, enumerate_spanning_trees(g))
        tree, _ = extract(g, Mode.MCST)
        gaps.append(compactness(tree) - best.value)
    gaps = np.array(gaps)
    zero = int(np.sum(np.abs(gaps) <= 1e-12))
    nonneg = bool((gaps >= -1e-12).all())
    dist = Counter(round(float(x), 6) for x in gaps)
    ok = nonneg and zero > len(gaps) / 2
    _report(acceptance_log, 6, ok, f"{len(gaps)} graphs, gap>=0 all={nonneg}, "
                                   f"zero gap {zero}/{len(gaps)}, max {gaps.max():.6f}")
    dist_line = "    gap distribution: " + ", ".join(
        f"{k:g}x{v}" for k, v in sorted(dist.items()))
    acceptance_log.append(dist_line)
    print(dist_line)
    assert nonneg
    assert zero > len(gaps) / 2


def test_c07_resistance_sum(acceptance_log):
    graphs = random_connected_graphs(100, 2, 100, seed=707, rho_lo=0.3, rho_hi=0.8)
    worst = 0.0
    for g in graphs:
        # independent reference: dense pseudoinverse, not the package factorization
        lp = np.linalg.pinv(build_laplacian(g), rcond=1e-10, hermitian=True)
        e = g.edge_array()
        ref = float(np.sum(lp[e[:, 0], e[:, 0]] + lp[e[:, 1], e[:, 1]] - 2 * lp[e[:, 0], e[:, 1]]))
        total = sum(m.omega for m in edge_metrics(g, forest_matrices(g)))
        worst = max(worst, abs(total - (g.n - 1)), abs(ref - (g.n - 1)))
    ok = worst <= 1e-6
    _report(acceptance_log, 7, ok, f"{len(graphs)} graphs (n up to {max(g.n for g in graphs)}), "
                                   f"max |sum omega - (n-1)| = {worst:.2e}")
    assert worst <= 1e-6


def test_c08_downdate_equivalence(acceptance_log):
    graphs = random_connected_graphs(100, 3, 30, seed=808, rho_lo=0.25, rho_hi=0.9)
    trace_mismatch = 0
    worst = 0.0

    def observer(current, fm):
        nonlocal worst
        lap = build_laplacian(current)
        q_ref = np.linalg.inv(np.eye(current.n) + lap)
        lp_ref = np.linalg.pinv(lap, rcond=1e-10, hermitian=True)
        worst = max(worst, float(np.abs(fm.q - q_ref).max()), float(np.abs(fm.lplus - lp_ref).max()))

    for g in graphs:
        for mode in Mode:
            _, ref = extract(g, mode, ExtractionOptions(fast=False))
            _, fast = extract(g, mode, ExtractionOptions(fast=True, observer=observer))
            if ref.deleted_edges != fast.deleted_edges:
                trace_mismatch += 1
    ok = trace_mismatch == 0 and worst <= 1e-8
    _report(acceptance_log, 8, ok, f"{len(graphs)} graphs x 2 modes, trace mismatches "
                                   f"{trace_mismatch}, max matrix deviation {worst:.2e}")
    assert trace_mismatch == 0
    assert worst <= 1e-8


def test_c09_wilson_uniformity(acceptance_log, k4):
    trees = {t.edges for t in enumerate_spanning_trees(k4)}
    samples = 16_000
    counts = Counter(wilson_random_tree(k4, s % 4, s).edges for s in range(samples))
    expected = samples / len(trees)
    stat = sum((counts[t] - expected) ** 2 / expected for t in trees)
    crit = chi2.ppf(1 - 0.001, len(trees) - 1)
    outside = set(counts) - trees
    ok = not outside and len(trees) == 16 and stat < crit
    _report(acceptance_log, 9, ok, f"{samples} samples over {len(trees)} trees, "
                                   f"chi2={stat:.2f} < {crit:.2f}")
    assert not outside and len(trees) == 16
    assert stat < crit


@pytest.mark.slow
def test_c10_performance(acceptance_log):
    g = erdos_renyi(100, 0.5, 10)
    t0 = time.perf_counter()
    ref_tree, ref = extract(g, Mode.MCST, ExtractionOptions(fast=False))
    t_ref = time.perf_counter() - t0
    t0 = time.perf_counter()
    fast_tree, fast = extract(g, Mode.MCST, ExtractionOptions(fast=True))
    t_fast = time.perf_counter() - t0
    ok = t_ref < 60 and t_fast < 10 and ref_tree == fast_tree
    _report(acceptance_log, 10, ok, f"ER n=100 rho=0.5 m={g.m}, {len(ref.records)} iterations, "
                                    f"reference {t_ref:.2f} s, fast {t_fast:.2f} s")
    assert ref.deleted_edges == fast.deleted_edges
    assert t_ref < 60
    assert t_fast < 10


def _svg_ok(path):
    root = ET.parse(path).getroot()
    return root.tag == f"{SVG_NS}svg" and len(root.findall(f"{SVG_NS}polyline")) == 4


def test_c11_experiment_suites(acceptance_log, tmp_path):
    configs = [SuiteConfig("er", count=20, seed=11, n_min=10, n_max=40, fast=True),
               SuiteConfig("ba", count=16, seed=11, n_min=10, n_max=40, m_attach=(1, 2, 3),
                           fast=True)]
    details, ok, failed, worst_all = [], True, [], 0.0
    for cfg in configs:
        a = write_suite(run_suite(cfg, workers=1), cfg.suite, tmp_path / "a")
        recs = run_suite(cfg, workers=1)
        b = write_suite(recs, cfg.suite, tmp_path / "b")
        identical = all(a[k].read_bytes() == b[k].read_bytes()
                        for k in ("records", "compactness_svg", "diameter_svg"))
        csv_ok = records_csv(recs) == a["records"].read_text()
        svgs = _svg_ok(a["compactness_svg"]) and _svg_ok(a["diameter_svg"])
        strict = [r.graph_id for r in recs if r.error or not
                  (r.c_graph <= r.c_mcst and r.c_random_mean <= r.c_lcst and r.c_mcst <= r.c_lcst)]
        # MCST above the random mean is tolerated only as a small, documented exception
        excess = [r for r in recs if r.c_mcst > r.c_random_mean]
        worst = max((r.mcst_excess for r in excess), default=0.0)
        ok &= identical and csv_ok and svgs and not strict and worst < 0.02
        details.append(f"{cfg.suite}: {len(recs)} rows identical={identical and csv_ok} svg={svgs} "
                       f"order violations={len(strict)} mcst>random={len(excess)}")
        failed.extend(strict)
        worst_all = max(worst_all, worst)
    _report(acceptance_log, 11, ok, "; ".join(details))
    assert ok, (failed, worst_all)
