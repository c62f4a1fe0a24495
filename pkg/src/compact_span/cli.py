"""Command-line entry point: ``compact-span <subcommand> ...``.

Exit codes: 0 ok, 2 usage, 3 file I/O, 4 malformed input file, 5 graph not
simple / vertex out of range, 6 disconnected, 7 oracle size guard,
8 numerical failure, 9 invalid generator spec.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .baselines import random_tree_suite
from .errors import CompactSpanError
from .experiment import SuiteConfig, run_suite, write_suite
from .extraction import ExtractionOptions, Mode, extract
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import degree_profile, read_graph, serialize_graph
from .metrics import apsp
from .oracle import (
    MAX_CENSUS_M,
    enumerate_spanning_trees,
    exact_extremal_tree,
    verify_forest_identities,
)

EXIT_IO = 3

log = logging.getLogger("compact_span")


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_extract(args) -> int:
    g = read_graph(args.input, require_connected=True)
    opts = ExtractionOptions(
        fast=args.fast,
        early_stop=args.early_stop == "on",
        tie_break=args.tie_break,
        seed=args.seed,
    )
    tree, trace = extract(g, Mode(args.mode), opts)
    _emit(serialize_graph(tree), args.output)
    if args.trace:
        Path(args.trace).write_text(trace.to_csv(), encoding="utf-8", newline="\n")
    log.info("%s: %d deletions, %d edges kept", args.mode, len(trace.records), tree.m)
    return 0


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family, args.n, rho=args.rho, m_attach=args.m_attach,
                         seed=args.seed)
    _emit(serialize_graph(generate(spec)), args.output)
    return 0


def cmd_metrics(args) -> int:
    g = read_graph(args.input, require_connected=True)
    d = apsp(g)
    lines = [
        f"n: {g.n}",
        f"m: {g.m}",
        f"volume: {degree_profile(g).volume}",
        f"compactness: {int(d.sum()) / g.n ** 2!r}",
        f"diameter: {int(d.max())}",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_oracle(args) -> int:
    g = read_graph(args.input, require_connected=True)
    trees = enumerate_spanning_trees(g)
    best = exact_extremal_tree(g, Mode.MCST, trees)
    worst = exact_extremal_tree(g, Mode.LCST, trees)
    lines = [
        f"spanning_trees: {len(trees)}",
        f"mcst_optimum: {best.value!r}",
        f"mcst_multiplicity: {best.multiplicity}",
        f"lcst_optimum: {worst.value!r}",
        f"lcst_multiplicity: {worst.multiplicity}",
    ]
    report = None
    if g.m <= MAX_CENSUS_M:
        report = verify_forest_identities(g)
        lines.append(f"identities: {'pass' if report.ok else 'FAIL'}")
    else:
        lines.append(f"identities: skipped (m > {MAX_CENSUS_M})")
    summary = "\n".join(lines) + "\n"
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        (out / "summary.txt").write_text(summary, encoding="utf-8", newline="\n")
        if report is not None:
            (out / "identities.csv").write_text(report.to_csv(), encoding="utf-8", newline="\n")
    sys.stdout.write(summary)
    if report is not None and not args.output:
        sys.stdout.write(report.to_csv())
    return 0 if report is None or report.ok else 1


def cmd_baseline(args) -> int:
    g = read_graph(args.input, require_connected=True)
    suite = random_tree_suite(g, args.seed)
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        (out / "trees.txt").write_text(suite.trees_text(), encoding="utf-8", newline="\n")
        (out / "stats.csv").write_text(suite.stats_csv(), encoding="utf-8", newline="\n")
    sys.stdout.write(f"trees: {len(suite.trees)}\n"
                     f"mean_compactness: {suite.mean_compactness!r}\n"
                     f"mean_diameter: {suite.mean_diameter!r}\n")
    return 0


def cmd_experiment(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite, count=args.count, seed=args.seed,
        n_min=args.n_min, n_max=args.n_max,
        rho_min=args.rho_min, rho_max=args.rho_max,
        m_attach=tuple(args.m_attach), fast=args.fast,
    )
    records = run_suite(cfg, workers=args.workers)
    files = write_suite(records, args.suite, args.output)
    failed = sum(bool(r.error) for r in records)
    for f in files.values():
        print(f)
    if failed:
        log.warning("%d of %d rows failed", failed, len(records))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="compact-span",
                                description="Most/least compact spanning trees of unweighted graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("extract", help="extract an MCST or LCST from an edge-list file")
    e.add_argument("-i", "--input", required=True)
    e.add_argument("-o", "--output", help="tree edge-list file (default: stdout)")
    e.add_argument("--mode", choices=[m.value for m in Mode], default="mcst")
    e.add_argument("--trace", help="write the per-iteration trace CSV here")
    e.add_argument("--fast", action="store_true", help="rank-one downdates instead of refactorizing")
    e.add_argument("--early-stop", choices=("on", "off"), default="on")
    e.add_argument("--tie-break", choices=("lex", "random"), default="lex")
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(func=cmd_extract)

    g = sub.add_parser("gen", help="generate a benchmark graph")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--rho", type=float)
    g.add_argument("--m-attach", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    m = sub.add_parser("metrics", help="compactness and diameter of a graph")
    m.add_argument("-i", "--input", required=True)
    m.add_argument("-o", "--output")
    m.set_defaults(func=cmd_metrics)

    o = sub.add_parser("oracle", help="brute-force optima and forest identities (small graphs)")
    o.add_argument("-i", "--input", required=True)
    o.add_argument("-o", "--output", help="directory for summary.txt and identities.csv")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("baseline", help="one Wilson random spanning tree per vertex")
    b.add_argument("-i", "--input", required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("-o", "--output", help="directory for trees.txt and stats.csv")
    b.set_defaults(func=cmd_baseline)

    x = sub.add_parser("experiment", help="run an ER or BA comparison suite")
    x.add_argument("suite", choices=("er", "ba"))
    x.add_argument("--count", type=int, help="graphs in the suite (default 50 er / 36 ba)")
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--n-min", type=int, default=10)
    x.add_argument("--n-max", type=int, default=99)
    x.add_argument("--rho-min", type=float, default=0.25)
    x.add_argument("--rho-max", type=float, default=0.5)
    x.add_argument("--m-attach", type=int, nargs="+", default=[1, 2])
    x.add_argument("--fast", action="store_true")
    x.add_argument("--workers", type=int, help="process count (default: CPUs, capped by COMPACT_SPAN_THREADS)")
    x.add_argument("-o", "--output", required=True, help="output directory")
    x.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CompactSpanError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
