"""Batch verification driver.

Subcommands sweep tree token graphs (theorem), cross-check the constructive
path engine (paths), reproduce the two-clique counterexample family
(hfamily), and scan girth-5 graphs for the connectivity conjecture
(conjecture).  Every run streams one JSON record per (graph, k) unit;
a human summary follows unless --json is given.  Exit code 1 flags a
violated record in the theorem or paths modes, 2 a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from collections import Counter

from .connectivity import edge_connectivity, vertex_connectivity
from .families import Case1Context, FamilyConstructionError, build_family
from .graphs import (
    Graph,
    Graph6Error,
    bridged_cliques,
    emit_graph6,
    enumerate_trees,
    girth,
    parse_graph6,
)
from .tokens import build_token_graph, min_token_degree

__all__ = ["main"]


def _theorem_unit(arg: tuple[str, int]) -> dict:
    """Check kappa = lambda = delta on one (tree, k) token graph."""
    g6, k = arg
    tree = parse_graph6(g6)
    record = {"graph_id": g6, "k": k, "delta": None, "kappa": None, "lambda": None}
    try:
        tg = build_token_graph(tree, k)
    except ValueError as exc:
        record.update(status="skipped", reason=str(exc))
        return record
    fk = tg.as_graph()
    delta = fk.min_degree()
    kappa = vertex_connectivity(fk, distance2_only=True)
    lam = edge_connectivity(fk)
    record.update(delta=delta, kappa=kappa)
    record["lambda"] = lam
    record["status"] = "confirmed" if kappa == lam == delta else "violated"
    return record


def _paths_unit(arg: tuple[str, int]) -> dict:
    """Run the path engine on every distance-2 pair of one (tree, k)."""
    g6, k = arg
    tree = parse_graph6(g6)
    record = {
        "graph_id": g6,
        "k": k,
        "delta": None,
        "kappa": None,
        "lambda": None,
        "pairs": 0,
        "min_family_size": None,
        "max_slack_case1": None,
        "max_slack_case2": None,
    }
    try:
        tg = build_token_graph(tree, k)
    except ValueError as exc:
        record.update(status="skipped", reason=str(exc))
        return record
    delta = min_token_degree(tree, k)
    record["delta"] = delta
    pairs = 0
    min_size: int | None = None
    max_slack: dict[int, int | None] = {1: None, 2: None}
    for x_cfg, y_cfg in tg.distance2_pairs():
        pairs += 1
        try:
            result = build_family(tree, x_cfg, y_cfg, delta)
        except (FamilyConstructionError, ValueError) as exc:
            record.update(
                pairs=pairs,
                status="violated",
                instance={"x": list(x_cfg), "y": list(y_cfg), "error": str(exc)},
            )
            return record
        size = len(result.family)
        min_size = size if min_size is None else min(min_size, size)
        case = 1 if isinstance(result.context, Case1Context) else 2
        slack = result.delta - result.m
        prev = max_slack[case]
        max_slack[case] = slack if prev is None else max(prev, slack)
    record.update(
        pairs=pairs,
        min_family_size=min_size,
        max_slack_case1=max_slack[1],
        max_slack_case2=max_slack[2],
        status="confirmed",
    )
    return record


def _hfamily_unit(m: int) -> dict:
    """Check the two-clique bridge graph H(m) against its known values."""
    h = bridged_cliques(m)
    g6 = emit_graph6(h)
    record = {
        "graph_id": g6,
        "m": m,
        "k": 2,
        "delta": None,
        "kappa": None,
        "lambda": None,
        "kappa_expected": m - 1,
        "delta_expected": 2 * (m - 2),
    }
    try:
        tg = build_token_graph(h, 2)
    except ValueError as exc:
        record.update(status="skipped", reason=str(exc))
        return record
    fk = tg.as_graph()
    delta = fk.min_degree()
    kappa = vertex_connectivity(fk, distance2_only=True)
    lam = edge_connectivity(fk)
    record.update(delta=delta, kappa=kappa)
    record["lambda"] = lam
    ok = kappa == lam == m - 1 and delta == 2 * (m - 2)
    record["status"] = "confirmed" if ok else "violated"
    return record


def _conjecture_unit(arg: tuple[str, int]) -> dict:
    """Compare kappa and delta of F_k(G) for one girth-5 input graph."""
    g6, k = arg
    g = parse_graph6(g6)
    record = {"graph_id": g6, "k": k, "delta": None, "kappa": None, "lambda": None}
    try:
        tg = build_token_graph(g, k)
    except ValueError as exc:
        record.update(status="skipped", reason=str(exc))
        return record
    fk = tg.as_graph()
    delta = fk.min_degree()
    kappa = vertex_connectivity(fk, distance2_only=True)
    record.update(delta=delta, kappa=kappa)
    record["status"] = "confirmed" if kappa == delta else "violated"
    return record


_UNIT_RUNNERS = {
    "theorem": _theorem_unit,
    "paths": _paths_unit,
    "hfamily": _hfamily_unit,
    "conjecture": _conjecture_unit,
}


def _pool_worker(task: tuple[str, object]) -> dict:
    mode, arg = task
    return _UNIT_RUNNERS[mode](arg)


def _run_units(mode: str, units: list, jobs: int):
    """Yield one record per unit, in unit order regardless of jobs."""
    tasks = [(mode, u) for u in units]
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield _pool_worker(task)
        return
    with multiprocessing.Pool(jobs) as pool:
        yield from pool.imap(_pool_worker, tasks, chunksize=1)


def _emit(records, args, summary_head: str) -> tuple[Counter, list[dict]]:
    """Stream records as JSON lines; collect status counts and violations."""
    counts: Counter = Counter()
    violated: list[dict] = []
    for record in records:
        counts[record["status"]] += 1
        if record["status"] == "violated":
            violated.append(record)
        print(json.dumps(record))
    if not args.json:
        parts = [f"{counts[s]} {s}" for s in ("confirmed", "violated", "skipped") if counts[s]]
        total = sum(counts.values())
        print(f"# {summary_head}: {total} records: {', '.join(parts) or 'none'}")
        for record in violated:
            print(f"#   violated: graph_id={record['graph_id']} k={record['k']}")
    return counts, violated


def _tree_units(n_max: int) -> list[tuple[str, int]]:
    units = []
    for n in range(2, n_max + 1):
        for tree in enumerate_trees(n):
            g6 = emit_graph6(tree)
            units.extend((g6, k) for k in range(1, n))
    return units


def cmd_theorem(args) -> int:
    units = _tree_units(args.n_max)
    records = _run_units("theorem", units, args.jobs)
    counts, _ = _emit(records, args, f"theorem n<={args.n_max}")
    return 1 if counts["violated"] else 0


def cmd_paths(args) -> int:
    units = _tree_units(args.n_max)
    records = _run_units("paths", units, args.jobs)
    counts, _ = _emit(records, args, f"paths n<={args.n_max}")
    return 1 if counts["violated"] else 0


def cmd_hfamily(args) -> int:
    units = list(range(args.m_min, args.m_max + 1))
    records = _run_units("hfamily", units, args.jobs)
    _emit(records, args, f"hfamily m={args.m_min}..{args.m_max}")
    return 0


def cmd_conjecture(args) -> int:
    try:
        with open(args.input, encoding="ascii") as fh:
            lines = [line.strip() for line in fh if line.strip()]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    def skip_record(g6: str, k: int | None, reason: str) -> dict:
        return {"graph_id": g6, "k": k, "delta": None, "kappa": None,
                "lambda": None, "status": "skipped", "reason": reason}

    # plan holds skip records and work units in input file order
    plan: list[tuple[str, object]] = []
    units: list[tuple[str, int]] = []
    for line in lines:
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"error: {line!r}: {exc}", file=sys.stderr)
            return 2
        g6 = emit_graph6(g)
        if not g.is_connected():
            plan.append(("skip", skip_record(g6, None, "not connected")))
            continue
        if girth(g) < 5:
            plan.append(("skip", skip_record(g6, None, "girth<5")))
            continue
        if args.k is not None:
            ks = [args.k] if 2 <= args.k <= g.n - 2 else []
            if not ks:
                plan.append(("skip", skip_record(g6, args.k, "k out of range")))
        else:
            ks = list(range(2, g.n - 1))
            if not ks:
                plan.append(("skip", skip_record(g6, None, "no admissible k")))
        for k in ks:
            plan.append(("unit", None))
            units.append((g6, k))

    def stream():
        results = _run_units("conjecture", units, args.jobs)
        for kind, payload in plan:
            yield payload if kind == "skip" else next(results)

    _emit(stream(), args, f"conjecture {args.input}")
    return 0


def _int_range(lo: int, hi: int):
    def parse(text: str) -> int:
        value = int(text)
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"must be in [{lo}, {hi}]")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit JSON records only, no summary")
    common.add_argument("--jobs", type=_int_range(1, 64), default=1, metavar="J",
                        help="worker processes (default 1)")

    parser = argparse.ArgumentParser(
        prog="tokengraphs",
        description="verify tree token graph connectivity results at desk scale",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("theorem", parents=[common],
                       help="check kappa = lambda = delta over all trees up to n-max")
    p.add_argument("--n-max", type=_int_range(2, 10), default=7, metavar="N")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("paths", parents=[common],
                       help="build disjoint path families for every distance-2 pair")
    p.add_argument("--n-max", type=_int_range(2, 8), default=6, metavar="N")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("hfamily", parents=[common],
                       help="reproduce the two-clique counterexample values")
    p.add_argument("--m-min", type=_int_range(3, 6), default=4, metavar="A")
    p.add_argument("--m-max", type=_int_range(3, 6), default=6, metavar="B")
    p.set_defaults(func=cmd_hfamily)

    p = sub.add_parser("conjecture", parents=[common],
                       help="scan girth-5 graphs for kappa = delta in every F_k")
    p.add_argument("--input", required=True, metavar="FILE.g6",
                   help="graph6 file, one graph per line")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int, default=None, metavar="K")
    group.add_argument("--all-k", action="store_true")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if getattr(args, "m_min", None) is not None and args.m_min > args.m_max:
        print("error: --m-min above --m-max", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
