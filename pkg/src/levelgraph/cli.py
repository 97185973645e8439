"""Command-line front end.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 for
invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import accumulate

from .core import LevelParams, VertexSet, make_vertex
from .layers import enumerate_layer, layer_table, verify_identities
from .metric import LayerIndex, Side, distance
from .oracle import MAX_PAIRS_N, VerificationReport, build_graph, sweep
from .pathfinder import shortest_path



class UsageError(ValueError):
    pass


def _elements(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="levelgraph", description="Distances and layers in L_{k,n}.")
    sub = parser.add_subparsers(dest="command", required=True)

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--n", type=int, required=True)
    graph.add_argument("--k", type=int, required=True)

    def fmt(choices=("text", "json"), default="text"):
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--format", choices=choices, default=default)
        return p

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--a", type=_elements, required=True, help="e.g. 1,2")
    pair.add_argument("--b", type=_elements, required=True, help="e.g. 4,5")

    sub.add_parser("distance", parents=[graph, pair, fmt()], help="closed-form distance")
    sub.add_parser("path", parents=[graph, pair, fmt()], help="a shortest path")
    sub.add_parser("layers", parents=[graph, fmt()], help="layer counts gamma, delta, f")
    enum = sub.add_parser("enumerate", parents=[graph, fmt()], help="list one layer")
    enum.add_argument("--side", choices=[s.value for s in Side], required=True)
    enum.add_argument("--i", type=int, required=True, dest="index")
    sub.add_parser("identities", parents=[graph, fmt()], help="check both binomial identities")
    sub.add_parser("export", parents=[graph, fmt(("dot", "json"), "dot")], help="export the graph")
    verify = sub.add_parser("verify", parents=[fmt()], help="exhaustive BFS verification sweep")
    verify.add_argument("--n-max", type=int, required=True)
    verify.add_argument("--samples", type=int, default=10_000)
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _jsonable(value):
    if isinstance(value, VertexSet):
        return value.elements()
    if isinstance(value, LevelParams):
        return {"n": value.n, "k": value.k}
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return value


def _report_json(report: VerificationReport) -> dict:
    out = {
        "check": report.check,
        "n": report.params.n,
        "k": report.params.k,
        "pairs_checked": report.pairs_checked,
        "passed": report.passed,
    }
    if report.histogram is not None:
        out["histogram"] = list(report.histogram)
    out["mismatches"] = _jsonable(report.mismatches)
    return out


def _cmd_distance(params, args, out):
    A, B = make_vertex(args.a, params.n), make_vertex(args.b, params.n)
    d = distance(params, A, B)
    if args.format == "json":
        print(_dumps({"n": params.n, "k": params.k, "a": A.elements(), "b": B.elements(), "distance": d}), file=out)
    else:
        print(d, file=out)
    return 0


def _cmd_path(params, args, out):
    A, B = make_vertex(args.a, params.n), make_vertex(args.b, params.n)
    path = shortest_path(params, A, B)
    if args.format == "json":
        print(_dumps({
            "n": params.n, "k": params.k, "a": A.elements(), "b": B.elements(),
            "distance": path.length, "path": [v.elements() for v in path],
        }), file=out)
    else:
        print(f"distance {path.length}", file=out)
        print(" -> ".join(v.label() for v in path), file=out)
    return 0


def _cmd_layers(params, args, out):
    table = layer_table(params)
    if args.format == "json":
        print(_dumps({
            "n": params.n, "k": params.k, "t": params.t, "s": params.s,
            "gamma": list(table.gamma), "delta": list(table.delta),
            "f": list(table.f), "binom": table.total,
        }), file=out)
        return 0
    rows = [("i", "gamma", "delta", "sum_gamma", "sum_delta")]
    for i, (g, d, cg, cd) in enumerate(zip(table.gamma, table.delta,
                                            accumulate(table.gamma), accumulate(table.delta))):
        rows.append((str(i), str(g), str(d), str(cg), str(cd)))
    cg, cd = sum(table.gamma), sum(table.delta)
    ok = "ok" if cg == cd == table.total else "MISMATCH"
    rows.append(("total", "", "", str(cg), str(cd)))
    widths = [max(len(r[c]) for r in rows) for c in range(5)]
    for r in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)), file=out)
    print(f"C({params.n},{params.k}) = {table.total} [{ok}]", file=out)
    print("f = " + ",".join(map(str, table.f)), file=out)
    return 0


def _cmd_enumerate(params, args, out):
    which = LayerIndex(Side(args.side), args.index)
    vs = enumerate_layer(params, which)
    if args.format == "json":
        print(_dumps({
            "n": params.n, "k": params.k, "side": which.side.value, "i": which.i,
            "distance": which.distance, "vertices": [v.elements() for v in vs],
        }), file=out)
    else:
        for v in vs:
            print(v.label(), file=out)
    return 0


def _cmd_identities(params, args, out):
    r = verify_identities(params)
    if args.format == "json":
        print(_dumps({
            "n": params.n, "k": params.k, "binom": r.binom,
            "gamma_sum": r.gamma_sum, "delta_sum": r.delta_sum, "passed": r.passed,
        }), file=out)
    else:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} C({params.n},{params.k}) = {r.binom}  gamma-sum = {r.gamma_sum}  "
              f"delta-sum = {r.delta_sum}", file=out)
    return 0 if r.passed else 1


def to_dot(params: LevelParams) -> str:
    graph = build_graph(params)
    ids = [v.label() for v in graph.vertices]
    lines = [f"graph L_{params.k}_{params.n} {{"]
    for size in (params.big, params.k):
        lines.append("  subgraph {")
        lines.append("    rank=same;")
        for v, name in zip(graph.vertices, ids):
            if len(v) == size:
                lines.append(f'    "{name}";')
        lines.append("  }")
    for u, v in graph.edges():
        lines.append(f'  "{ids[u]}" -- "{ids[v]}";')
    lines.append("}")
    return "\n".join(lines)


def _cmd_export(params, args, out):
    if args.format == "dot":
        print(to_dot(params), file=out)
        return 0
    graph = build_graph(params)
    print(_dumps({
        "n": params.n, "k": params.k,
        "vertices": [v.elements() for v in graph.vertices],
        "edges": [list(e) for e in graph.edges()],
    }), file=out)
    return 0


def _cmd_verify(args, out):
    if not 1 <= args.n_max <= MAX_PAIRS_N:
        raise UsageError(f"--n-max must be in 1..{MAX_PAIRS_N}, got {args.n_max}")
    if args.samples < 1:
        raise UsageError(f"--samples must be positive, got {args.samples}")
    reports = []
    for report in sweep(args.n_max, args.samples, args.seed):
        reports.append(report)
        if args.format == "text":
            print(report.summary(), file=out)
            for m in report.mismatches[:10]:
                print("    " + " ".join(map(str, m)), file=out)
    failed = sum(not r.passed for r in reports)
    if args.format == "json":
        print(_dumps([_report_json(r) for r in reports]), file=out)
    else:
        print(f"{len(reports)} checks, {failed} failed", file=out)
    return 1 if failed else 0


_HANDLERS = {
    "distance": _cmd_distance,
    "path": _cmd_path,
    "layers": _cmd_layers,
    "enumerate": _cmd_enumerate,
    "identities": _cmd_identities,
    "export": _cmd_export,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        params = LevelParams(args.n, args.k)
        return _HANDLERS[args.command](params, args, out)
    except ValueError as exc:
        print(f"levelgraph: error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())
