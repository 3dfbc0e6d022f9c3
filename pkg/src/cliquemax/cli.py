"""Command-line front end.

Exit status: 0 on success, 1 when a law is violated or a search disagrees
with the extremal family, 2 on usage, input or capacity errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import laws
from .cliques import clique_profile
from .clusters import analyze_cluster, check_degree_bound, classify_cluster, find_clusters
from .colex import build_colex, colex_unrank, extremal_family
from .graph_core import Graph, bits, components, parse_graph, to_edgelist, to_graph6
from .moves import colex_fold, fold, improve, partial_fold
from .search import SearchReport, SearchSpec, enumerate_graphs, f_max, verify_kt, verify_main_theorem

FORMATS = ("json", "graph6", "tsv")


class UsageError(Exception):
    pass


def emit_report(report, fmt: str = "json") -> str:
    """Render a SearchReport, a list of SearchReports, or a list of LawReports."""
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    items = report if isinstance(report, list) else [report]
    searches = all(isinstance(x, SearchReport) for x in items)
    if fmt == "json":
        payload = [x.to_json() for x in items]
        return json.dumps(payload if isinstance(report, list) else payload[0]) + "\n"
    if fmt == "graph6":
        if not searches:
            raise UsageError("graph6 output is only available for search reports")
        return "".join(c + "\n" for x in items for c in sorted(x.argmax_certificates))
    if searches:
        rows = ["m\tr\tt\tf\tg\tagrees\tgraphs"]
        for x in items:
            t = "" if x.t is None else str(x.t)
            rows.append(f"{x.m}\t{x.r}\t{t}\t{x.f_value}\t{x.g_value}\t{str(x.agrees).lower()}\t{x.graphs_enumerated}")
    else:
        rows = ["law\tchecked\tvacuous\tviolations"]
        for x in items:
            rows.append(f"{x.law_id}\t{x.instances_checked}\t{x.vacuous}\t{len(x.violations)}")
    return "\n".join(rows) + "\n"


def _read_graph(args) -> Graph:
    if args.edgelist_stdin or args.input == "-":
        text = sys.stdin.read()
    elif args.input:
        with open(args.input) as fh:
            text = fh.read()
    else:
        raise UsageError("no input graph (use --input FILE or --edgelist-stdin)")
    return parse_graph(text)


def _graph_args(p: argparse.ArgumentParser, need_r: bool) -> None:
    p.add_argument("--input", help="graph6 or edge-list file ('-' for stdin)")
    p.add_argument("--edgelist-stdin", action="store_true", help="read the graph from stdin")
    p.add_argument("--r", type=int, required=need_r)


def _component_class(g: Graph, r: int, t: int) -> str:
    comp = next(c for c in components(g) if c & t)
    keep = list(bits(comp))
    sub = g.induced(comp)
    local = sum(1 << keep.index(v) for v in bits(t))
    return classify_cluster(sub, r, local).value


def _cmd_colex(args) -> int:
    if args.edges is not None:
        h = build_colex(args.edges)
        if args.edgelist:
            pairs = (colex_unrank(i) for i in range(1, args.edges + 1))
            sys.stdout.write("".join(f"{u} {v}\n" for u, v in pairs))
        else:
            sys.stdout.write(to_graph6(h) + "\n")
        return 0
    if args.m is None or args.r is None:
        raise UsageError("colex needs --edges N, or --m and --r for the extremal family")
    for h in extremal_family(args.m, args.r):
        sys.stdout.write(to_edgelist(h) + "\n" if args.edgelist else to_graph6(h) + "\n")
    return 0


def _cmd_count(args) -> int:
    h = _read_graph(args)
    if args.r is not None:
        check_degree_bound(h, args.r)
    print(json.dumps(clique_profile(h).to_json()))
    return 0


def _cmd_clusters(args) -> int:
    h = _read_graph(args)
    check_degree_bound(h, args.r)
    out = []
    for t in find_clusters(h, args.r):
        entry = analyze_cluster(h, args.r, t).to_json()
        entry["class"] = _component_class(h, args.r, t)
        out.append(entry)
    print(json.dumps(out))
    return 0


def _cmd_move(args) -> int:
    h = _read_graph(args)
    check_degree_bound(h, args.r)
    clusters = find_clusters(h, args.r)
    if not 1 <= args.cluster <= len(clusters):
        raise UsageError(f"cluster index {args.cluster} out of range 1..{len(clusters)}")
    cd = analyze_cluster(h, args.r, clusters[args.cluster - 1])
    move = {"fold": fold, "colex_fold": colex_fold, "partial_fold": partial_fold}[args.kind]
    print(json.dumps(move(h, cd).to_json()))
    return 0


def _cmd_improve(args) -> int:
    h = _read_graph(args).strip_isolated()
    check_degree_bound(h, args.r)
    step = improve(h, args.r)
    if step is None:
        print(json.dumps({"improved": False}))
    else:
        result, case = step
        print(json.dumps({"improved": True, "case": case, "result_graph6": to_graph6(result)}))
    return 0


def _cmd_search(args) -> int:
    if args.m is None or args.r is None:
        raise UsageError("search needs --m and --r")
    if args.format == "tsv":
        reports = [_search_one(m, args) for m in range(1, args.m + 1)]
        sys.stdout.write(emit_report(reports, "tsv"))
        return 0 if all(x.agrees for x in reports) else 1
    if args.enumerate:
        spec = SearchSpec(args.m, args.r, thread_count=args.jobs, connected_only=args.connected_only, force=args.force)
        for h in enumerate_graphs(spec):
            sys.stdout.write(to_graph6(h) + "\n")
        return 0
    report = _search_one(args.m, args)
    sys.stdout.write(emit_report(report, args.format))
    return 0 if report.agrees else 1


def _search_one(m: int, args) -> SearchReport:
    if args.t is not None:
        return verify_kt(m, args.r, args.t, args.jobs, args.force)
    if args.connected_only:
        return f_max(SearchSpec(m, args.r, thread_count=args.jobs, connected_only=True, force=args.force))
    return verify_main_theorem(m, args.r, args.jobs, args.force)


LAWS = {
    "kruskal_katona": lambda inst, a: laws.check_kruskal_katona(laws.small_graphs(7)),
    "blue_bound": lambda inst, a: laws.check_blue_bound(inst, a.t),
    "numt": lambda inst, a: laws.check_numt(40, 10),
    "colex_fold": lambda inst, a: laws.check_colex_fold(inst),
    "partial_fold": lambda inst, a: laws.check_partial_fold(inst),
    "fixed_loss_bounds": lambda inst, a: laws.check_fixed_loss_bounds(7),
    "sbound": lambda inst, a: laws.check_sbound(inst),
    "clusnum": lambda inst, a: laws.check_clusnum(inst, a.t),
    "averaging": lambda inst, a: laws.check_averaging(inst, a.strict),
    "disco": lambda inst, a: laws.check_disco(60, range(1, 6)),
    "cluster_structure": lambda inst, a: laws.check_cluster_structure(inst),
    "move_accounting": lambda inst, a: laws.check_move_accounting(inst),
    "improve_or_average": lambda inst, a: laws.check_improve_or_average(inst),
}


def _cmd_laws(args) -> int:
    m_max = args.m if args.m is not None else laws.STANDARD_M
    r_values = range(1, (args.r if args.r is not None else max(laws.STANDARD_R)) + 1)
    names = args.law or list(LAWS)
    unknown = [n for n in names if n not in LAWS]
    if unknown:
        raise UsageError(f"unknown law(s): {', '.join(unknown)}")
    if args.format == "graph6":
        raise UsageError("graph6 output is only available for search reports")
    inst = list(laws.connected_instances(r_values, m_max, args.jobs))
    reports = [LAWS[n](inst, args) for n in names]
    sys.stdout.write(emit_report(reports, args.format))
    return 1 if any(r.violations for r in reports) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquemax", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("colex", help="print C(m) or the extremal family")
    p.add_argument("--edges", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--edgelist", action="store_true")
    p.set_defaults(func=_cmd_colex)

    p = sub.add_parser("count", help="clique profile of a graph")
    _graph_args(p, need_r=False)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("clusters", help="cluster report")
    _graph_args(p, need_r=True)
    p.set_defaults(func=_cmd_clusters)

    p = sub.add_parser("move", help="apply a local move at a cluster")
    _graph_args(p, need_r=True)
    p.add_argument("--kind", choices=("fold", "colex_fold", "partial_fold"), default="fold")
    p.add_argument("--cluster", type=int, default=1, help="1-based index into the cluster list")
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("improve", help="one improving move for a connected graph")
    _graph_args(p, need_r=True)
    p.set_defaults(func=_cmd_improve)

    for name, func in (("search", _cmd_search), ("laws", _cmd_laws)):
        p = sub.add_parser(name)
        p.add_argument("--m", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--connected-only", action="store_true")
        p.add_argument("--force", action="store_true")
        p.add_argument("--format", choices=FORMATS, default="json")
        p.set_defaults(func=func)
    search_p = sub.choices["search"]
    search_p.add_argument("--enumerate", action="store_true", help="list every class as graph6")
    laws_p = sub.choices["laws"]
    laws_p.add_argument("--law", action="append", help="law id (repeatable); default all")
    laws_p.add_argument("--strict", action="store_true", help="proof-level averaging hypothesis")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
