"""Command-line entry point: ``vertexcuts <subcommand> ...``.

Exit status: 0 on success, 1 when ``verify`` finds violations of a proven
theorem under its own preset, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bipstats, census, families
from .cuts import PRESETS, CutClass, Theorem, find_cut
from .filters import check_candidate
from .graph import Graph, GraphError, parse_edge_list, parse_graph6, to_edge_list, to_graph6

DEFAULT_PRESET = {"forest": "forest", "bipartite": "bipartite", "independent": "chen-yu", "conjecture": "conjecture"}


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            toks = line.split()
            return len(toks) == 2 and all(t.isdigit() for t in toks)
    return False


def load_graphs(inline: Sequence[str], path: str | None) -> list[Graph]:
    graphs = [parse_graph6(s) for s in inline]
    if path:
        text = _read_text(path)
        if _looks_like_edge_list(text):
            graphs.append(parse_edge_list(text))
        else:
            graphs.extend(census.read_graph6(text.splitlines()))
    if not graphs:
        raise GraphError("no input graph: give graph6 strings or --file")
    return graphs


def _g6(g: Graph) -> str:
    return to_graph6(g).decode()


# subcommands ---------------------------------------------------------------------

def cmd_find_cut(args) -> int:
    cls = CutClass(args.cls)
    graphs = load_graphs(args.graph, args.file)
    for g in graphs:
        cert = find_cut(g, cls)
        if args.format == "machine":
            _emit({"graph6": _g6(g), "class": cls.value, "cut": cert.to_record() if cert else None})
        else:
            body = str(cert) if cert else "none"
            print(body if len(graphs) == 1 else f"{_g6(g)}  {body}")
    return 0


def cmd_verify(args) -> int:
    theorem = Theorem(args.theorem)
    params = PRESETS[args.preset] if args.preset else None
    if args.input:
        source = census.read_graph6(_read_text(args.input).splitlines())
        report = census.verify_theorem(source, theorem, params, jobs=args.jobs, label=args.input)
    else:
        if args.n_max >= 8 and not args.allow_n8:
            raise GraphError("n = 8 needs --allow-n8 (tens of millions of labeled graphs)")
        report = census.census(theorem, args.n_min, args.n_max, iso_reject=args.iso,
                               allow_n8=args.allow_n8, params=params, jobs=args.jobs)
    if args.format == "machine":
        print(report.to_json_lines())
    else:
        print(report.to_text())
    proven = theorem.proven and (params is None or params == theorem.preset)
    return 1 if report.violations and proven else 0


def cmd_filter(args) -> int:
    cls = CutClass(args.cls)
    p = PRESETS[args.preset or DEFAULT_PRESET[args.cls]]
    for g in load_graphs(args.graph, args.file):
        report = check_candidate(g, cls, p, run_all=args.all_checks)
        if args.format == "machine":
            for rec in report.to_records():
                _emit({"graph6": _g6(g), **rec})
        else:
            print(f"graph {_g6(g)}  class {cls.value}  params {p}")
            print(report.to_text())
    return 0


def cmd_gen(args) -> int:
    if args.script_help:
        print(families.SCRIPT_HELP, end="")
        return 0
    if not args.script:
        raise GraphError("gen needs a script file (or '-' for stdin)")
    g = families.run_script(_read_text(args.script))
    if args.format == "machine":
        _emit({"graph6": _g6(g), "n": g.n, "m": g.m, "edges": g.edges()})
    elif args.edge_list:
        print(to_edge_list(g), end="")
    else:
        print(_g6(g))
    return 0


def cmd_stats(args) -> int:
    for g in load_graphs(args.graph, args.file):
        s = bipstats.stats(g, bipstats.best_independent_source(g))
        ineqs = bipstats.check_inequalities(g, s)
        if args.format == "machine":
            _emit({"graph6": _g6(g), "record": "stats", **s.to_record()})
            for q in ineqs:
                _emit({"graph6": _g6(g), "record": "inequality", **q.to_record()})
        else:
            print(f"graph {_g6(g)}  n={g.n} e={g.m}")
            print(f"A = {s.to_record()['A']}  B = {s.to_record()['B']}")
            print(f"k={s.k} m={s.m} x={s.x} y={s.y} z={s.z} r={s.r}")
            print(f"red = {sorted(s.red)}")
            print("inequalities (diagnostic):")
            for q in ineqs:
                print(f"  {q}")
    return 0


def cmd_convert(args) -> int:
    for g in load_graphs(args.graph, args.file):
        if args.format == "machine":
            _emit({"graph6": _g6(g), "n": g.n, "m": g.m, "edges": g.edges()})
        elif args.to == "graph6":
            print(_g6(g))
        else:
            print(to_edge_list(g), end="")
    return 0


# parser --------------------------------------------------------------------------

def _add_graph_input(p):
    p.add_argument("graph", nargs="*", help="graph6 strings")
    p.add_argument("--file", help="graph6 file (one per line) or edge list ('n m' header); '-' = stdin")


def _add_format(p):
    p.add_argument("--format", choices=("text", "machine"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vertexcuts", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find-cut", help="search a graph for an independent / forest / bipartite cut")
    _add_graph_input(p)
    p.add_argument("--class", dest="cls", choices=[c.value for c in CutClass], required=True)
    _add_format(p)
    p.set_defaults(func=cmd_find_cut)

    p = sub.add_parser("verify", help="census: check a theorem on every small connected graph")
    p.add_argument("--theorem", choices=[t.value for t in Theorem], required=True)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--enumerate", action="store_true", help="built-in enumerator (default)")
    src.add_argument("--input", help="graph6 file, one graph per line")
    p.add_argument("--n-min", type=int, default=4, help="enumerator only")
    p.add_argument("--n-max", type=int, default=7, help="enumerator only")
    p.add_argument("--allow-n8", action="store_true", help="permit n = 8 labeled enumeration")
    p.add_argument("--iso", action="store_true", help="one graph per isomorphism class (n <= 7)")
    p.add_argument("--preset", choices=sorted(PRESETS), help="override the theorem's (alpha, beta)")
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("filter", help="run the minimal-counterexample filter")
    _add_graph_input(p)
    p.add_argument("--class", dest="cls", choices=("forest", "bipartite"), required=True)
    p.add_argument("--preset", choices=("forest", "bipartite", "conjecture"))
    p.add_argument("--all-checks", action="store_true", help="do not stop at the first failure")
    _add_format(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("gen", help="build a graph from a construction script")
    p.add_argument("script", nargs="?", help="script file, '-' for stdin")
    p.add_argument("--edge-list", action="store_true", help="print an edge list instead of graph6")
    p.add_argument("--script-help", action="store_true", help="describe the script language")
    _add_format(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="independent-set statistics and edge inequalities")
    _add_graph_input(p)
    _add_format(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("convert", help="convert between edge lists and graph6")
    _add_graph_input(p)
    p.add_argument("--to", choices=("graph6", "edgelist"), default="graph6")
    _add_format(p)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"vertexcuts {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
