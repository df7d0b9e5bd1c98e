"""Command-line front end.

Reports go to stdout as line-delimited JSON (or plain graph encodings);
human-readable summaries go to stderr.  Exit codes: 0 success, 1 a
verification scenario failed, 2 usage error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .coloring import ProperColoring
from .constructions import parse_construction
from .errors import RecolorError, UnknownScenario
from .formats import graph_to_dict, parse_graph, to_dot, to_graph6, to_json
from .graph import Graph, false_twins
from .patterns import (
    chromatic_number,
    cycle_pattern,
    find_induced,
    find_induced_path,
    gem_pattern,
    max_clique,
    optimal_coloring,
    p5_complement_pattern,
)
from .recoloring import all_frozen, reconfig_analysis, recoloring_path, search_frozen
from . import verify as verify_mod

PATTERNS = {"gem": gem_pattern, "c5": lambda: cycle_pattern(5), "p5bar": p5_complement_pattern}


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _load_graph(source: str) -> Graph:
    return parse_graph(_read_text(source))


def _load_coloring(source: str) -> ProperColoring:
    return ProperColoring.from_json(_read_text(source))


def _render(g: Graph, fmt: str, coloring: Optional[ProperColoring] = None, meta: Optional[dict] = None) -> str:
    if fmt == "graph6":
        return to_graph6(g).decode()
    if fmt == "dot":
        return to_dot(g).rstrip("\n")
    if coloring is None and not meta:
        return to_json(g)
    obj = {"graph": graph_to_dict(g)}
    if coloring is not None:
        obj["coloring"] = coloring.to_dict()
    if meta:
        obj["meta"] = meta
    return json.dumps(obj)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# -- verbs ------------------------------------------------------------------------

def cmd_construct(args) -> int:
    try:
        g, c, meta = parse_construction(args.spec)
    except RecolorError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(_render(g, args.format, c, meta), args.out)
    if c is not None:
        if args.coloring_out:
            Path(args.coloring_out).write_text(c.to_json() + "\n")
        elif args.format != "json":
            print(f"coloring: {c.to_json()}", file=sys.stderr)
    print(f"{args.spec}: {g.n} vertices, {g.edge_count()} edges", file=sys.stderr)
    return 0


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    rep = reconfig_analysis(g, args.k, args.limit)
    _emit(rep.to_dict())
    print(f"{rep.total} colorings, {rep.components} components, {len(rep.frozen)} frozen", file=sys.stderr)
    return 0


def cmd_mixing(args) -> int:
    g = _load_graph(args.graph)
    # a frozen coloring settles it without the full census once k >= 2
    witness = search_frozen(g, args.k) if g.n and args.k >= 2 else None
    if witness is not None:
        print("not-mixing")
        _emit({"frozen": witness.to_dict()})
        return 0
    rep = reconfig_analysis(g, args.k, args.limit)
    print("mixing" if rep.mixing else "not-mixing")
    print(f"{rep.components} components over {rep.total} colorings", file=sys.stderr)
    return 0


def cmd_frozen(args) -> int:
    g = _load_graph(args.graph)
    found = list(all_frozen(g, args.k)) if args.all else [c for c in [search_frozen(g, args.k)] if c]
    if not found:
        print("none")
    for c in found:
        _emit(c.to_dict())
    return 0


def cmd_path(args) -> int:
    g = _load_graph(args.graph)
    a, b = _load_coloring(args.source), _load_coloring(args.target)
    if a.k != args.k or b.k != args.k:
        raise UsageError(f"colorings use palettes {a.k} and {b.k}, expected -k {args.k}")
    steps = recoloring_path(g, a, b, args.limit)
    if steps is None:
        print("disconnected")
    else:
        _emit([s.to_dict() for s in steps])
        print(f"{len(steps)} steps", file=sys.stderr)
    return 0


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    out = {}
    if args.pl_free is not None:
        path = find_induced_path(g, args.pl_free)
        out["pl_free"] = {"length": args.pl_free, "free": path is None, "witness": path}
    if args.chromatic:
        chi = chromatic_number(g)
        out["chromatic"] = {"value": chi, "witness": optimal_coloring(g).to_dict()}
    if args.clique:
        clique = max_clique(g)
        out["clique"] = {"value": len(clique), "witness": clique}
    if args.pattern:
        found = find_induced(g, PATTERNS[args.pattern]())
        witness = None if found is None else [found[i] for i in sorted(found)]
        out["pattern"] = {"name": args.pattern, "contains": found is not None, "witness": witness}
    if args.false_twins:
        out["false_twins"] = [list(p) for p in false_twins(g)]
    if not out:
        raise UsageError("check needs at least one of --pl-free, --chromatic, --clique, --pattern, --false-twins")
    _emit(out)
    return 0


def cmd_verify(args) -> int:
    if args.scenario == "all":
        results = verify_mod.run_all(deep=args.deep, workers=args.workers)
    else:
        results = [verify_mod.run_scenario(args.scenario, deep=args.deep, workers=args.workers)]
    for r in results:
        _emit(r.to_dict())
        print(f"{'PASS' if r.passed else 'FAIL'} {r.scenario} ({r.elapsed:.2f}s)", file=sys.stderr)
    if args.report:
        Path(args.report).write_text(json.dumps([r.to_dict() for r in results], indent=2) + "\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_export(args) -> int:
    g = _load_graph(args.graph)
    _write(_render(g, args.format), args.out)
    return 0


# -- parser ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="recolor", description="Graph recoloring reconfiguration tools.")
    sub = p.add_subparsers(dest="verb", required=True)

    def graph_verb(name, help_text, need_k=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graph", help="graph file (graph6 or JSON), or - for stdin")
        if need_k:
            sp.add_argument("-k", type=_positive, required=True, help="palette size")
            sp.add_argument("--limit", type=_positive, default=None, help="state-space guard (default RECOLOR_LIMIT or 1e8)")
        return sp

    sp = sub.add_parser("construct", help="build a named construction")
    sp.add_argument("spec", help="mk:K, gtk:T,K, lift:BASE,S,L, k3c5:adj|nonadj, catalog:I, g4fam:M, g1fam:M, g10fam")
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["graph6", "json", "dot"], default="graph6")
    sp.add_argument("--coloring-out")
    sp.set_defaults(func=cmd_construct)

    graph_verb("analyze", "component census of R_k(G)").set_defaults(func=cmd_analyze)
    graph_verb("mixing", "decide whether G is k-mixing").set_defaults(func=cmd_mixing)

    sp = graph_verb("frozen", "find frozen k-colorings")
    sp.add_argument("--all", action="store_true")
    sp.set_defaults(func=cmd_frozen)

    sp = graph_verb("path", "shortest recoloring sequence between two colorings")
    sp.add_argument("--from", dest="source", required=True, help="coloring JSON file")
    sp.add_argument("--to", dest="target", required=True, help="coloring JSON file")
    sp.set_defaults(func=cmd_path)

    sp = graph_verb("check", "structural predicates", need_k=False)
    sp.add_argument("--pl-free", type=_positive, metavar="L")
    sp.add_argument("--chromatic", action="store_true")
    sp.add_argument("--clique", action="store_true")
    sp.add_argument("--pattern", choices=sorted(PATTERNS))
    sp.add_argument("--false-twins", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify", help="run verification scenarios")
    sp.add_argument("scenario", nargs="?", default="all", help="scenario id or 'all'")
    sp.add_argument("--deep", action="store_true", help="census up to order 7")
    sp.add_argument("--report", help="write a JSON array of results here")
    sp.add_argument("--workers", type=_positive, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = graph_verb("export", "re-encode a graph", need_k=False)
    sp.add_argument("--format", choices=["graph6", "json", "dot"], default="dot")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, UnknownScenario) as exc:
        print(f"recolor {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    except RecolorError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
