"""Command-line interface.

Exit codes on every command: 0 positive verdict, 1 negative verdict,
2 usage or input error.  Tree inputs (``--tree``, ``--g``, ``--h``) accept a
tree file, tree JSON, or a circle diagram; ``-`` reads stdin.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .census import run_census, run_problem2, stderr_progress
from .diagram_io import (
    diagram_to_tree,
    format_diagram,
    load_tree,
    parse_bijection,
    parse_diagram,
    to_dot,
    to_json,
    tree_to_diagram,
)
from .errors import LandoError
from .realizability import SearchReport, brute_force_find, find_realizing, is_realizing
from .tree_core import Tree, edge_set, incident_edges
from .unlinking import on_one_side


class UsageError(LandoError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _labels(text: str) -> list[str]:
    return [s.strip() for s in text.split(",") if s.strip()]


def _describe(t: Tree, v: int) -> str:
    labels = ",".join(t.edges[e].label for e in sorted(incident_edges(t, v)))
    return f"vertex {v} (bounded by {{{labels}}})"


def cmd_parse(args: argparse.Namespace) -> int:
    if args.diagram:
        tree = diagram_to_tree(parse_diagram(_read(args.diagram)))
    else:
        tree = load_tree(_read(args.tree))
    if args.out == "dot":
        sys.stdout.write(to_dot(tree))
    elif args.out == "json":
        sys.stdout.write(to_json(tree))
    else:
        sys.stdout.write(format_diagram(tree_to_diagram(tree)) + "\n")
    return 0


def cmd_unlinked(args: argparse.Namespace) -> int:
    tree = load_tree(_read(args.tree))
    p, q = edge_set(tree, _labels(args.p)), edge_set(tree, _labels(args.q))
    pq, qp = on_one_side(tree, p, q), on_one_side(tree, q, p)
    print("unlinked" if pq and qp else "not-unlinked")
    print(f"p on one side of q: {'yes' if pq else 'no'}")
    print(f"q on one side of p: {'yes' if qp else 'no'}")
    return 0 if pq and qp else 1


def cmd_check(args: argparse.Namespace) -> int:
    g, h = load_tree(_read(args.g)), load_tree(_read(args.h))
    bij = parse_bijection(args.bijection, g, h)
    verdict = is_realizing(g, h, bij)
    if verdict.realizing:
        print("realizing")
        return 0
    vio = verdict.violation
    x, y = vio.failed_direction

    def image(v: int) -> str:
        return ",".join(sorted(bij.forward[g.edges[e].label] for e in incident_edges(g, v)))

    print("not-realizing")
    print(f"violation: same-colored {_describe(g, vio.a)} and {_describe(g, vio.b)}")
    print(f"image {{{image(x)}}} of vertex {x} is not on one side of image {{{image(y)}}} of vertex {y}")
    return 1


def _print_report(report: SearchReport) -> None:
    print(f"witness: {report.result.to_text() if report.found else 'none'}")
    if report.realizing_count is not None:
        print(f"realizing_count: {report.realizing_count}")
    print(f"nodes: {report.nodes_explored}")
    print(f"strategy: {report.strategy}")
    print(f"elapsed_ms: {report.elapsed * 1000:.3f}")


def _search(args: argparse.Namespace) -> SearchReport:
    g, h = load_tree(_read(args.g)), load_tree(_read(args.h))
    if args.all and args.strategy != "brute":
        raise UsageError("--all requires --strategy brute")
    if args.strategy == "brute":
        return brute_force_find(g, h, count_all=args.all)
    return find_realizing(g, h, symmetry=not args.no_symmetry, jobs=args.jobs)


def cmd_search(args: argparse.Namespace) -> int:
    report = _search(args)
    _print_report(report)
    return 0 if report.found else 1


def cmd_lando(args: argparse.Namespace) -> int:
    report = _search(args)
    print("yes" if report.found else "no")
    _print_report(report)
    return 0 if report.found else 1


def _open_out(path: str):
    return sys.stdout if path == "-" else open(path, "w", encoding="ascii", newline="")


def cmd_census(args: argparse.Namespace) -> int:
    out = _open_out(args.out)
    try:
        negatives = run_census(args.max_edges, out, args.jobs, args.timing, stderr_progress)
    finally:
        if out is not sys.stdout:
            out.close()
    stderr_progress(f"census: {len(negatives)} non-realizable pair(s) up to {args.max_edges} edges")
    return 0


def cmd_problem2(args: argparse.Namespace) -> int:
    out = _open_out(args.out)
    try:
        negatives = run_problem2(args.max_edges, out, args.jobs, args.timing, stderr_progress)
    finally:
        if out is not sys.stdout:
            out.close()
    for k, form in negatives:
        stderr_progress(f"FOUND: tree {form} ({k} edges) has no realizing bijection onto the path")
    if not negatives:
        stderr_progress(f"problem2: every tree up to {args.max_edges} edges is realizable against the path")
    return 0


def _nonneg(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return val


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lando-kit",
        description="Decide realizability of circle-system intersections via dual trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and serialize a tree")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--diagram", metavar="FILE")
    src.add_argument("--tree", metavar="FILE")
    p.add_argument("--out", choices=("dot", "json", "diagram"), default="json")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("unlinked", help="test unlinkedness of two edge sets")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--p", required=True, metavar="LABELS", help="comma-separated, may be empty")
    p.add_argument("--q", required=True, metavar="LABELS", help="comma-separated, may be empty")
    p.set_defaults(func=cmd_unlinked)

    p = sub.add_parser("check", help="check whether a bijection is realizing")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("--h", required=True, metavar="FILE")
    p.add_argument("--bijection", required=True, metavar="TEXT", help="gLabel=hLabel,...")
    p.set_defaults(func=cmd_check)

    for name, func, text in (
        ("search", cmd_search, "search for a realizing bijection"),
        ("lando", cmd_lando, "decide whether the two circle systems are realizable"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--g", required=True, metavar="FILE")
        p.add_argument("--h", required=True, metavar="FILE")
        p.add_argument("--strategy", choices=("brute", "pruned"), default="pruned")
        p.add_argument("--all", action="store_true", help="count all realizing bijections (brute only)")
        p.add_argument("--jobs", type=_positive, default=1)
        p.add_argument("--no-symmetry", action="store_true", help="disable root orbit pruning")
        p.set_defaults(func=func)

    for name, func, text in (
        ("census", cmd_census, "decide all unordered pairs of free trees"),
        ("problem2", cmd_problem2, "decide every free tree against the path"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--max-edges", type=_nonneg, required=True, metavar="K")
        p.add_argument("--out", default="-", metavar="CSV")
        p.add_argument("--jobs", type=_positive, default=1)
        p.add_argument("--timing", action="store_true", help="fill the millis column (not byte-stable)")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LandoError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
