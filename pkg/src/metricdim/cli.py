"""Command-line front end.

Exit codes: 0 success or verification pass, 1 verification failure, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MetricDimError
from .exact import metric_dimension, rooted_metric_dimension
from .fractional import fractional_metric_dimension, fractional_rooted_metric_dimension, format_rational
from .graph import (
    Graph,
    RootedGraph,
    complete,
    complete_bipartite,
    cycle,
    format_edge_list,
    parse_edge_list,
    path,
    star,
)
from .harness import STATEMENTS, run_statement
from .hproduct import binomial_tree, hierarchical_product


class UsageError(Exception):
    pass


def _read(path_arg: str) -> tuple[Graph, int | None]:
    if path_arg == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path_arg) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path_arg}: {exc.strerror}") from None
    return parse_edge_list(text)


def _rooted(g: Graph, flag: int | None, from_file: int | None, name: str = "--root") -> RootedGraph:
    root = flag if flag is not None else from_file
    if root is None:
        raise UsageError(f"{name} is required for this subcommand")
    if not 0 <= root < g.order:
        raise UsageError(f"root {root} out of range 0..{g.order - 1}")
    return RootedGraph(g, root)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_dim(args) -> int:
    g, _ = _read(args.file)
    r = metric_dimension(g)
    _emit({"dim": r.value, "basis": r.basis.to_list()})
    return 0


def cmd_fdim(args) -> int:
    g, _ = _read(args.file)
    r = fractional_metric_dimension(g)
    _emit({"dim_f": format_rational(r.value), "weights": {str(v): format_rational(w) for v, w in enumerate(r.witness.weights)}})
    return 0


def cmd_rdim(args) -> int:
    g, file_root = _read(args.file)
    r = rooted_metric_dimension(_rooted(g, args.root, file_root))
    _emit({"rdim": r.value, "basis": r.basis.to_list()})
    return 0


def cmd_frdim(args) -> int:
    g, file_root = _read(args.file)
    r = fractional_rooted_metric_dimension(_rooted(g, args.root, file_root))
    _emit({"rdim_f": format_rational(r.value), "convention_empty_Pu": r.vacuous})
    return 0


def _write_graph(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_product(args) -> int:
    if args.outer == "-" and args.inner == "-":
        raise UsageError("at most one of OUTER and INNER may be read from standard input")
    g2, r2 = _read(args.outer)
    g1, r1 = _read(args.inner)
    p = hierarchical_product(_rooted(g2, args.root2, r2, "--root2"), _rooted(g1, args.root1, r1, "--root1"))
    _write_graph(format_edge_list(p.graph, p.result.root), args.output)
    return 0


_FAMILIES = {"path": (path, 1), "cycle": (cycle, 1), "complete": (complete, 1), "biclique": (complete_bipartite, 2), "star": (star, 1)}


def cmd_family(args) -> int:
    name, params = args.name, args.params
    if name == "binomial":
        if len(params) != 1:
            raise UsageError("binomial takes one argument n")
        t = binomial_tree(params[0])
        root = t.root if args.root is None else args.root
        g = t.graph
    elif name in _FAMILIES:
        fn, arity = _FAMILIES[name]
        if len(params) != arity:
            raise UsageError(f"{name} takes {arity} argument(s)")
        g = fn(*params).validate()
        root = args.root
    else:
        raise UsageError(f"unknown family {name!r}")
    if root is not None and not 0 <= root < g.order:
        raise UsageError(f"root {root} out of range 0..{g.order - 1}")
    _write_graph(format_edge_list(g, root), args.output)
    return 0


def cmd_verify(args) -> int:
    rep = run_statement(args.statement, args.seed, args.trials, args.max_inner, args.max_outer)
    _emit(rep.to_json(timing=not args.no_timing))
    return 0 if rep.passed else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="metricdim", description="Exact (fractional, rooted) metric dimension and hierarchical products.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dim", help="metric dimension")
    s.add_argument("file", help="edge-list file, '-' for standard input")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("fdim", help="fractional metric dimension")
    s.add_argument("file")
    s.set_defaults(func=cmd_fdim)

    s = sub.add_parser("rdim", help="rooted metric dimension")
    s.add_argument("file")
    s.add_argument("--root", type=int)
    s.set_defaults(func=cmd_rdim)

    s = sub.add_parser("frdim", help="fractional rooted metric dimension")
    s.add_argument("file")
    s.add_argument("--root", type=int)
    s.set_defaults(func=cmd_frdim)

    s = sub.add_parser("product", help="hierarchical product OUTER x INNER")
    s.add_argument("outer")
    s.add_argument("inner")
    s.add_argument("--root2", type=int, help="root of the outer factor")
    s.add_argument("--root1", type=int, help="root of the inner factor")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("family", help="emit a named graph family")
    s.add_argument("name", choices=["path", "cycle", "complete", "biclique", "star", "binomial"])
    s.add_argument("params", type=int, nargs="+")
    s.add_argument("--root", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("verify", help="run a verifier and print its report")
    s.add_argument("statement", choices=STATEMENTS)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--max-inner", type=int, default=6)
    s.add_argument("--max-outer", type=int, default=4)
    s.add_argument("--no-timing", action="store_true", help="omit elapsed_ms so output is byte-stable")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, MetricDimError) as exc:
        print(f"metricdim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
