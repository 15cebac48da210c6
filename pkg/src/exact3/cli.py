"""Command-line interface.

Exit statuses: 0 success, 1 property failure (input not exact, operation
precondition violated), 2 parse or usage error, 3 resource budget.
With ``--json`` every subcommand prints one JSON object on stdout with
at least ``command``, ``ok`` and ``exit``; failures add ``error``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .connectivity import is_exactly_k
from .decompose import SynthesisScript, counting_identity, decompose, replay, thick_tree_factor
from .enumerate import EnumerationQuery, enumerate_graphs
from .errors import (
    ArgumentError,
    BudgetExceeded,
    DomainError,
    Exact3Error,
    FormatError,
    NotExactError,
)
from .io import format_dot, format_edge_list, format_graph6, read_graph
from .multigraph import Dart, is_biconnected
from .ops import (
    CycleExpansionSpec,
    block_glue,
    block_respecting_cycle_expand,
    cycle_expand,
    natural_pairing,
    vertex_glue,
)

EXIT_OK, EXIT_PROPERTY, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, error: Exception, extra: dict | None = None):
        super().__init__(str(error))
        self.code = code
        self.error = error
        self.extra = extra or {}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_PARSE, FormatError(f"cannot read {path}: {exc.strerror}")) from None


def _load_graph(path: str, fmt: str):
    try:
        return read_graph(_read_text(path), fmt)
    except (FormatError, ArgumentError) as exc:
        raise _Fail(EXIT_PARSE, exc) from None


def _render(g, fmt: str) -> str:
    if fmt == "dot":
        return format_dot(g)
    if fmt == "graph6":
        return format_graph6(g) + "\n"
    return format_edge_list(g)


# -- subcommands -------------------------------------------------------------


def cmd_verify(args) -> tuple[int, dict, str]:
    g = _load_graph(args.path, args.format)
    try:
        report = is_exactly_k(g, args.k)
    except DomainError as exc:
        raise _Fail(EXIT_PROPERTY, exc) from None
    if report.exact:
        return EXIT_OK, {"k": args.k, "exact": True}, f"EXACT k={args.k}\n"
    u, v, lam = report.witness
    payload = {"k": args.k, "exact": False, "witness": {"u": u, "v": v, "lambda": lam}}
    return EXIT_PROPERTY, payload, f"NOT EXACT k={args.k}: lambda({u},{v}) = {lam}\n"


def cmd_decompose(args) -> tuple[int, dict, str]:
    g = _load_graph(args.path, args.format)
    try:
        script = decompose(g)
    except NotExactError as exc:
        u, v, lam = exc.witness
        raise _Fail(EXIT_PROPERTY, exc, {"witness": {"u": u, "v": v, "lambda": lam}}) from None
    except DomainError as exc:
        raise _Fail(EXIT_PROPERTY, exc) from None
    if args.thick_tree:
        script = thick_tree_factor(script)
    text = script.to_text(provenance=args.provenance)
    ident = counting_identity(script)
    payload = {"script": text, "expansions": script.expansions, "gluings": script.gluings,
               "counting_identity": ident["holds"]}
    return EXIT_OK, payload, text


def cmd_replay(args) -> tuple[int, dict, str]:
    try:
        script = SynthesisScript.from_text(_read_text(args.path))
        g = replay(script)
    except (FormatError, ArgumentError) as exc:
        raise _Fail(EXIT_PARSE, exc) from None
    text = _render(g, args.to)
    return EXIT_OK, {"order": g.order, "size": g.size, "graph": text}, text


def cmd_enumerate(args) -> tuple[int, dict, str]:
    try:
        q = EnumerationQuery(
            args.max_n,
            require_simple=args.simple,
            require_biconnected=args.biconnected,
            require_minimum=args.minimum,
            require_planar=args.planar,
            emit="count" if args.count_only else "stream",
            jobs=args.jobs,
            budget_seconds=args.budget_seconds,
        )
    except ArgumentError as exc:
        raise _Fail(EXIT_PARSE, exc) from None
    try:
        result = enumerate_graphs(q)
    except BudgetExceeded as exc:
        summary = exc.partial.summary_lines()
        if not args.json:
            sys.stderr.write("".join(s + "\n" for s in summary))
        raise _Fail(EXIT_BUDGET, exc, {"counts": _counts(exc.partial)}) from None
    if not args.json:
        sys.stderr.write("".join(s + "\n" for s in result.summary_lines()))
    lines = [] if args.count_only else list(result.stream_lines())
    payload = {"counts": _counts(result)}
    if not args.count_only:
        payload["graphs"] = lines
    return EXIT_OK, payload, "".join(s + "\n" for s in lines)


def _counts(result) -> dict[str, int]:
    return {str(n): c for n, c in sorted(result.counts_by_order.items())}


def cmd_expand(args) -> tuple[int, dict, str]:
    g = _load_graph(args.path, args.format)
    try:
        darts = tuple(Dart.parse(t) for t in args.darts.split(","))
        spec = CycleExpansionSpec(args.vertex, args.cycle_size, darts)
    except ArgumentError as exc:
        raise _Fail(EXIT_PARSE, exc) from None
    try:
        if is_biconnected(g):
            out = cycle_expand(g, spec)
        else:
            out = block_respecting_cycle_expand(g, spec)
    except (ArgumentError, DomainError) as exc:
        raise _Fail(EXIT_PROPERTY, exc) from None
    text = _render(out, args.to)
    return EXIT_OK, {"order": out.order, "size": out.size, "graph": text}, text


def cmd_glue(args) -> tuple[int, dict, str]:
    g1 = _load_graph(args.left, args.format)
    g2 = _load_graph(args.right, args.format)
    try:
        if args.vertex:
            out = vertex_glue(g1, g2, natural_pairing(g1, args.u1, g2, args.u2), k=args.k)
        else:
            out = block_glue(g1, args.u1, g2, args.u2)
    except (ArgumentError, DomainError) as exc:
        raise _Fail(EXIT_PROPERTY, exc) from None
    text = _render(out, args.to)
    return EXIT_OK, {"order": out.order, "size": out.size, "graph": text}, text


def cmd_export(args) -> tuple[int, dict, str]:
    g = _load_graph(args.path, args.format)
    try:
        text = _render(g, args.to)
    except ArgumentError as exc:
        raise _Fail(EXIT_PROPERTY, exc) from None
    return EXIT_OK, {"graph": text}, text


# -- parser ------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exact3", description="Exactly 3-edge-connected graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_in(sp, name="path"):
        sp.add_argument(name, help="graph file ('-' for stdin)")

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")

    def output(sp):
        sp.add_argument("--to", choices=["edgelist", "graph6", "dot"], default="edgelist")

    sp = sub.add_parser("verify", help="check exact k-edge-connectivity")
    graph_in(sp)
    common(sp)
    sp.add_argument("--k", type=int, default=3)
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("decompose", help="emit a synthesis script")
    graph_in(sp)
    common(sp)
    sp.add_argument("--thick-tree", action="store_true", help="gluings first, then expansions")
    sp.add_argument("--provenance", action="store_true", help="add the source graph's canonical code")
    sp.set_defaults(run=cmd_decompose)

    sp = sub.add_parser("replay", help="rebuild the graph of a script")
    sp.add_argument("path", help="script file ('-' for stdin)")
    common(sp)
    output(sp)
    sp.set_defaults(run=cmd_replay)

    sp = sub.add_parser("enumerate", help="list isomorphism classes")
    sp.add_argument("--max-n", type=int, required=True)
    for flag in ("simple", "biconnected", "minimum", "planar"):
        sp.add_argument(f"--{flag}", action="store_true")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget-seconds", type=float, default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(run=cmd_enumerate)

    sp = sub.add_parser("expand", help="cycle expansion of one vertex")
    graph_in(sp)
    common(sp)
    output(sp)
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--cycle-size", type=int, required=True)
    sp.add_argument("--darts", required=True, help="dart order, e.g. 1~0#0,1~0#1,1~0#2")
    sp.set_defaults(run=cmd_expand)

    sp = sub.add_parser("glue", help="block gluing (default) or vertex gluing")
    graph_in(sp, "left")
    graph_in(sp, "right")
    common(sp)
    output(sp)
    sp.add_argument("--u1", type=int, required=True)
    sp.add_argument("--u2", type=int, required=True)
    sp.add_argument("--vertex", action="store_true", help="vertex gluing with the natural pairing")
    sp.add_argument("--k", type=int, default=3)
    sp.set_defaults(run=cmd_glue)

    sp = sub.add_parser("export", help="convert between formats")
    graph_in(sp)
    common(sp)
    output(sp)
    sp.set_defaults(run=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    run: Callable = args.run
    try:
        code, payload, text = run(args)
        error = None
    except _Fail as fail:
        code, payload, text = fail.code, dict(fail.extra), ""
        error = fail.error
    except Exact3Error as exc:  # unexpected library failure
        code, payload, text, error = EXIT_PROPERTY, {}, "", exc
    if args.json:
        out = {"command": args.command, "ok": code == EXIT_OK, "exit": code, **payload}
        if error is not None:
            out["error"] = {
                "type": type(error).__name__,
                "message": str(error),
                "line": getattr(error, "line", None),
            }
        sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
        if error is not None:
            sys.stderr.write(f"exact3 {args.command}: {error}\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
