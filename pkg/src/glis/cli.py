"""``glis`` command line.

Exit codes: 0 yes/success, 1 no (decision commands and failed verification),
2 usage or parse error, 3 instance too large for exact mode.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .formats import (
    ParseError,
    parse_graph,
    parse_layout,
    parse_model,
    serialize_graph,
    serialize_layout,
    serialize_model,
)
from .generate import gen_random, gen_yes_instance
from .graph import GraphError, InstanceTooLarge, LayoutError, vs_of_layout
from .intervals import (
    ModelError,
    PreconditionError,
    certificate_from_model,
    intervals_to_layout,
    layout_to_intervals,
    solve_icg,
    verify_certificate,
)
from .layout import derived_metrics, exact_vs, layout_to_path_decomposition, solve_cvs
from .oracle import OracleCapExceeded, brute_cvs, brute_icg, brute_vs

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_TOO_LARGE = 0, 1, 2, 3


def _read_graph(path):
    return parse_graph(Path(path).read_text())


def _fmt_layout(layout):
    return serialize_layout(layout).rstrip("\n")


def cmd_vs(args, out):
    g = _read_graph(args.graph)
    vs, layout = exact_vs(g)
    metrics = derived_metrics(vs)
    out.write(f"vs {vs}\n")
    out.write(f"layout {_fmt_layout(layout)}\n")
    out.write(f"pathwidth {metrics.pathwidth}\n")
    out.write(f"node_search_number {metrics.node_search_number}\n")
    out.write(f"gate_matrix_cost {metrics.gate_matrix_cost}\n")
    return EXIT_YES


def cmd_cvs(args, out):
    res = solve_cvs(_read_graph(args.graph))
    if res.answer:
        out.write(f"YES\nlayout {_fmt_layout(res.witness)}\n")
        return EXIT_YES
    out.write(f"NO\nreason {res.reason}\n")
    return EXIT_NO


def cmd_icg(args, out):
    cert = solve_icg(_read_graph(args.graph))
    if cert is None:
        out.write("NO\n")
        return EXIT_NO
    out.write("YES\n")
    out.write(f"added {len(cert.added_edges)}\n")
    for u, v in sorted(cert.added_edges):
        out.write(f"e {u} {v}\n")
    text = serialize_model(cert.model)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_YES


def cmd_to_intervals(args, out):
    g = _read_graph(args.graph)
    layout = parse_layout(Path(args.layout).read_text())
    out.write(serialize_model(layout_to_intervals(g, layout)))
    return EXIT_YES


def cmd_to_layout(args, out):
    m = parse_model(Path(args.model).read_text())
    out.write(serialize_layout(intervals_to_layout(m)))
    return EXIT_YES


def cmd_verify(args, out):
    g = _read_graph(args.graph)
    m = parse_model(Path(args.model).read_text())
    report = verify_certificate(g, certificate_from_model(g, m))
    for line in report.lines():
        out.write(line + "\n")
    for line in report.details:
        out.write(f"# {line}\n")
    return EXIT_YES if report.valid else EXIT_NO


def cmd_pathdecomp(args, out):
    g = _read_graph(args.graph)
    layout = parse_layout(Path(args.layout).read_text())
    pd = layout_to_path_decomposition(g, layout)
    for bag in pd.bags:
        out.write("b " + " ".join(str(v) for v in sorted(bag)) + "\n")
    out.write(f"width {pd.width}\n")
    assert pd.width == vs_of_layout(g, layout) or g.n == 0
    return EXIT_YES


def cmd_gen_yes(args, out):
    out.write(serialize_graph(gen_yes_instance(args.n, args.k, args.keep_prob, args.seed)))
    return EXIT_YES


def cmd_gen_rand(args, out):
    g = gen_random(args.n, args.k, args.p, args.seed, distinct_colors=args.distinct_colors)
    out.write(serialize_graph(g))
    return EXIT_YES


def cmd_oracle(args, out):
    g = _read_graph(args.graph)
    if args.problem == "vs":
        out.write(f"vs {brute_vs(g)}\n")
        return EXIT_YES
    if args.problem == "cvs":
        layout = brute_cvs(g)
        if layout is None:
            out.write("NO\n")
            return EXIT_NO
        out.write(f"YES\nlayout {_fmt_layout(layout)}\n")
        return EXIT_YES
    if brute_icg(g):
        out.write("YES\n")
        return EXIT_YES
    out.write("NO\n")
    return EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glis", description="Exact colored vertex separation and "
                                     "interval sandwich solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vs", help="minimum vertex separation with witness layout")
    p.add_argument("graph")
    p.set_defaults(func=cmd_vs)

    p = sub.add_parser("cvs", help="decide colored vertex separation")
    p.add_argument("graph")
    p.set_defaults(func=cmd_cvs)

    p = sub.add_parser("icg", help="decide interval sandwich, print certificate")
    p.add_argument("graph")
    p.add_argument("-o", "--output", help="write the interval model here instead of stdout")
    p.set_defaults(func=cmd_icg)

    p = sub.add_parser("to-intervals", help="interval model of a colored layout")
    p.add_argument("graph")
    p.add_argument("layout")
    p.set_defaults(func=cmd_to_intervals)

    p = sub.add_parser("to-layout", help="layout by left endpoints of a model")
    p.add_argument("model")
    p.set_defaults(func=cmd_to_layout)

    p = sub.add_parser("verify", help="check a model as a certificate for a graph")
    p.add_argument("graph")
    p.add_argument("model")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pathdecomp", help="path decomposition from a layout")
    p.add_argument("graph")
    p.add_argument("layout")
    p.set_defaults(func=cmd_pathdecomp)

    p = sub.add_parser("gen-yes", help="planted yes-instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--keep-prob", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen_yes)

    p = sub.add_parser("gen-rand", help="uniform random colored graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--distinct-colors", action="store_true", help="give every vertex its own color")
    p.set_defaults(func=cmd_gen_rand)

    p = sub.add_parser("oracle", help="brute-force answer for small graphs")
    p.add_argument("problem", choices=["vs", "cvs", "icg"])
    p.add_argument("graph")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InstanceTooLarge, OracleCapExceeded) as exc:
        print(f"glis: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ParseError, GraphError, LayoutError, ModelError, PreconditionError,
            ValueError, OSError) as exc:
        print(f"glis: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
