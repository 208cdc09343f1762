"""Command-line front end: a thin client over the analysis service layer.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 analysis
error. Diagnostics go to stderr; reports go to stdout or --out.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    AnalysisError,
    graph_to_edge_list,
    report_to_csv,
    report_to_json,
    run_analysis,
    run_cover,
    run_generate,
)
from .dimension import FitError
from .generators import MODELS, GenerationError
from .graphs import DisconnectedGraphError, GraphParseError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_ANALYSIS = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; this CLI reserves 2 for
    # input errors, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _positive_int(value: str) -> int:
    try:
        parsed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if parsed < 1:
        raise argparse.ArgumentTypeError(f"{value!r} must be >= 1")
    return parsed


def _q_list(value: str) -> list[float]:
    try:
        qs = [float(tok) for tok in value.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not a comma-separated list of reals")
    if not qs:
        raise argparse.ArgumentTypeError("q list is empty")
    return qs


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="network file (edge list or Pajek)")
    parser.add_argument(
        "--format",
        choices=("auto", "edgelist", "pajek"),
        default="auto",
        help="input format (auto: leading '*' means Pajek)",
    )
    parser.add_argument("--trials", type=_positive_int, default=10,
                        help="randomized greedy trials per box size")
    parser.add_argument("--seed", type=int, default=42, help="random seed")
    parser.add_argument("--strict", action="store_true",
                        help="error on disconnected input instead of reducing")


def _add_fit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=("slope", "pointwise"), default="slope",
                        help="dimension from the fitted slope or per-size ratios")
    parser.add_argument("--lmin", type=_positive_int, default=None,
                        help="smallest box size (default 1)")
    parser.add_argument("--lmax", type=_positive_int, default=None,
                        help="largest box size (default diameter + 1)")


def _add_out_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", "-o", default=None,
                        help="output path; a .csv suffix selects CSV, else JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="netfractal",
        description="Fractal and Tsallis information dimensions of complex "
                    "networks via box covering",
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command", parser_class=_Parser)

    analyze = sub.add_parser("analyze", help="full dimension analysis of one network")
    _add_input_flags(analyze)
    analyze.add_argument("--q", type=float, default=1.0,
                         help="entropy order (1 = Shannon/information dimension)")
    _add_fit_flags(analyze)
    _add_out_flag(analyze)

    sweep = sub.add_parser("sweep", help="dimension estimates across several q values")
    _add_input_flags(sweep)
    sweep.add_argument("--q-list", type=_q_list, required=True,
                       help="comma-separated q values, e.g. 0.1,0.5,1,2")
    _add_fit_flags(sweep)
    _add_out_flag(sweep)

    cover = sub.add_parser("cover", help="box covering at a single box size")
    _add_input_flags(cover)
    cover.add_argument("l_b", type=_positive_int, metavar="l_B",
                       help="box size in hops (>= 1)")
    cover.add_argument("--dump-boxes", action="store_true",
                       help="print the members of every box")

    generate = sub.add_parser("generate", help="write a synthetic test network")
    generate.add_argument("model", choices=MODELS)
    generate.add_argument("params", nargs="+", metavar="param",
                          help="model parameters: n | rows cols | n p")
    generate.add_argument("--seed", type=int, default=42, help="random seed")
    _add_out_flag(generate)

    return parser


def _warn(diagnostics: list[str]) -> None:
    for line in diagnostics:
        print(f"warning: {line}", file=sys.stderr)


def _emit_report(report: dict, out: str | None) -> None:
    if out is None:
        sys.stdout.write(report_to_json(report))
        return
    path = Path(out)
    text = report_to_csv(report) if path.suffix.lower() == ".csv" else report_to_json(report)
    path.write_text(text, encoding="utf-8")


def _cmd_analyze(args, q_values: list[float]) -> int:
    if args.lmin is not None and args.lmax is not None and args.lmin > args.lmax:
        print("error: --lmin exceeds --lmax", file=sys.stderr)
        return EXIT_USAGE
    text = Path(args.file).read_text(encoding="utf-8")
    report, diagnostics = run_analysis(
        text,
        fmt=args.format,
        q_values=q_values,
        trials=args.trials,
        seed=args.seed,
        mode=args.mode,
        l_min=args.lmin,
        l_max=args.lmax,
        strict=args.strict,
        source=args.file,
    )
    _warn(diagnostics)
    _emit_report(report, args.out)
    return EXIT_OK


def _cmd_cover(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    result, diagnostics = run_cover(
        text,
        fmt=args.format,
        l_B=args.l_b,
        trials=args.trials,
        seed=args.seed,
        strict=args.strict,
        source=args.file,
    )
    _warn(diagnostics)
    print(f"N_B = {result['n_boxes']}")
    if args.dump_boxes:
        for idx, labels in enumerate(result["boxes"]):
            print(f"box {idx}: {' '.join(labels)}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    params: list[float] = []
    for token in args.params:
        try:
            params.append(float(token))
        except ValueError:
            print(f"error: parameter {token!r} is not a number", file=sys.stderr)
            return EXIT_USAGE
    try:
        graph = run_generate(args.model, params, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = graph_to_edge_list(graph)
    summary = f"{args.model}: {graph.node_count} nodes, {graph.edge_count} edges"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"{summary} -> {args.out}")
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, [args.q])
        if args.command == "sweep":
            return _cmd_analyze(args, args.q_list)
        if args.command == "cover":
            return _cmd_cover(args)
        if args.command == "generate":
            return _cmd_generate(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except (GraphParseError, DisconnectedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FitError, AnalysisError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
