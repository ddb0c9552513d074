"""``epl`` command line: load quads, infer or run rules, report, export."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from epl.dsl import EvaluationError, RuleSyntaxError, parse, run
from epl.evidence import DEFAULT_K, EvidenceTuple, truth_value
from epl.quads import QuadFormatError, format_weight, load_quads, report_truth, save_quads
from epl.syllogisms import SyllogismKind, apply, infer

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_EVAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> float:
    v = float(text)
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return v


def _tv_text(e: EvidenceTuple, k: float) -> str:
    tv = truth_value(e, k)
    f = "undef" if tv.f is None else f"{tv.f:.6f}"
    return f"<{format_weight(e.w_pos)},{format_weight(e.w_neg)}>\tf={f}\tc={tv.c:.6f}"


def cmd_infer(args: argparse.Namespace) -> int:
    net = load_quads(args.input)
    result = infer(net, args.op, args.label)
    for (i, j), v in result.inferred.items():
        print(f"{net.name(i)}\t{args.label}\t{net.name(j)}\t{format_weight(v.w_pos)}\t{format_weight(v.w_neg)}")
    if args.apply:
        net = apply(net, result)
    if args.output:
        save_quads(net, args.output)
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    net = load_quads(args.input)
    with open(args.rules, encoding="utf-8") as fh:
        program = parse(fh.read(), args.steps)
    save_quads(run(program, net), args.output)
    return EXIT_OK


def cmd_truth(args: argparse.Namespace) -> int:
    sys.stdout.write(report_truth(load_quads(args.input), args.k))
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    net = load_quads(args.input)
    if args.s in net and args.o in net:
        e = net.get(args.s, args.p, args.o)
    else:
        e = EvidenceTuple()
    print(f"{args.s}\t{args.p}\t{args.o}\t{_tv_text(e, args.k)}")
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    save_quads(load_quads(args.input), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="epl", description="Evidential path logic over quad files.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("infer", help="apply one syllogism to a label")
    p.add_argument("--input", required=True)
    p.add_argument("--op", required=True, choices=[k.value for k in SyllogismKind])
    p.add_argument("--label", required=True)
    p.add_argument("--apply", action="store_true", help="revise the inferred evidence into the network")
    p.add_argument("--output")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("run", help="run a rule file for N time steps")
    p.add_argument("--input", required=True)
    p.add_argument("--rules", required=True)
    p.add_argument("--steps", type=_positive_int, default=1)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("truth", help="print f/c for every stored edge")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_nonneg, default=DEFAULT_K)
    p.set_defaults(func=cmd_truth)

    p = sub.add_parser("query", help="print the evidence for one edge")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_nonneg, default=DEFAULT_K)
    p.add_argument("s")
    p.add_argument("p")
    p.add_argument("o")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("export", help="rewrite a quad file in canonical form")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QuadFormatError, RuleSyntaxError, OSError, UnicodeDecodeError) as e:
        print(f"epl: {e}", file=sys.stderr)
        return EXIT_PARSE
    except EvaluationError as e:
        print(f"epl: evaluation error: {e}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
