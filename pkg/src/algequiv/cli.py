"""Command-line front end.

Exit codes: 0 verdict true or success, 1 verdict false, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from fractions import Fraction
from functools import partial
from pathlib import Path

from .decision import (
    Decision,
    decide_constraint,
    decide_equivalence,
    decide_inclusion,
    decide_with_repeats,
    error_bound_constraint,
    error_bound_generic,
    error_bound_inclusion,
    render_decimal,
    repeats_for_confidence,
)
from .errors import GraphFormatError
from .field import PrimeModulus
from .fileformats import format_graph, parse_constraint, parse_graph
from .graph import MixedGraph, classify, skeleton
from .harness import Family, GraphFamilySpec, enumerate_graphs, partition_classes, extremal_timing_experiment

__all__ = ["run", "main", "build_parser"]


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _prime(text: str) -> PrimeModulus:
    try:
        return PrimeModulus.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _u64(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be in [0, 2^64)")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _probability(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("confidence target must lie in (0, 1)")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=_prime, default=PrimeModulus.parse("m31"),
                        help="m31, p63, m127 or a decimal prime (default m31)")
    common.add_argument("--seed", type=_u64, default=None,
                        help="master seed; drawn from system entropy when omitted")
    common.add_argument("--repeats", type=_positive, default=1, help="independent runs (default 1)")
    common.add_argument("--confidence", type=_probability, default=None,
                        help="pick the smallest repeat count whose bound is at most this")
    common.add_argument("--json", action="store_true", help="print one JSON record")

    parser = _Parser(prog="algequiv", description="Randomized algebraic tests for linear SEMs on mixed graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check-constraint", parents=[common], help="does G imply f = 0?")
    p.add_argument("graph")
    p.add_argument("constraint")

    p = sub.add_parser("check-inclusion", parents=[common], help="is the model of G inside that of G'?")
    p.add_argument("graph")
    p.add_argument("graph_prime")

    p = sub.add_parser("check-equivalence", parents=[common], help="are two BAPs algebraically equivalent?")
    p.add_argument("graph")
    p.add_argument("graph_prime")

    p = sub.add_parser("classify-graph", parents=[common], help="structural report for one graph")
    p.add_argument("graph")

    p = sub.add_parser("classify-set", parents=[common], help="equivalence classes of all *.graph files in DIR")
    p.add_argument("directory")

    p = sub.add_parser("error-bound", parents=[common], help="single-run error bound")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", nargs=2, metavar=("G", "GP"))
    group.add_argument("--generic", type=int, metavar="N")

    p = sub.add_parser("enumerate", parents=[common], help="enumerate a graph family")
    p.add_argument("--family", required=True, choices=[f.value for f in Family if f is not Family.EXTREMAL])
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--list", action="store_true", help="print every graph, separated by '---'")
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("bench", parents=[common], help="time the inclusion test on extremal graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=_positive, required=True)
    return parser


# -- helpers -----------------------------------------------------------------


def _read_graph(path: str) -> MixedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _aligned_pair(path_g: str, path_gp: str) -> tuple[MixedGraph, MixedGraph]:
    g, gp = _read_graph(path_g), _read_graph(path_gp)
    if set(g.names) != set(gp.names):
        raise InputError("G and G' have different node name sets")
    return g, gp.relabel(g.names)


def _repeats(args, single_bound: Fraction) -> int:
    if args.confidence is None or single_bound == 0:
        return args.repeats
    if single_bound >= 1:
        raise InputError("single-run bound is at least 1; choose a larger --prime")
    return max(args.repeats, repeats_for_confidence(single_bound, args.confidence))


def _emit(args, fields: dict, out) -> None:
    if args.json:
        print(json.dumps(fields, sort_keys=True), file=out)
        return
    for key, value in fields.items():
        if isinstance(value, dict):
            for k2, v2 in value.items():
                print(f"{key}.{k2}={_text(v2)}", file=out)
        else:
            print(f"{key}={_text(value)}", file=out)


def _text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return ",".join(map(str, value))
    return str(value)


def _decision_record(args, d: Decision, names) -> dict:
    record = d.to_record(names)
    record["seed"] = str(args.seed)
    record["prime"] = str(args.prime)
    return record


def _report_decision(args, d: Decision, names, out) -> int:
    _emit(args, _decision_record(args, d, names), out)
    return 0 if d.verdict else 1


# -- subcommands -------------------------------------------------------------


def _cmd_check_constraint(args, out) -> int:
    g = _read_graph(args.graph)
    try:
        text = Path(args.constraint).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.constraint}: {exc.strerror}") from None
    try:
        f = parse_constraint(text, g.names)
    except GraphFormatError as exc:
        raise InputError(f"{args.constraint}: {exc}") from None
    k = _repeats(args, error_bound_constraint(g, f, args.prime))
    d = decide_with_repeats(partial(decide_constraint, g, f, args.prime), k, args.seed)
    return _report_decision(args, d, g.names, out)


def _cmd_check_inclusion(args, out) -> int:
    g, gp = _aligned_pair(args.graph, args.graph_prime)
    if not classify(gp).is_bap:
        raise InputError("G' must be a BAP")
    if not classify(g).acyclic:
        raise InputError("G must be acyclic")
    k = _repeats(args, error_bound_inclusion(g, gp, args.prime))
    d = decide_with_repeats(partial(decide_inclusion, g, gp, args.prime), k, args.seed)
    return _report_decision(args, d, g.names, out)


def _cmd_check_equivalence(args, out) -> int:
    g, gp = _aligned_pair(args.graph, args.graph_prime)
    for label, h in (("G", g), ("G'", gp)):
        if not classify(h).is_bap:
            raise InputError(f"{label} must be a BAP")
    bound = error_bound_inclusion(g, gp, args.prime) if skeleton(g) == skeleton(gp) else Fraction(0)
    k = _repeats(args, bound)
    d = decide_with_repeats(partial(decide_equivalence, g, gp, args.prime), k, args.seed)
    return _report_decision(args, d, g.names, out)


def _cmd_classify_graph(args, out) -> int:
    g = _read_graph(args.graph)
    report = classify(g)
    fields = {
        "nodes": g.n,
        "directed_edges": len(g.directed),
        "bidirected_edges": len(g.bidirected),
        "acyclic": report.acyclic,
        "bow_free": report.bow_free,
        "is_bap": report.is_bap,
        "is_dag": report.is_dag,
        "ancestral": report.ancestral,
    }
    if args.json:
        _emit(args, fields, out)
    else:
        for key, value in fields.items():
            shown = ("yes" if value else "no") if isinstance(value, bool) else value
            print(f"{key}: {shown}", file=out)
    return 0


def _cmd_classify_set(args, out) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise InputError(f"not a directory: {args.directory}")
    paths = sorted(directory.glob("*.graph"))
    if not paths:
        raise InputError(f"no *.graph files in {args.directory}")
    graphs = [_read_graph(str(p)) for p in paths]
    names = graphs[0].names
    aligned = []
    for path, g in zip(paths, graphs):
        if set(g.names) != set(names):
            raise InputError(f"{path.name} has a different node name set")
        if not classify(g).is_bap:
            raise InputError(f"{path.name}: every graph must be a BAP")
        aligned.append(g.relabel(names))
    report = partition_classes(aligned, args.prime, args.repeats, args.seed)
    classes = [[paths[i].name for i in c] for c in report.classes]
    fields = {
        "graphs": len(paths),
        "classes": len(classes),
        "repeats": report.repeats_used,
        "randomized_calls": report.randomized_calls,
        "undetermined_pairs": report.undetermined_pairs,
        "inconsistent_pairs": len(report.inconsistent_pairs),
        "seed": str(args.seed),
        "prime": str(args.prime),
    }
    if args.json:
        fields["members"] = classes
        _emit(args, fields, out)
    else:
        _emit(args, fields, out)
        for i, c in enumerate(classes, start=1):
            print(f"class.{i}={' '.join(c)}", file=out)
    return 0


def _cmd_error_bound(args, out) -> int:
    if args.generic is not None:
        bound = error_bound_generic(args.generic, args.prime)
    else:
        g, gp = _aligned_pair(*args.pair)
        if not classify(gp).is_bap:
            raise InputError("G' must be a BAP")
        bound = error_bound_inclusion(g, gp, args.prime)
    k = _repeats(args, bound)
    total = bound**k
    if args.json:
        _emit(args, {
            "bound_numerator": str(total.numerator),
            "bound_denominator": str(total.denominator),
            "bound_decimal": render_decimal(total),
            "repeats": k,
            "prime": str(args.prime),
        }, out)
    else:
        print(f"{total.numerator}/{total.denominator} ≈ {render_decimal(total)}", file=out)
        if k > 1:
            print(f"repeats={k}", file=out)
    return 0


def _cmd_enumerate(args, out) -> int:
    graphs = enumerate_graphs(GraphFamilySpec(args.n, Family(args.family), args.allow_large))
    if args.json:
        record = {"family": args.family, "n": args.n, "count": len(graphs)}
        if args.list:
            record["graphs"] = [format_graph(g) for g in graphs]
        _emit(args, record, out)
    else:
        print(f"family={args.family}", file=out)
        print(f"n={args.n}", file=out)
        print(f"count={len(graphs)}", file=out)
        if args.list:
            for g in graphs:
                print("---", file=out)
                out.write(format_graph(g))
    return 0


def _cmd_bench(args, out) -> int:
    if args.n < 4:
        raise InputError("bench needs --n >= 4")
    r = extremal_timing_experiment(args.n, args.prime, args.trials, args.seed)
    _emit(args, {
        "n": r.n,
        "prime": str(r.prime),
        "instances": r.instances,
        "false_positives": r.false_positive_count,
        "mean_time_ms": f"{r.mean_time_ms:.3f}",
        "bound_numerator": str(r.theoretical_bound.numerator),
        "bound_denominator": str(r.theoretical_bound.denominator),
        "bound_decimal": render_decimal(r.theoretical_bound),
        "seed": str(args.seed),
    }, out)
    return 0


_COMMANDS = {
    "check-constraint": _cmd_check_constraint,
    "check-inclusion": _cmd_check_inclusion,
    "check-equivalence": _cmd_check_equivalence,
    "classify-graph": _cmd_classify_graph,
    "classify-set": _cmd_classify_set,
    "error-bound": _cmd_error_bound,
    "enumerate": _cmd_enumerate,
    "bench": _cmd_bench,
}


def run(argv=None, out=None, err=None) -> int:
    """Parse ``argv`` and execute one subcommand; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.seed is None:
            args.seed = secrets.randbits(64)
        return _COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except SystemExit as exc:
        # --help exits 0; anything else from argparse is a usage error
        return 0 if exc.code in (0, None) else 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())
