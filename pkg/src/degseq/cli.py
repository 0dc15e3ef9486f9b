"""Command-line front end.

Usage::

    $ degseq check "5,1^11"
    $ echo "4^3,1^4" | degseq --format json check
    $ degseq realize "2,2,2"
    $ degseq witness 5 --verify
    $ degseq gap 2
    $ degseq sweep --nmax 8 --dmax 5
    $ degseq scan --d1 4

Exit codes: 0 graphic / clean / confirmed, 2 usage, parse or guard
errors, 3 non-graphic input or a failed check.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import bounds_summary
from .errors import BadParameters, NotGraphic, ParseError, Refused
from .extremal import gap_example, witness_nongraphic
from .oracle import cross_check, sharpness_scan
from .seqcore import havel_hakimi_realize, parse_sequence

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILED = 3


def _eg_dict(report):
    fv = report.first_violation
    return {
        "graphic": report.graphic,
        "parity_even": report.parity_even,
        "first_violation": None if fv is None else {"k": fv.k, "lhs": fv.lhs, "rhs": fv.rhs},
    }


def _verdict_dict(v):
    out = {
        "predicate": v.predicate.value,
        "applicable": v.applicable,
        "holds": v.holds,
        "lhs": v.lhs,
        "rhs": v.rhs,
        "min_n": v.min_n,
    }
    if v.epsilon_prime is not None:
        out["epsilon_prime"] = v.epsilon_prime
    return out


def _summary_dict(seq, naive):
    summary = bounds_summary(seq, naive=naive)
    return {
        "sequence": str(seq),
        "n": seq.n,
        "sum": seq.sum,
        "erdos_gallai": _eg_dict(summary.eg),
        "bounds": [_verdict_dict(v) for v in summary.verdicts],
    }


# -- text rendering ------------------------------------------------------------


def _scalar(value):
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_text(data, indent=0):
    """Indented ``key: value`` lines carrying exactly the fields of ``data``."""
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(value, indent + 1))
            elif isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}: {'{}' if isinstance(value, dict) else '[]'}")
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)):
                sub = render_text(item, indent + 1)
                lines.append(f"{pad}- {sub[0].lstrip()}" if sub else f"{pad}-")
                lines.extend(sub[1:])
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(pad + _scalar(data))
    return lines


def _emit(doc, fmt, text_lines=None):
    if fmt == "json":
        print(json.dumps(doc, sort_keys=False))
    else:
        lines = text_lines if text_lines is not None else render_text(doc)
        if lines:
            print("\n".join(lines))


# -- input ---------------------------------------------------------------------


def _inputs(args):
    if args.sequence is not None:
        return [args.sequence]
    return [line.strip() for line in sys.stdin if line.strip()]


def _parse_all(texts):
    parsed = []
    for text in texts:
        try:
            parsed.append((text, parse_sequence(text), None))
        except ParseError as exc:
            print(f"error: {text!r}: {type(exc).__name__}: {exc}", file=sys.stderr)
            parsed.append((text, None, f"{type(exc).__name__}: {exc}"))
    return parsed


def _batch_code(items):
    if any("error" in item for item in items):
        return EXIT_USAGE
    if any(not item["graphic"] for item in items):
        return EXIT_FAILED
    return EXIT_OK


# -- commands --------------------------------------------------------------------


def cmd_check(args):
    items = []
    for text, seq, err in _parse_all(_inputs(args)):
        if err:
            items.append({"input": text, "error": err})
            continue
        item = {"input": text}
        item.update(_summary_dict(seq, args.naive_eg))
        item["graphic"] = item["erdos_gallai"]["graphic"]
        items.append(item)
    _emit({"command": "check", "results": items}, args.format)
    return _batch_code(items)


def cmd_realize(args):
    items = []
    for text, seq, err in _parse_all(_inputs(args)):
        if err:
            items.append({"input": text, "error": err})
            continue
        try:
            real = havel_hakimi_realize(seq)
        except NotGraphic:
            items.append({"input": text, "graphic": False, "n": seq.n, "edges": None})
        else:
            items.append({"input": text, "graphic": True, "n": real.n,
                          "edges": [list(e) for e in real.edges]})
    lines = []
    for item in items:
        if len(items) > 1:
            lines.append(f"# {item['input']}")
        if "error" in item:
            lines.append(f"error: {item['error']}")
        elif not item["graphic"]:
            lines.append("NOT GRAPHIC")
        else:
            lines.extend(f"{u} {v}" for u, v in item["edges"])
    _emit({"command": "realize", "results": items}, args.format, lines)
    return _batch_code(items)


def _family_output(command, params, seq, args, expect_graphic):
    result = {"sequence": str(seq)}
    code = EXIT_OK
    if args.verify:
        result.update(_summary_dict(seq, args.naive_eg))
        if result["erdos_gallai"]["graphic"] != expect_graphic:
            code = EXIT_FAILED
    lines = [str(seq)]
    if args.verify:
        lines += render_text({k: v for k, v in result.items() if k != "sequence"})
    _emit({"command": command, "input": params, "results": result}, args.format, lines)
    return code


def cmd_witness(args):
    d = args.d
    if args.family != "auto" and (d % 2 == 0) != (args.family == "even"):
        raise BadParameters(f"d={d} does not belong to the {args.family} family")
    seq = witness_nongraphic(d)
    return _family_output("witness", {"d": d, "family": args.family}, seq, args, False)


def cmd_gap(args):
    seq = gap_example(args.x)
    return _family_output("gap", {"x": args.x}, seq, args, True)


def cmd_sweep(args):
    report = cross_check(args.nmax, args.dmax, jobs=args.jobs)
    doc = {
        "command": "sweep",
        "input": {"nmax": args.nmax, "dmax": args.dmax},
        "results": {
            "sequences_checked": report.sequences_checked,
            "graphic_count": report.graphic_count,
            "realizations_checked": report.realizations_checked,
            "violations": [list(v) for v in report.violations],
            "eg_hh_mismatches": report.eg_hh_mismatches,
            "rle_naive_mismatches": report.rle_naive_mismatches,
            "flatten_failures": [list(v) for v in report.flatten_failures],
            "realization_failures": [list(v) for v in report.realization_failures],
            "clean": report.clean,
        },
    }
    _emit(doc, args.format)
    return EXIT_OK if report.clean else EXIT_FAILED


def cmd_scan(args):
    res = sharpness_scan(args.d1, args.extra, force=args.force, jobs=args.jobs,
                         naive=args.naive_eg)
    doc = {
        "command": "scan",
        "input": {"d1": args.d1, "extra": args.extra},
        "results": {
            "d1": res.d1,
            "threshold": res.threshold,
            "witness_at_threshold_minus_1": str(res.witness_at_threshold_minus_1),
            "witness_graphic": res.witness_graphic,
            "lengths_confirmed": res.lengths_confirmed,
            "sequences_checked": [{"length": L, "count": c} for L, c in res.sequences_checked.items()],
            "counterexamples": res.counterexamples,
            "confirmed": res.confirmed,
            "note": res.note,
        },
    }
    _emit(doc, args.format)
    return EXIT_OK if res.confirmed else EXIT_FAILED


# -- parser ----------------------------------------------------------------------


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def _add_globals(parser, suppress):
    # Subparsers repeat the global flags with SUPPRESS defaults so the flags
    # work on either side of the subcommand name.
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=d("text"))
    parser.add_argument("--jobs", type=_positive, default=d(1), metavar="N",
                        help="worker processes for sweep/scan; output does not depend on it")
    parser.add_argument("--naive-eg", action="store_true", default=d(False),
                        help="evaluate Erdos-Gallai index by index")
    parser.add_argument("--force", action="store_true", default=d(False),
                        help="lift the scan feasibility guard")


def build_parser():
    parser = argparse.ArgumentParser(prog="degseq", description="Graphicality of degree sequences.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="EG verdict and all sufficiency bounds")
    p.add_argument("sequence", nargs="?", help="e.g. '4^2,1^6'; read lines from stdin if omitted")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="edge list of one realization")
    p.add_argument("sequence", nargs="?")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("witness", help="non-graphic sequence one below the floor bound")
    p.add_argument("d", type=int)
    p.add_argument("--family", choices=("auto", "even", "odd"), default="auto")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("gap", help="graphic sequence between the floor and corollary bounds")
    p.add_argument("x", type=int)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("sweep", help="exhaustive cross-check of small sequences")
    p.add_argument("--nmax", type=_positive, required=True)
    p.add_argument("--dmax", type=_positive, required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("scan", help="exhaustive sharpness check of the floor bound")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--extra", type=int, default=2, help="lengths past the threshold to scan")
    p.set_defaults(func=cmd_scan)

    for p in sub.choices.values():
        _add_globals(p, suppress=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BadParameters, Refused) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
