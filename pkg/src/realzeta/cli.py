"""Command line entry point."""

from __future__ import annotations

import argparse
import json
import sys

from .dualgraph import build_graph, to_dot
from .parser import ParseError, parse_factored, parse_polynomial
from .report import build_datum_report, build_report, failed_checks, to_json, to_text
from .resolution import ResolutionError, resolve
from .selftest import format_table, self_test
from .zeta import MODES_TOP, DLDatum, ZetaError

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2

MODE_NAMES = {"naive": "naive", "plus": "plus", "minus": "minus", "complex": "complexified"}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realzeta", description="Real zeta functions of plane curve germs.")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help="polynomial in x and y, e.g. 'y^2 - x^3'")
    src.add_argument("--factored", help="factors with exponents, e.g. 'x^2+y^6:2; x^2-y^3:3'")
    src.add_argument("--dl-json", metavar="PATH", help="stratum data as JSON")
    src.add_argument("--self-test", action="store_true", help="run the built-in example suite")
    p.add_argument("--mode", choices=[*MODE_NAMES, "all"], default="all")
    p.add_argument("--level", choices=["top", "beta", "all"], default="all")
    p.add_argument("--series", type=int, default=0, metavar="N", help="print T^0..T^N series coefficients")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if args.self_test:
        results = self_test()
        sys.stdout.write(format_table(results))
        return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED
    if args.series < 0:
        return _input_error("--series must be nonnegative")
    modes = MODES_TOP if args.mode == "all" else (MODE_NAMES[args.mode],)
    levels = ("top", "beta") if args.level == "all" else (args.level,)
    datum = model = source = None
    try:
        if args.dl_json:
            with open(args.dl_json, encoding="utf-8") as fh:
                datum = DLDatum.from_json(json.load(fh))
            echo = {"kind": "dl-json", "text": args.dl_json}
        elif args.poly is not None:
            source, echo = parse_polynomial(args.poly), {"kind": "poly", "text": args.poly}
        else:
            source, echo = parse_factored(args.factored), {"kind": "factored", "text": args.factored}
        if source is not None:
            model = resolve(source)
    except (ParseError, ResolutionError, ZetaError, OSError, json.JSONDecodeError) as exc:
        return _input_error(str(exc))
    if model is None:
        if args.format == "dot":
            return _input_error("DOT output needs a polynomial input")
        report = build_datum_report(datum, echo, modes, levels, args.series)
    elif args.format == "dot":
        sys.stdout.write(to_dot(build_graph(model)))
        return EXIT_OK
    else:
        report = build_report(model, source, echo, modes, levels, args.series)
    sys.stdout.write(to_json(report) if args.format == "json" else to_text(report))
    return EXIT_CHECK_FAILED if failed_checks(report) else EXIT_OK


def _input_error(message: str) -> int:
    sys.stderr.write(f"realzeta: error: {message}\n")
    return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
