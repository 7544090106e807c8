"""Command-line entry point: ``ptmc {pascal,generate,verify,compare,simulate}``.

Exit codes: 0 success / property holds, 1 property violated, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, code_core, simulator

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_pascal(args) -> int:
    code_core.binomial_row(args.n)  # range check before any output
    rows = [code_core.binomial_row(k) for k in range(args.n + 1)]
    sys.stdout.write("".join(" ".join(map(str, r.entries)) + "\n" for r in rows))
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = code_core.CodeSpec(args.users, args.weight)
    bits = code_core.generate_ptmc(spec)
    if args.format == "json":
        text = code_core.matrix_to_json(bits, weight=spec.weight)
    else:
        text = code_core.format_matrix(bits)
    _write_text(args.out, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    bits = code_core.parse_matrix(_read_text(args.path))
    report = analysis.verify(bits, expected_weight=args.expect_weight)
    sys.stdout.write(report.to_json())
    return EXIT_OK if report.ok else EXIT_VIOLATED


def cmd_compare(args) -> int:
    rows = analysis.compare_table(args.users, args.weight)
    if args.csv:
        sys.stdout.write(analysis.rows_to_csv(rows))
    elif args.json:
        sys.stdout.write(analysis.rows_to_json(rows))
    else:
        sys.stdout.write(analysis.rows_to_table(rows))
    return EXIT_OK


def cmd_simulate(args) -> int:
    bits = code_core.parse_matrix(_read_text(args.path))
    if args.exhaustive:
        report = simulator.run_exhaustive(bits)
    else:
        if args.trials is None or args.seed is None:
            raise ValueError("--trials and --seed are required unless --exhaustive")
        config = simulator.SimConfig(
            trials=args.trials,
            seed=args.seed,
            activity=args.activity,
            noise_sigma=args.noise,
        )
        report = simulator.run_monte_carlo(bits, config)
    sys.stdout.write(report.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ptmc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("pascal", help="print rows 0..n of Pascal's triangle")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_pascal)

    p = sub.add_parser("generate", help="write a PTMC code matrix")
    p.add_argument("--users", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check weights and cross-correlation")
    p.add_argument("path")
    p.add_argument("--expect-weight", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="compare code families")
    p.add_argument("--users", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("simulate", help="simulate direct detection")
    p.add_argument("path")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--activity", type=float, default=0.5)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code in (EXIT_OK, EXIT_USAGE) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, TypeError, OSError) as exc:
        print(f"ptmc {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
