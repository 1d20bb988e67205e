"""Command-line front end.

Single-problem mode proves one TPTP file; benchmark mode runs every
``--heuristic`` over a directory of problems and prints a comparison
table.  ``--out-dir`` additionally writes the report as JSON and CSV and
renders the benchmark figures next to them.

Exit codes: 0 proof found, 1 saturated, 2 resource limit, 3 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import (
    Benchmark,
    bundled_suite_dir,
    format_benchmark_table,
    run_benchmark,
    run_problem,
    write_benchmark_csv,
)
from .heuristic import HeuristicError, parse_heuristic
from .saturation import Limits, PROOF, RESOURCE_OUT, SATURATED, format_derivation
from .tptp import ParseError

DEFAULT_HEURISTIC = "(1*ConjectureLevWeight(ConstPrio,Uni,Gen,Sim,1,5,5))"
DEFAULT_BASELINE = "(1*Ref(ConstPrio,1/2,2,1,1,1))"

EXIT_PROOF = 0
EXIT_SATURATED = 1
EXIT_RESOURCE_OUT = 2
EXIT_INPUT_ERROR = 3

_OUTCOME_EXIT = {
    PROOF: EXIT_PROOF,
    SATURATED: EXIT_SATURATED,
    RESOURCE_OUT: EXIT_RESOURCE_OUT,
}


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simprover",
        description="Saturation prover with conjecture-similarity clause selection.",
    )
    parser.add_argument("problem", nargs="?", help="TPTP cnf problem file")
    parser.add_argument(
        "--heuristic",
        action="append",
        metavar="SPEC",
        help="heuristic specification; repeatable in benchmark mode "
        f"(default: {DEFAULT_HEURISTIC})",
    )
    parser.add_argument("--timeout", type=float, default=5.0, metavar="SEC",
                        help="wall-clock limit per problem (default 5)")
    parser.add_argument("--max-processed", type=int, default=None, metavar="N")
    parser.add_argument("--max-generated", type=int, default=1_000_000, metavar="N")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--derivation", action="store_true",
                        help="print the proof derivation when one is found")
    parser.add_argument("--benchmark", metavar="DIR",
                        help="run all heuristics over a problem directory "
                        "('micro' selects the bundled suite)")
    parser.add_argument("--baseline", metavar="SPEC",
                        help="baseline heuristic for the benchmark "
                        f"(default: {DEFAULT_BASELINE})")
    parser.add_argument("--out-dir", metavar="DIR",
                        help="write benchmark JSON, CSV, and figures here")
    return parser


def _limits(args: argparse.Namespace) -> Limits:
    return Limits(
        max_seconds=args.timeout,
        max_processed=args.max_processed,
        max_generated=args.max_generated,
    )


def _run_single(args: argparse.Namespace) -> int:
    import json as _json

    specs = args.heuristic or [DEFAULT_HEURISTIC]
    if len(specs) > 1:
        print("error: single-problem mode takes one --heuristic", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        heuristic = parse_heuristic(specs[0])
    except HeuristicError as exc:
        print(f"error: bad heuristic: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    path = Path(args.problem)
    if not path.exists():
        print(f"error: no such file: {path}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report, result = run_problem(path, heuristic, _limits(args))
    if report.outcome == "error":
        print(f"error: {report.error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.json:
        from dataclasses import asdict

        print(_json.dumps(asdict(report), indent=2, sort_keys=True))
    else:
        print(
            f"{report.problem}: {report.outcome}  "
            f"processed={report.processed} generated={report.generated} "
            f"time={report.seconds:.3f}s speed={report.kclauses_per_sec:.2f} kc/s"
        )
    if args.derivation and result is not None and result.derivation is not None:
        print(format_derivation(result.derivation))
    return _OUTCOME_EXIT[report.outcome]


def _write_outputs(bench: Benchmark, out_dir: Path) -> None:
    from .plotting import save_benchmark_figures

    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "benchmark.json").write_text(bench.to_json() + "\n")
    write_benchmark_csv(bench, out_dir / "benchmark.csv")
    save_benchmark_figures(bench, out_dir)


def _run_benchmark(args: argparse.Namespace) -> int:
    specs = args.heuristic or [DEFAULT_HEURISTIC]
    baseline = args.baseline or DEFAULT_BASELINE
    directory = bundled_suite_dir() if args.benchmark == "micro" else Path(args.benchmark)
    try:
        bench = run_benchmark(directory, specs, _limits(args), baseline=baseline)
    except (HeuristicError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.json:
        print(bench.to_json())
    else:
        print(format_benchmark_table(bench))
    if args.out_dir:
        _write_outputs(bench, Path(args.out_dir))
    return EXIT_PROOF


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    if args.benchmark:
        code = _run_benchmark(args)
    elif args.problem:
        try:
            code = _run_single(args)
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = EXIT_INPUT_ERROR
    else:
        build_arg_parser().print_usage(sys.stderr)
        code = EXIT_INPUT_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
