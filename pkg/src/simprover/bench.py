"""Problem running and the benchmark harness.

A run report mirrors the measurement columns used for strategy
evaluation: outcome, wall time, processed and generated clause counts,
and processed kilo-clauses per second.  A benchmark compares several
heuristics over a directory of problems against a designated baseline,
reporting solved counts, mean speed, the relative gain over the baseline,
and how many problems each heuristic solved that the baseline missed.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

from .heuristic import parse_heuristic, print_heuristic
from .saturation import Limits, PROOF, SaturationResult, saturate
from .tptp import ParseError, parse_problem
from .weights import Heuristic

OUTCOME_ERROR = "error"


@dataclass
class RunReport:
    problem: str
    heuristic: str
    outcome: str  # proof | saturated | resource_out | error
    seconds: float
    processed: int
    generated: int
    kclauses_per_sec: float
    error: str | None = None


@dataclass
class BenchmarkRow:
    heuristic: str
    solved: int
    mean_kclauses_per_sec: float
    ref_gain_percent: float | None
    not_solved_by_baseline: int
    reports: list[RunReport]


@dataclass
class Benchmark:
    problems: list[str]
    baseline: str
    rows: list[BenchmarkRow]

    def to_json_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def _kclauses_per_sec(processed: int, seconds: float) -> float:
    if seconds <= 0.0:
        return 0.0
    return processed / (1000.0 * seconds)


def _report(problem: str, heuristic_str: str, result: SaturationResult) -> RunReport:
    return RunReport(
        problem=problem,
        heuristic=heuristic_str,
        outcome=result.outcome,
        seconds=result.stats.seconds,
        processed=result.stats.processed,
        generated=result.stats.generated,
        kclauses_per_sec=_kclauses_per_sec(result.stats.processed, result.stats.seconds),
    )


def run_problem(
    path: str | Path,
    heuristic: Heuristic | str,
    limits: Limits = Limits(),
) -> tuple[RunReport, SaturationResult | None]:
    """Parse, saturate, and report one problem file.

    Parse failures produce an error report instead of raising, so batches
    keep going; the saturation result is returned for derivation printing.
    """
    path = Path(path)
    if isinstance(heuristic, str):
        heuristic = parse_heuristic(heuristic)
    heuristic_str = print_heuristic(heuristic)
    try:
        clauses = parse_problem(path.read_text())
    except (OSError, ParseError, ValueError) as exc:
        report = RunReport(
            problem=path.stem,
            heuristic=heuristic_str,
            outcome=OUTCOME_ERROR,
            seconds=0.0,
            processed=0,
            generated=0,
            kclauses_per_sec=0.0,
            error=str(exc),
        )
        return report, None
    result = saturate(clauses, heuristic, limits)
    return _report(path.stem, heuristic_str, result), result


def problem_files(directory: str | Path) -> list[Path]:
    directory = Path(directory)
    files = sorted(directory.glob("*.p"))
    if not files:
        raise ValueError(f"no .p problem files in {directory}")
    return files


def run_benchmark(
    directory: str | Path,
    heuristics: list[Heuristic | str],
    limits: Limits = Limits(),
    baseline: Heuristic | str | None = None,
) -> Benchmark:
    """Run every heuristic over every problem in a directory.

    The baseline defaults to the first heuristic; if given and not among
    the heuristics it is appended as an extra row.  Rows are ordered as
    given, problems alphabetically, so reports are independent of
    execution order.
    """
    parsed = [parse_heuristic(h) if isinstance(h, str) else h for h in heuristics]
    if not parsed:
        raise ValueError("at least one heuristic is required")
    if baseline is None:
        baseline_h = parsed[0]
    else:
        baseline_h = parse_heuristic(baseline) if isinstance(baseline, str) else baseline
    baseline_str = print_heuristic(baseline_h)
    if baseline_str not in {print_heuristic(h) for h in parsed}:
        parsed.append(baseline_h)

    files = problem_files(directory)
    solved_sets: dict[str, set[str]] = {}
    reports_by_heuristic: dict[str, list[RunReport]] = {}
    for h in parsed:
        h_str = print_heuristic(h)
        reports = []
        for path in files:
            report, _ = run_problem(path, h, limits)
            reports.append(report)
        reports.sort(key=lambda r: r.problem)
        reports_by_heuristic[h_str] = reports
        solved_sets[h_str] = {r.problem for r in reports if r.outcome == PROOF}

    baseline_solved = solved_sets[baseline_str]
    rows = []
    for h in parsed:
        h_str = print_heuristic(h)
        reports = reports_by_heuristic[h_str]
        solved = len(solved_sets[h_str])
        speeds = [r.kclauses_per_sec for r in reports if r.outcome != OUTCOME_ERROR]
        mean_speed = sum(speeds) / len(speeds) if speeds else 0.0
        if baseline_solved:
            gain = round(100.0 * (solved - len(baseline_solved)) / len(baseline_solved), 1)
        else:
            gain = None
        rows.append(
            BenchmarkRow(
                heuristic=h_str,
                solved=solved,
                mean_kclauses_per_sec=mean_speed,
                ref_gain_percent=gain,
                not_solved_by_baseline=len(solved_sets[h_str] - baseline_solved),
                reports=reports,
            )
        )
    return Benchmark(
        problems=[p.stem for p in files],
        baseline=baseline_str,
        rows=rows,
    )


def format_benchmark_table(bench: Benchmark) -> str:
    """Human-readable benchmark table."""
    header = f"{'heuristic':<60} {'solved':>6} {'speed':>7} {'%Ref+':>6} {'+base':>5}"
    lines = [f"problems: {len(bench.problems)}   baseline: {bench.baseline}", header,
             "-" * len(header)]
    for row in bench.rows:
        gain = "n/a" if row.ref_gain_percent is None else f"{row.ref_gain_percent:.1f}"
        lines.append(
            f"{row.heuristic:<60} {row.solved:>6} {row.mean_kclauses_per_sec:>7.2f} "
            f"{gain:>6} {row.not_solved_by_baseline:>5}"
        )
    return "\n".join(lines)


def write_benchmark_csv(bench: Benchmark, path: str | Path) -> Path:
    """Write per-heuristic rows and per-problem results as CSV."""
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["heuristic", "solved", "mean_kclauses_per_sec", "ref_gain_percent",
             "not_solved_by_baseline"]
        )
        for row in bench.rows:
            writer.writerow(
                [row.heuristic, row.solved, f"{row.mean_kclauses_per_sec:.6f}",
                 "" if row.ref_gain_percent is None else row.ref_gain_percent,
                 row.not_solved_by_baseline]
            )
        writer.writerow([])
        writer.writerow(
            ["heuristic", "problem", "outcome", "seconds", "processed", "generated",
             "kclauses_per_sec"]
        )
        for row in bench.rows:
            for r in row.reports:
                writer.writerow(
                    [r.heuristic, r.problem, r.outcome, f"{r.seconds:.6f}",
                     r.processed, r.generated, f"{r.kclauses_per_sec:.6f}"]
                )
    return path


def bundled_suite_dir() -> Path:
    """Directory of the bundled 20-problem micro-suite."""
    return Path(resources.files("simprover")) / "problems"
