"""Command-line front end: ``limwork run | bench | generate``."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import emst, hull, oracles, tradeoff, voronoi_cws
from .exact import GeneralPositionViolation, PointSet
from .generate import GUARDS, GuardExhausted, generate
from .io import EdgeWriter, ParseError, read_points, write_points
from .workspace import BudgetExceeded, OutputStream, StepCounter, Workspace

ALGORITHMS = ("voronoi-cws", "voronoi-tradeoff", "emst", "hull", "delaunay")
CSV_HEADER = ("algo", "n", "s", "seed", "steps", "peak_cells", "wall_ns")
STATUSES = ("verified", "mismatch", "skipped")

STEP_WEIGHTS = """\
step weights: one unit per predicate evaluation and per site read; every
small diagram built by voronoi-tradeoff is charged m*ceil(log2 m) for m
sites, plus one unit per site read."""

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_BUDGET = 4


class VerificationMismatch(AssertionError):
    """Output differs from the oracle; ``first`` is the first differing record."""

    def __init__(self, algo: str, first):
        self.algo = algo
        self.first = first
        self.report = None
        super().__init__(f"{algo}: first differing record {first}")


@dataclass
class RunReport:
    algo: str
    n: int
    s: int | None
    peak_cells: int
    steps: int
    wall_ns: int
    output_count: int
    status: str = "skipped"
    records: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")

    def summary(self) -> str:
        s = "-" if self.s is None else self.s
        return (f"{self.algo} n={self.n} s={s} peak_cells={self.peak_cells} "
                f"steps={self.steps} wall_ms={self.wall_ns / 1e6:.1f} "
                f"edges={self.output_count} status={self.status}")

    def csv_row(self, seed=None) -> list:
        return [self.algo, self.n, "" if self.s is None else self.s,
                "" if seed is None else seed, self.steps, self.peak_cells, self.wall_ns]


def budget_for(algo: str, s: int | None) -> int:
    if algo == "voronoi-tradeoff":
        return tradeoff.budget_for(s)
    if algo == "hull":
        return hull.DEFAULT_BUDGET
    return voronoi_cws.DEFAULT_BUDGET


def execute(ps: PointSet, algo: str, s: int | None = None, sink=None,
            budget: int | None = None) -> tuple[Workspace, StepCounter, int, int]:
    """Run one algorithm; returns the workspace, counter, emitted count and wall ns."""
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if algo == "voronoi-tradeoff" and (s is None or s < 1):
        raise ValueError("voronoi-tradeoff needs --space s >= 1")
    ws = Workspace(budget if budget is not None else budget_for(algo, s))
    counter = StepCounter()
    stream = OutputStream(sink)
    t0 = time.perf_counter_ns()
    if algo == "voronoi-cws":
        voronoi_cws.enumerate_voronoi_edges(ps, stream, workspace=ws, counter=counter)
    elif algo == "delaunay":
        voronoi_cws.enumerate_delaunay_edges(ps, stream, workspace=ws, counter=counter)
    elif algo == "voronoi-tradeoff":
        tradeoff.tradeoff_voronoi(ps, s, stream, workspace=ws, counter=counter)
    elif algo == "emst":
        emst.enumerate_emst(ps, stream, workspace=ws, counter=counter)
    else:
        hull.gift_wrap_hull(ps, stream, workspace=ws, counter=counter)
    return ws, counter, stream.emitted, time.perf_counter_ns() - t0


def _first_difference(got: list, want: list):
    for a, b in zip(got, want):
        if a != b:
            return a, b
    if len(got) > len(want):
        return got[len(want)], None
    return None, want[len(got)]


def verify(ps: PointSet, algo: str, records: list) -> None:
    """Compare emitted records with the oracle; raise on the first difference."""
    if algo in ("voronoi-cws", "voronoi-tradeoff"):
        got, want = sorted(records), sorted(oracles.oracle_voronoi(ps).edges)
    elif algo == "delaunay":
        got, want = sorted(records), sorted(oracles.oracle_delaunay(ps))
    elif algo == "emst":
        got, want = sorted(records), sorted(oracles.oracle_emst(ps))
    else:
        got = [e.i for e in records] or [0]
        want = oracles.oracle_hull(ps)
    if got != want:
        raise VerificationMismatch(algo, _first_difference(got, want))


def run(input_path, algo: str, s: int | None = None, verify_output: bool = False,
        output_path=None) -> RunReport:
    """Run ``algo`` on a point file and write its records.

    Records go to ``output_path``, or to stdout when it is None.  On a
    verification mismatch the raised error carries the report.
    """
    ps = read_points(input_path)
    s = s if algo == "voronoi-tradeoff" else None
    records: list = []
    fh = open(output_path, "w", encoding="utf-8") if output_path else sys.stdout
    writer = EdgeWriter(fh)

    def sink(edge):
        records.append(edge)
        writer(edge)

    try:
        ws, counter, emitted, wall = execute(ps, algo, s, sink)
    finally:
        if output_path:
            fh.close()
    report = RunReport(algo, len(ps), s, ws.peak, counter.steps, wall, emitted)
    report.records = records
    if verify_output:
        try:
            verify(ps, algo, records)
        except VerificationMismatch as exc:
            report.status = "mismatch"
            exc.report = report
            raise
        report.status = "verified"
    return report


def bench(algo: str, *, input_path=None, n_list=(), s_list=(None,), seed: int = 0,
          reps: int = 1, csv_path=None) -> list[list]:
    """Run every (instance, s) cell and return CSV rows (header excluded).

    Instances come from ``input_path`` or from :func:`generate` with seeds
    ``seed, seed + 1, ...`` for each n.
    """
    instances = []
    if input_path is not None:
        instances.append((read_points(input_path), None))
    for n in n_list:
        guard = "lengths" if algo == "emst" else "general"
        for r in range(reps):
            instances.append((generate(n, seed + r, guard), seed + r))
    if algo != "voronoi-tradeoff":
        s_list = (None,)
    rows = []
    for ps, inst_seed in instances:
        for s in s_list:
            ws, counter, emitted, wall = execute(ps, algo, s)
            report = RunReport(algo, len(ps), s, ws.peak, counter.steps, wall, emitted)
            rows.append(report.csv_row(inst_seed))
    if csv_path is not None:
        with open(csv_path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER)
            w.writerows(rows)
    return rows


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("values must be positive integers")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limwork",
        description="Voronoi, Delaunay, EMST and convex hull in limited workspace.",
        epilog=STEP_WEIGHTS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one algorithm on a point file",
                           epilog=STEP_WEIGHTS,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    p_run.add_argument("input", type=Path)
    p_run.add_argument("--algo", choices=ALGORITHMS, required=True)
    p_run.add_argument("--space", type=int, default=None,
                       help="s, the number of sites voronoi-tradeoff keeps in workspace")
    p_run.add_argument("--verify", action="store_true", help="compare with the oracle")
    p_run.add_argument("--out", type=Path, default=None,
                       help="edge records go here (default: stdout)")
    p_run.add_argument("--csv", type=Path, default=None,
                       help="also write the report as a one-row CSV")

    p_bench = sub.add_parser("bench", help="step and space counts over n and s",
                             epilog=STEP_WEIGHTS,
                             formatter_class=argparse.RawDescriptionHelpFormatter)
    p_bench.add_argument("input", type=Path, nargs="?", default=None)
    p_bench.add_argument("--algo", choices=ALGORITHMS, required=True)
    p_bench.add_argument("--n", type=_int_list, default=[],
                         help="generated instance sizes, e.g. 128,256")
    p_bench.add_argument("--s-list", type=_int_list, default=None,
                         help="values of s for voronoi-tradeoff, e.g. 1,2,4")
    p_bench.add_argument("--reps", type=int, default=1, help="instances per n")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--csv", type=Path, default=None,
                         help="CSV destination (default: stdout)")

    p_gen = sub.add_parser("generate", help="write a seeded point file")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--guard", choices=GUARDS, default="general")
    p_gen.add_argument("--out", type=Path, default=None,
                       help="point file destination (default: stdout)")
    return parser


def _cmd_run(args) -> int:
    # with records on stdout the summary goes to stderr
    summary_to = sys.stderr if args.out is None else sys.stdout
    try:
        report = run(args.input, args.algo, args.space, args.verify, args.out)
    except VerificationMismatch as exc:
        print(exc.report.summary(), file=summary_to)
        print(f"error: verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except GeneralPositionViolation as exc:
        print(f"error: general position violated ({exc.kind}): sites {exc.indices}",
              file=sys.stderr)
        return EXIT_DEGENERATE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(report.summary(), file=summary_to)
    if args.csv is not None:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER)
            w.writerow(report.csv_row())
    return 0


def _cmd_bench(args) -> int:
    if args.input is None and not args.n:
        print("error: give a point file or --n", file=sys.stderr)
        return EXIT_INPUT
    if args.algo == "voronoi-tradeoff" and not args.s_list:
        print("error: voronoi-tradeoff needs --s-list", file=sys.stderr)
        return EXIT_INPUT
    try:
        rows = bench(args.algo, input_path=args.input, n_list=args.n,
                     s_list=args.s_list or (None,), seed=args.seed, reps=args.reps,
                     csv_path=args.csv)
    except GeneralPositionViolation as exc:
        print(f"error: general position violated ({exc.kind}): sites {exc.indices}",
              file=sys.stderr)
        return EXIT_DEGENERATE
    except (ParseError, OSError, ValueError, GuardExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.csv is None:
        w = csv.writer(sys.stdout)
        w.writerow(CSV_HEADER)
        w.writerows(rows)
    return 0


def _cmd_generate(args) -> int:
    try:
        ps = generate(args.n, args.seed, args.guard)
    except (ValueError, GuardExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    header = f"n={args.n} seed={args.seed} guard={args.guard}"
    if args.out is None:
        sys.stdout.write(f"# {header}\n")
        for x, y in ps:
            sys.stdout.write(f"{x} {y}\n")
    else:
        write_points(args.out, list(ps), header)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "bench":
        return _cmd_bench(args)
    return _cmd_generate(args)


if __name__ == "__main__":
    sys.exit(main())
