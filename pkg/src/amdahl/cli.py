"""Command-line front end.

One binary, many subcommands, two output modes. ``table`` is for reading,
``csv`` is for piping into plotting tools: it starts with ``#`` comment lines
naming the command that produced it, then a header row, then data rows whose
floats are written in shortest round-trip form so downstream parsing loses
nothing. Given identical arguments and input files the output bytes are
identical; nothing here reads clocks, environment variables, or config files.

Exit codes: 0 success, 1 usage error (bad flags, unknown subcommand),
2 data or model error (malformed input rows, superlinear measurements,
infeasible targets, missing files).

Performance-valued flags take plain numbers in Gflop/s or a unit suffix:
``229P``, ``1E``, ``93014.6T``, ``0.5M``. ``--per-proc-flops`` for ``bounds``
is normalized to flop/s, everything else to Gflop/s.
"""

from __future__ import annotations

import argparse
import csv
import shlex
import sys
from dataclasses import dataclass
from typing import IO, Sequence

from .core import (
    Efficiency,
    alpha_eff_from_efficiency,
    alpha_eff_from_speedup,
    alpha_from_two_efficiencies,
    alpha_from_two_timings,
    max_speedup,
)
from .dataset import (
    ChampionCriterion,
    MachineRecord,
    derive,
    fit_semilog,
    read_records,
    select_champions,
    write_records,
    yearly_mean_efficiency,
)
from .errors import UnboundedError
from .projection import (
    ContributionBudget,
    ScalingScenario,
    bounds,
    geometric_grid,
    project_curve,
    required_one_minus_alpha,
    saturation_rmax,
    whatif,
)
from .workload import load_workload, simulate, sweep_alpha_eff

__all__ = ["run", "main"]

_GFLOPS_SUFFIX = {"M": 1e-3, "G": 1.0, "T": 1e3, "P": 1e6, "E": 1e9}


class _UsageError(Exception):
    def __init__(self, message: str, parser: argparse.ArgumentParser | None = None):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage problems instead of calling sys.exit(2)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message, self)


def _performance(text: str) -> float:
    """Parse a performance value into Gflop/s, accepting M/G/T/P/E suffixes."""
    s = text.strip()
    try:
        return float(s)
    except ValueError:
        pass
    mult = _GFLOPS_SUFFIX.get(s[-1:].upper())
    if mult is not None:
        try:
            return float(s[:-1]) * mult
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(
        f"cannot parse performance value {text!r}; use Gflop/s or a suffix M/G/T/P/E"
    )


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _grid_points(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("a projection grid needs at least 2 points")
    return value


def _precision(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError(f"precision must be in [1, 17], got {value}")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if value < 0.0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {value}")
    return value


def _ratio_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one ratio")
    return values


def _human_gflops(gflops: float) -> str:
    for mult, unit in ((1e9, "exaFLOPS"), (1e6, "Pflop/s"), (1e3, "Tflop/s")):
        if abs(gflops) >= mult:
            return f"{gflops / mult:.4g} {unit}"
    return f"{gflops:.4g} Gflop/s"


@dataclass
class _Output:
    """Shared rendering: scalar blocks and row tables in table or csv mode."""

    fmt: str
    precision: int
    command_line: str
    out: IO[str]

    @property
    def is_table(self) -> bool:
        return self.fmt == "table"

    def number(self, x: float) -> str:
        if self.is_table:
            return f"{x:.{self.precision - 1}e}"
        return repr(float(x))

    def cell(self, value: object) -> str:
        if value is None:
            return "n/a" if self.is_table else ""
        if isinstance(value, bool):
            return str(value)
        if isinstance(value, int):
            return str(value)
        if isinstance(value, float):
            return self.number(value)
        return str(value)

    def comment(self, text: str) -> None:
        self.out.write(f"# {text}\n")

    def scalars(self, pairs: Sequence[tuple[str, object]]) -> None:
        cells = [(key, self.cell(value)) for key, value in pairs]
        if self.is_table:
            width = max(len(key) for key, _ in cells)
            for key, value in cells:
                self.out.write(f"{key:<{width}}  {value}\n")
        else:
            self.comment(self.command_line)
            writer = csv.writer(self.out, lineterminator="\n")
            writer.writerow([key for key, _ in cells])
            writer.writerow([value for _, value in cells])

    def table(
        self,
        headers: Sequence[str],
        rows: Sequence[Sequence[object]],
        comments: Sequence[str] = (),
        title: str | None = None,
    ) -> None:
        text_rows = [[self.cell(v) for v in row] for row in rows]
        if self.is_table:
            if title:
                self.out.write(f"{title}\n")
            widths = [
                max(len(headers[i]), *(len(r[i]) for r in text_rows)) if text_rows else len(headers[i])
                for i in range(len(headers))
            ]
            self.out.write("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip() + "\n")
            for r in text_rows:
                self.out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        else:
            self.comment(self.command_line)
            for line in comments:
                self.comment(line)
            writer = csv.writer(self.out, lineterminator="\n")
            writer.writerow(headers)
            writer.writerows(text_rows)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "csv"),
        default=argparse.SUPPRESS,
        help="output format (default: table)",
    )
    common.add_argument(
        "--precision",
        type=_precision,
        default=argparse.SUPPRESS,
        help="significant digits for table output (default: 4)",
    )

    parser = _Parser(
        prog="amdahl",
        description="Strong-scaling analysis: serial-fraction estimation, "
        "benchmark record analytics, scaling projections, and timeline simulation.",
    )
    parser.add_argument("--format", choices=("table", "csv"), default="table")
    parser.add_argument("--precision", type=_precision, default=4)
    sub = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    p = sub.add_parser(
        "alpha",
        parents=[common],
        help="estimate the effective serial fraction from measurements",
    )
    p.add_argument("--efficiency", type=float, help="measured efficiency in (0, 1]")
    p.add_argument("--speedup", type=float, help="measured speedup")
    p.add_argument("--cores", type=_positive_int, help="processor count of the measurement")
    p.add_argument("--e1", type=float, help="first efficiency of a two-point estimate")
    p.add_argument("--e2", type=float, help="second efficiency of a two-point estimate")
    p.add_argument("--t1", type=float, help="first runtime of a two-timing estimate")
    p.add_argument("--t2", type=float, help="second runtime of a two-timing estimate")
    p.add_argument("--k1", type=_positive_int, help="cores of the first point")
    p.add_argument("--k2", type=_positive_int, help="cores of the second point")

    p = sub.add_parser(
        "simulate",
        parents=[common],
        help="run a sequential/parallel workload through the timeline scheduler",
    )
    p.add_argument("--workload", required=True, help="workload file (JSON)")

    p = sub.add_parser(
        "timeline",
        parents=[common],
        help="per-year champion records with derived scaling metrics and a trend fit",
    )
    p.add_argument("--input", required=True, help="record CSV")
    p.add_argument(
        "--select",
        required=True,
        choices=tuple(c.value for c in ChampionCriterion),
        help="champion criterion",
    )
    p.add_argument(
        "--top",
        type=_positive_int,
        help="only consider each year's N best-ranked records",
    )

    p = sub.add_parser(
        "mean-efficiency",
        parents=[common],
        help="per-year mean and standard deviation of efficiency over top-ranked records",
    )
    p.add_argument("--input", required=True, help="record CSV")
    p.add_argument("--top", required=True, type=_positive_int, help="cohort size per year")

    p = sub.add_parser(
        "project",
        parents=[common],
        help="efficiency and payload performance along a peak-performance sweep",
    )
    p.add_argument("--input", help="record CSV to take the base machine from")
    p.add_argument("--name", help="machine name inside --input")
    p.add_argument("--one-minus-alpha", type=float, help="explicit serial fraction")
    p.add_argument("--cores", type=_positive_int, help="explicit base core count")
    p.add_argument("--rpeak", type=_performance, help="explicit base peak, Gflop/s or suffixed")
    p.add_argument("--rpeak-from", required=True, type=_performance, help="grid start")
    p.add_argument("--rpeak-to", required=True, type=_performance, help="grid end")
    p.add_argument("--points", required=True, type=_grid_points, help="grid size")

    p = sub.add_parser(
        "whatif",
        parents=[common],
        help="rescale a measured machine to a new size, optionally degrading the code",
    )
    p.add_argument("--efficiency", required=True, type=float, help="measured base efficiency")
    p.add_argument("--cores", required=True, type=_positive_int, help="base core count")
    p.add_argument("--new-cores", required=True, type=_positive_int, help="target core count")
    p.add_argument("--rpeak", required=True, type=_performance, help="target peak")
    p.add_argument(
        "--alpha-scale",
        type=_nonnegative_float,
        default=1.0,
        help="factor applied to the serial fraction (default 1)",
    )

    p = sub.add_parser(
        "required-alpha",
        parents=[common],
        help="serial fraction needed to hold an efficiency at a core count",
    )
    p.add_argument("--efficiency", required=True, type=float)
    p.add_argument("--cores", required=True, type=_positive_int)

    p = sub.add_parser(
        "bounds",
        parents=[common],
        help="absolute limits implied by a budget of inherently serial cycles",
    )
    p.add_argument("--clock-hz", required=True, type=float)
    p.add_argument("--runtime-s", required=True, type=float)
    p.add_argument("--hw-cycles", type=_nonnegative_float, default=0.0)
    p.add_argument("--os-cycles", type=_nonnegative_float, default=0.0)
    p.add_argument("--sw-cycles", type=_nonnegative_float, default=0.0)
    p.add_argument("--size-m", type=_nonnegative_float, default=0.0)
    p.add_argument(
        "--per-proc-flops",
        type=_performance,
        help="single-processor rate; suffixed values are Gflop/s-based",
    )

    p = sub.add_parser(
        "saturation",
        parents=[common],
        help="payload-performance ceiling of unbounded growth",
    )
    p.add_argument("--per-proc-flops", required=True, type=_performance)
    p.add_argument("--one-minus-alpha", required=True, type=float)

    p = sub.add_parser(
        "sweep",
        parents=[common],
        help="grid of effective parallel fractions over overhead and sequential ratios",
    )
    p.add_argument("--workload", required=True, help="template workload file (JSON)")
    p.add_argument("--processors", type=_positive_int, help="override the template's count")
    p.add_argument("--overhead", required=True, type=_ratio_list, help="comma-separated ratios")
    p.add_argument("--sequential", required=True, type=_ratio_list, help="comma-separated ratios")

    return parser


def _cmd_alpha(args: argparse.Namespace, output: _Output) -> None:
    modes = {
        "efficiency": args.efficiency is not None,
        "speedup": args.speedup is not None,
        "two-point": args.e1 is not None or args.e2 is not None,
        "two-timings": args.t1 is not None or args.t2 is not None,
    }
    picked = [name for name, active in modes.items() if active]
    if len(picked) != 1:
        raise _UsageError(
            "alpha needs exactly one estimation mode: --efficiency/--cores, "
            "--speedup/--cores, --e1/--k1/--e2/--k2, or --t1/--k1/--t2/--k2"
        )
    mode = picked[0]
    if mode in ("efficiency", "speedup") and args.cores is None:
        raise _UsageError(f"--{mode} also needs --cores")
    if mode == "two-point" and None in (args.e1, args.e2, args.k1, args.k2):
        raise _UsageError("two-point estimation needs all of --e1 --k1 --e2 --k2")
    if mode == "two-timings" and None in (args.t1, args.t2, args.k1, args.k2):
        raise _UsageError("two-timing estimation needs all of --t1 --k1 --t2 --k2")

    if mode == "efficiency":
        estimate = alpha_eff_from_efficiency(args.efficiency, args.cores)
    elif mode == "speedup":
        estimate = alpha_eff_from_speedup(args.speedup, args.cores)
    elif mode == "two-point":
        estimate = alpha_from_two_efficiencies(args.e1, args.k1, args.e2, args.k2)
    else:
        estimate = alpha_from_two_timings(args.t1, args.k1, args.t2, args.k2)

    try:
        ceiling: object = max_speedup(estimate.one_minus_alpha)
    except UnboundedError:
        ceiling = "unbounded"
    output.scalars(
        [
            ("method", estimate.method.value),
            ("cores", estimate.cores),
            ("one_minus_alpha", estimate.one_minus_alpha),
            ("alpha", estimate.alpha),
            ("max_speedup", ceiling),
        ]
    )


def _cmd_simulate(args: argparse.Namespace, output: _Output) -> None:
    with open(args.workload, encoding="utf-8") as fh:
        spec = load_workload(fh)
    result = simulate(spec)
    efficiency = result.speedup.value / spec.processors
    pairs: list[tuple[str, object]] = [
        ("processors", spec.processors),
        ("serial_time", result.serial_time),
        ("parallel_time", result.parallel_time),
        ("speedup", result.speedup.value),
        ("efficiency", efficiency),
        ("alpha_eff", None if result.alpha_eff is None else result.alpha_eff.alpha),
        (
            "one_minus_alpha_eff",
            None if result.alpha_eff is None else result.alpha_eff.one_minus_alpha,
        ),
    ]
    busy_rows = [
        [p, busy, idle]
        for p, (busy, idle) in enumerate(zip(result.per_processor_busy, result.per_processor_idle))
    ]
    timeline_rows = [[seg.processor, seg.start, seg.end, seg.label] for seg in result.timeline]

    if output.is_table:
        output.scalars(pairs)
        output.out.write("\n")
        output.table(("processor", "busy", "idle"), busy_rows)
        output.out.write("\n")
        output.table(("processor", "start", "end", "label"), timeline_rows)
    else:
        comments = [f"{key} = {output.cell(value) or 'n/a'}" for key, value in pairs]
        comments += [f"processor {p}: busy={repr(b)} idle={repr(i)}" for p, b, i in busy_rows]
        output.table(("processor", "start", "end", "label"), timeline_rows, comments=comments)


def _champion_pool(records: list[MachineRecord], top: int | None) -> list[MachineRecord]:
    if top is None:
        return records
    by_year: dict[int, list[MachineRecord]] = {}
    for r in records:
        by_year.setdefault(r.year, []).append(r)
    pool: list[MachineRecord] = []
    for year in sorted(by_year):
        pool.extend(sorted(by_year[year], key=lambda r: (r.rank, r.name))[:top])
    return pool


def _cmd_timeline(args: argparse.Namespace, output: _Output) -> None:
    records = read_records(args.input)
    pool = _champion_pool(records, args.top)
    champions = select_champions(pool, ChampionCriterion(args.select))

    fit = None
    points = [(float(r.year), derive(r).one_minus_alpha_eff) for r in champions]
    if len({x for x, _ in points}) >= 2:
        try:
            fit = fit_semilog(points)
        except ValueError:
            fit = None

    if output.is_table:
        headers = (
            "year", "rank", "name", "arch", "cores",
            "rmax_gflops", "rpeak_gflops", "benchmark", "efficiency", "one_minus_alpha_eff",
        )
        rows = []
        for r in champions:
            m = derive(r)
            rows.append(
                [r.year, r.rank, r.name, r.arch.value, r.cores, r.rmax, r.rpeak,
                 r.benchmark.value, m.efficiency.value, m.one_minus_alpha_eff]
            )
        output.table(headers, rows)
        if fit is not None:
            output.out.write(
                "\nfit of log10(one_minus_alpha_eff) on year: "
                f"slope {output.number(fit.slope)}, intercept {output.number(fit.intercept)}, "
                f"r_squared {output.number(fit.r_squared)}, n {fit.n}\n"
            )
    else:
        output.comment(output.command_line)
        if fit is not None:
            output.comment(
                "fit log10(one_minus_alpha_eff) ~ year: "
                f"slope={fit.slope!r} intercept={fit.intercept!r} "
                f"r_squared={fit.r_squared!r} n={fit.n}"
            )
        write_records(champions, output.out, derived=True)


def _cmd_mean_efficiency(args: argparse.Namespace, output: _Output) -> None:
    records = read_records(args.input)
    rows = [
        [row.year, row.mean_efficiency, row.sd_efficiency]
        for row in yearly_mean_efficiency(records, args.top)
    ]
    output.table(("year", "mean_efficiency", "sd_efficiency"), rows)


def _cmd_project(args: argparse.Namespace, output: _Output) -> None:
    from_file = args.input is not None or args.name is not None
    explicit = (
        args.one_minus_alpha is not None or args.cores is not None or args.rpeak is not None
    )
    if from_file == explicit:
        raise _UsageError(
            "project takes either --input/--name or --one-minus-alpha/--cores/--rpeak"
        )
    if from_file:
        if args.input is None or args.name is None:
            raise _UsageError("--input and --name go together")
        matches = [r for r in read_records(args.input) if r.name == args.name]
        if not matches:
            raise ValueError(f"no record named {args.name!r} in {args.input}")
        if len(matches) > 1:
            raise ValueError(
                f"{len(matches)} records named {args.name!r} in {args.input}; "
                "split the file by benchmark first"
            )
        record = matches[0]
        base_cores, base_rpeak = record.cores, record.rpeak
        one_minus_alpha = derive(record).one_minus_alpha_eff
        base_note = f"base: name={record.name} cores={base_cores} rpeak_gflops={base_rpeak!r}"
    else:
        if None in (args.one_minus_alpha, args.cores, args.rpeak):
            raise _UsageError("explicit mode needs all of --one-minus-alpha --cores --rpeak")
        base_cores, base_rpeak = args.cores, args.rpeak
        one_minus_alpha = args.one_minus_alpha
        base_note = f"base: cores={base_cores} rpeak_gflops={base_rpeak!r}"

    grid = geometric_grid(args.rpeak_from, args.rpeak_to, args.points)
    curve = project_curve(base_cores, base_rpeak, one_minus_alpha, grid)
    rows = [[pt.rpeak, pt.cores, pt.efficiency, pt.rmax] for pt in curve]
    output.table(
        ("rpeak_gflops", "cores", "efficiency", "rmax_gflops"),
        rows,
        comments=[base_note, f"one_minus_alpha={one_minus_alpha!r}"],
        title=None if not output.is_table else f"{base_note}  one_minus_alpha={output.number(one_minus_alpha)}",
    )


def _cmd_whatif(args: argparse.Namespace, output: _Output) -> None:
    base = alpha_eff_from_efficiency(args.efficiency, args.cores)
    scenario = ScalingScenario(
        base_one_minus_alpha=base.one_minus_alpha,
        base_cores=args.cores,
        alpha_scale_factor=args.alpha_scale,
        target_cores=args.new_cores,
        target_rpeak=args.rpeak,
    )
    result = whatif(scenario)
    rmax: object = result.rmax
    if output.is_table:
        rmax = f"{output.number(result.rmax)} Gflop/s ({_human_gflops(result.rmax)})"
    output.scalars(
        [
            ("base_efficiency", args.efficiency),
            ("base_cores", args.cores),
            ("base_one_minus_alpha", base.one_minus_alpha),
            ("alpha_scale", args.alpha_scale),
            ("one_minus_alpha", result.one_minus_alpha),
            ("target_cores", args.new_cores),
            ("target_rpeak_gflops", args.rpeak),
            ("efficiency", result.efficiency.value),
            ("rmax_gflops", rmax),
        ]
    )


def _cmd_required_alpha(args: argparse.Namespace, output: _Output) -> None:
    required = required_one_minus_alpha(args.efficiency, args.cores)
    output.scalars(
        [
            ("efficiency", args.efficiency),
            ("cores", args.cores),
            ("required_one_minus_alpha", required),
        ]
    )


def _cmd_bounds(args: argparse.Namespace, output: _Output) -> None:
    per_flops = None if args.per_proc_flops is None else args.per_proc_flops * 1e9
    budget = ContributionBudget(
        clock_hz=args.clock_hz,
        total_time_s=args.runtime_s,
        hardware_cycles=args.hw_cycles,
        os_cycles=args.os_cycles,
        software_cycles=args.sw_cycles,
        physical_size_m=args.size_m,
        per_processor_flops=per_flops,
    )
    result = bounds(budget)
    throughput: object = result.saturation_flops
    if output.is_table and result.saturation_flops is not None:
        throughput = (
            f"{output.number(result.saturation_flops)} flop/s "
            f"({_human_gflops(result.saturation_flops / 1e9)})"
        )
    output.scalars(
        [
            ("total_cycles", result.total_cycles),
            ("propagation_cycles", result.propagation_cycles),
            ("contributed_cycles", result.contributed_cycles),
            ("min_one_minus_alpha", result.min_one_minus_alpha),
            ("max_speedup", result.max_speedup),
            ("max_throughput_flops", throughput),
            ("share_hardware", result.breakdown["hardware"]),
            ("share_os", result.breakdown["os"]),
            ("share_software", result.breakdown["software"]),
            ("share_propagation", result.breakdown["propagation"]),
        ]
    )


def _cmd_saturation(args: argparse.Namespace, output: _Output) -> None:
    ceiling = saturation_rmax(args.per_proc_flops, args.one_minus_alpha)
    value: object = ceiling
    if output.is_table:
        value = f"{output.number(ceiling)} Gflop/s ({_human_gflops(ceiling)})"
    output.scalars(
        [
            ("per_processor_rpeak_gflops", args.per_proc_flops),
            ("one_minus_alpha", args.one_minus_alpha),
            ("saturation_rmax_gflops", value),
        ]
    )


def _cmd_sweep(args: argparse.Namespace, output: _Output) -> None:
    with open(args.workload, encoding="utf-8") as fh:
        template = load_workload(fh)
    processors = args.processors if args.processors is not None else template.processors
    grid = sweep_alpha_eff(processors, template, args.overhead, args.sequential)
    rows = []
    for point in grid:
        alpha = None if point.one_minus_alpha_eff is None else 1.0 - point.one_minus_alpha_eff
        rows.append(
            [point.overhead_ratio, point.sequential_ratio, alpha, point.one_minus_alpha_eff]
        )
    output.table(
        ("overhead_ratio", "sequential_ratio", "alpha_eff", "one_minus_alpha_eff"),
        rows,
        comments=[f"processors={processors}"],
    )


_COMMANDS = {
    "alpha": _cmd_alpha,
    "simulate": _cmd_simulate,
    "timeline": _cmd_timeline,
    "mean-efficiency": _cmd_mean_efficiency,
    "project": _cmd_project,
    "whatif": _cmd_whatif,
    "required-alpha": _cmd_required_alpha,
    "bounds": _cmd_bounds,
    "saturation": _cmd_saturation,
    "sweep": _cmd_sweep,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, execute one subcommand, and return the process exit code."""
    argv_list = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv_list)
    except _UsageError as err:
        if err.parser is not None:
            sys.stderr.write(err.parser.format_usage())
        print(f"error: {err}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse exits itself only for --help
        code = exc.code
        return code if isinstance(code, int) else 0

    output = _Output(
        fmt=args.format,
        precision=args.precision,
        command_line="amdahl " + shlex.join(argv_list),
        out=sys.stdout,
    )
    try:
        _COMMANDS[args.command](args, output)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        # ModelError subclasses ValueError: superlinear, infeasible, malformed rows.
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    raise SystemExit(run())
