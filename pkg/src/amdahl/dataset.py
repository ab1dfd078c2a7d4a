"""Benchmark record ingestion and per-record scaling metrics.

Records follow the TOP500 publication shape: one machine per row with its
list rank, core count, and measured versus peak throughput for a named
benchmark. The canonical performance unit in files is Gflop/s.

File format: CSV with header ``year,rank,name,arch,cores,rmax_gflops,
rpeak_gflops,benchmark``. Lines starting with ``#`` before the header are
treated as comments, which lets output produced by the CLI round-trip through
this parser. Extra columns after the required eight are ignored, for the same
reason.

Parsing and derivation are pure per-row transformations; output order always
follows input order.
"""

from __future__ import annotations

import csv
import math
import statistics
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import IO, Iterable, NamedTuple, Sequence

from .core import Efficiency, alpha_eff_from_efficiency
from .errors import (
    DegenerateDataError,
    MalformedRowError,
    MissingHeaderError,
    NonPositiveValueError,
)

__all__ = [
    "Architecture",
    "Benchmark",
    "MachineRecord",
    "DerivedMetrics",
    "ChampionCriterion",
    "GroupBy",
    "RegressionFit",
    "YearlyEfficiency",
    "parse_records",
    "read_records",
    "write_records",
    "derive",
    "select_champions",
    "fit_semilog",
    "yearly_mean_efficiency",
    "fixture_path",
]

_HEADER = ("year", "rank", "name", "arch", "cores", "rmax_gflops", "rpeak_gflops", "benchmark")


class Architecture(Enum):
    MPP = "MPP"
    CLUSTER = "Cluster"
    OTHER = "Other"


class Benchmark(Enum):
    HPL = "HPL"
    HPCG = "HPCG"


class ChampionCriterion(Enum):
    BEST_RMAX = "best-rmax"
    BEST_ALPHA = "best-alpha"


class GroupBy(Enum):
    """Grouping key for champion selection. Only calendar years so far."""

    YEAR = "year"


@dataclass(frozen=True)
class MachineRecord:
    """One published measurement of one machine. rmax and rpeak are in Gflop/s."""

    year: int
    rank: int
    name: str
    arch: Architecture
    cores: int
    rmax: float
    rpeak: float
    benchmark: Benchmark

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.cores < 1:
            raise ValueError(f"cores must be >= 1, got {self.cores}")
        if not math.isfinite(self.rmax) or self.rmax <= 0.0:
            raise ValueError(f"rmax must be finite and > 0, got {self.rmax!r}")
        if not math.isfinite(self.rpeak) or self.rpeak <= 0.0:
            raise ValueError(f"rpeak must be finite and > 0, got {self.rpeak!r}")
        if self.rmax > self.rpeak:
            raise ValueError(
                f"rmax {self.rmax!r} exceeds rpeak {self.rpeak!r}, which would be superlinear"
            )


@dataclass(frozen=True)
class DerivedMetrics:
    """Parallel efficiency and effective serial fraction of one record."""

    efficiency: Efficiency
    one_minus_alpha_eff: float


def parse_records(stream: Iterable[str]) -> list[MachineRecord]:
    """Parse records from CSV text. Raises on the first malformed row.

    Raises:
        MissingHeaderError: the first content row is not the expected header.
        MalformedRowError: a row has the wrong shape or violates an invariant;
            carries the 1-based line number of the offending row.
    """
    reader = csv.reader(stream)
    header: list[str] | None = None
    records: list[MachineRecord] = []
    for row in reader:
        if not row or (row[0].lstrip().startswith("#") and header is None):
            continue
        if header is None:
            header = [cell.strip().lower() for cell in row]
            if tuple(header[: len(_HEADER)]) != _HEADER:
                raise MissingHeaderError(
                    "expected header starting with "
                    f"'{','.join(_HEADER)}', got '{','.join(header)}'"
                )
            continue
        if row[0].lstrip().startswith("#"):
            continue
        records.append(_parse_row(row, reader.line_num))
    if header is None:
        raise MissingHeaderError("input has no header row")
    return records


def _parse_row(row: Sequence[str], line_num: int) -> MachineRecord:
    if len(row) < len(_HEADER):
        raise MalformedRowError(line_num, f"expected at least {len(_HEADER)} fields, got {len(row)}")
    year_s, rank_s, name, arch_s, cores_s, rmax_s, rpeak_s, bench_s = (
        cell.strip() for cell in row[: len(_HEADER)]
    )
    try:
        year = int(year_s)
        rank = int(rank_s)
        cores = int(cores_s)
        rmax = float(rmax_s)
        rpeak = float(rpeak_s)
    except ValueError as exc:
        raise MalformedRowError(line_num, f"numeric field could not be parsed: {exc}") from exc

    lowered = arch_s.lower()
    if lowered == "mpp":
        arch = Architecture.MPP
    elif lowered == "cluster":
        arch = Architecture.CLUSTER
    else:
        # Anything else (including historical class names) lands in the catch-all.
        arch = Architecture.OTHER

    try:
        benchmark = Benchmark(bench_s.upper())
    except ValueError:
        raise MalformedRowError(line_num, f"benchmark must be HPL or HPCG, got {bench_s!r}") from None

    try:
        return MachineRecord(year, rank, name, arch, cores, rmax, rpeak, benchmark)
    except ValueError as exc:
        raise MalformedRowError(line_num, str(exc)) from exc


def read_records(path: str) -> list[MachineRecord]:
    """Convenience wrapper: parse records from a file path."""
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_records(fh)


def write_records(
    records: Iterable[MachineRecord],
    stream: IO[str],
    comment: str | None = None,
    derived: bool = False,
) -> None:
    """Serialize records to CSV, losslessly (floats use shortest round-trip form).

    With ``derived`` set, two extra columns (efficiency, one_minus_alpha_eff)
    are appended; the required eight stay first so the output still parses.
    """
    writer = csv.writer(stream, lineterminator="\n")
    if comment:
        stream.write(f"# {comment}\n")
    columns = list(_HEADER) + (["efficiency", "one_minus_alpha_eff"] if derived else [])
    writer.writerow(columns)
    for r in records:
        row = [r.year, r.rank, r.name, r.arch.value, r.cores, repr(r.rmax), repr(r.rpeak),
               r.benchmark.value]
        if derived:
            m = derive(r)
            row += [repr(m.efficiency.value), repr(m.one_minus_alpha_eff)]
        writer.writerow(row)


def derive(record: MachineRecord) -> DerivedMetrics:
    """Efficiency rmax/rpeak and the serial fraction it implies at the record's core count."""
    eff = Efficiency(record.rmax / record.rpeak)
    estimate = alpha_eff_from_efficiency(eff, record.cores)
    return DerivedMetrics(efficiency=eff, one_minus_alpha_eff=estimate.one_minus_alpha)


def select_champions(
    records: Iterable[MachineRecord],
    by: ChampionCriterion,
    group: GroupBy = GroupBy.YEAR,
) -> list[MachineRecord]:
    """The best record of each group (per year), groups ascending.

    BEST_RMAX takes the highest measured throughput, BEST_ALPHA the smallest
    derived serial fraction. Ties break toward the lower list rank, then the
    lexicographically smaller name.
    """
    if group is not GroupBy.YEAR:
        raise ValueError(f"unsupported grouping {group!r}")
    groups: dict[int, list[MachineRecord]] = {}
    for r in records:
        groups.setdefault(r.year, []).append(r)

    champions = []
    for year in sorted(groups):
        group = groups[year]
        if by is ChampionCriterion.BEST_RMAX:
            key = lambda r: (-r.rmax, r.rank, r.name)
        else:
            key = lambda r: (derive(r).one_minus_alpha_eff, r.rank, r.name)
        champions.append(min(group, key=key))
    return champions


@dataclass(frozen=True)
class RegressionFit:
    """Least-squares fit of log10(y) against x."""

    slope: float
    intercept: float
    r_squared: float
    n: int


def fit_semilog(points: Iterable[tuple[float, float]]) -> RegressionFit:
    """Ordinary least squares of log10(y) on x, for trend lines on semilog plots.

    Raises:
        NonPositiveValueError: some y is not strictly positive.
        DegenerateDataError: all x are identical, no slope exists.
        ValueError: fewer than two points.
    """
    xs: list[float] = []
    ys: list[float] = []
    for x, y in points:
        if not math.isfinite(y) or y <= 0.0:
            raise NonPositiveValueError(f"cannot take log10 of {y!r}")
        xs.append(float(x))
        ys.append(math.log10(y))
    n = len(xs)
    if n < 2:
        raise ValueError(f"a fit needs at least 2 points, got {n}")

    x_mean = statistics.fmean(xs)
    y_mean = statistics.fmean(ys)
    sxx = sum((x - x_mean) ** 2 for x in xs)
    if sxx == 0.0:
        raise DegenerateDataError("all x values are identical, the slope is undefined")
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean

    ss_res = sum((y - (intercept + slope * x)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - y_mean) ** 2 for y in ys)
    r_squared = 1.0 if ss_tot == 0.0 else min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    return RegressionFit(slope=slope, intercept=intercept, r_squared=r_squared, n=n)


class YearlyEfficiency(NamedTuple):
    year: int
    mean_efficiency: float
    sd_efficiency: float


def yearly_mean_efficiency(
    records: Iterable[MachineRecord],
    top_n: int,
) -> list[YearlyEfficiency]:
    """Mean and population standard deviation of efficiency over each year's top ranks.

    Within a year, records are ordered by list rank and the first ``top_n``
    enter the statistics (all of them when the year has fewer). The standard
    deviation is the population form: these are the complete top-N cohorts,
    not samples from something larger.
    """
    if top_n < 1:
        raise ValueError(f"top_n must be >= 1, got {top_n}")
    groups: dict[int, list[MachineRecord]] = {}
    for r in records:
        groups.setdefault(r.year, []).append(r)

    rows = []
    for year in sorted(groups):
        cohort = sorted(groups[year], key=lambda r: (r.rank, r.name))[:top_n]
        efficiencies = [r.rmax / r.rpeak for r in cohort]
        rows.append(
            YearlyEfficiency(
                year=year,
                mean_efficiency=statistics.fmean(efficiencies),
                sd_efficiency=statistics.pstdev(efficiencies),
            )
        )
    return rows


def fixture_path(name: str) -> str:
    """Filesystem path of a data file shipped with the package."""
    return str(resources.files("amdahl.data").joinpath(name))
