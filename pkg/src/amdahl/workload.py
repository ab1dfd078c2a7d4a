"""Deterministic execution-timeline simulation of sequential/parallel workloads.

A workload is an ordered list of phases executed on k processors:

* a sequential phase runs on processor 0 while the others idle;
* a parallel phase optionally pays a dispatch overhead on processor 0, then
  places its chunks one by one on whichever processor frees up first (ties go
  to the lowest index), and after the last chunk finishes optionally pays a
  collect overhead, again on processor 0.

Chunks may outnumber processors; the greedy placement then packs them into
multiple rounds. Waiting time is never an input: it emerges wherever a
processor has nothing to do.

The serial baseline used for speedup is the same work run on one processor
with no dispatch or collect overheads (those exist only because of the
parallel organization). The effective parallel fraction reported for a run is
the value that plugs the measured speedup back into the scaling model at the
same processor count.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Iterable, NamedTuple, Union

from .core import AlphaEstimate, EstimationMethod, Speedup
from .errors import InvalidTemplateError, InvalidWorkloadError

__all__ = [
    "SequentialPhase",
    "ParallelPhase",
    "Phase",
    "WorkloadSpec",
    "TimelineSegment",
    "ScheduleResult",
    "SweepPoint",
    "simulate",
    "sweep_alpha_eff",
    "load_workload",
]


@dataclass(frozen=True)
class SequentialPhase:
    duration: float


@dataclass(frozen=True)
class ParallelPhase:
    chunks: tuple[float, ...]
    dispatch_overhead: float = 0.0
    collect_overhead: float = 0.0


Phase = Union[SequentialPhase, ParallelPhase]


@dataclass(frozen=True)
class WorkloadSpec:
    """A processor count plus the ordered phases to run on it."""

    processors: int
    phases: tuple[Phase, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.processors, int) or isinstance(self.processors, bool):
            raise InvalidWorkloadError(f"processors must be an integer, got {self.processors!r}")
        if self.processors < 1:
            raise InvalidWorkloadError(f"processors must be >= 1, got {self.processors}")
        object.__setattr__(self, "phases", tuple(self.phases))
        if not self.phases:
            raise InvalidWorkloadError("a workload needs at least one phase")
        for i, phase in enumerate(self.phases, 1):
            _validate_phase(phase, i)


def _validate_phase(phase: Phase, index: int) -> None:
    if isinstance(phase, SequentialPhase):
        if not _positive(phase.duration):
            raise InvalidWorkloadError(
                f"phase {index}: sequential duration must be finite and > 0, "
                f"got {phase.duration!r}"
            )
    elif isinstance(phase, ParallelPhase):
        if not phase.chunks:
            raise InvalidWorkloadError(f"phase {index}: a parallel phase needs at least one chunk")
        for j, c in enumerate(phase.chunks, 1):
            if not _positive(c):
                raise InvalidWorkloadError(
                    f"phase {index}: chunk {j} must be finite and > 0, got {c!r}"
                )
        for name, ov in (("dispatch", phase.dispatch_overhead), ("collect", phase.collect_overhead)):
            if not _nonnegative(ov):
                raise InvalidWorkloadError(
                    f"phase {index}: {name} overhead must be finite and >= 0, got {ov!r}"
                )
    else:
        raise InvalidWorkloadError(f"phase {index}: unknown phase object {phase!r}")


def _positive(x: object) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x) and x > 0


def _nonnegative(x: object) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x) and x >= 0


class TimelineSegment(NamedTuple):
    """One contiguous busy interval of one processor."""

    processor: int
    start: float
    end: float
    label: str


@dataclass(frozen=True)
class ScheduleResult:
    """Everything measured from one simulated run.

    ``serial_time`` excludes dispatch/collect overheads; ``parallel_time`` is
    the simulated makespan including them. ``alpha_eff`` is None on a single
    processor, and also when overheads push the measured speedup below 1,
    where no parallel fraction in [0, 1] reproduces the run.
    """

    serial_time: float
    parallel_time: float
    speedup: Speedup
    alpha_eff: AlphaEstimate | None
    per_processor_busy: tuple[float, ...]
    per_processor_idle: tuple[float, ...]
    timeline: tuple[TimelineSegment, ...]


def simulate(workload: WorkloadSpec) -> ScheduleResult:
    """Run the greedy schedule and measure it. See the module docstring for semantics."""
    k = workload.processors
    busy = [0.0] * k
    timeline: list[TimelineSegment] = []
    clock = 0.0
    serial_chunks = 0.0
    serial_seq = 0.0

    for index, phase in enumerate(workload.phases, 1):
        if isinstance(phase, SequentialPhase):
            timeline.append(TimelineSegment(0, clock, clock + phase.duration, f"seq{index}"))
            busy[0] += phase.duration
            serial_seq += phase.duration
            clock += phase.duration
            continue

        if phase.dispatch_overhead > 0.0:
            timeline.append(
                TimelineSegment(0, clock, clock + phase.dispatch_overhead, f"dispatch{index}")
            )
            busy[0] += phase.dispatch_overhead
            clock += phase.dispatch_overhead

        free = [clock] * k
        for j, chunk in enumerate(phase.chunks, 1):
            p = min(range(k), key=free.__getitem__)
            timeline.append(TimelineSegment(p, free[p], free[p] + chunk, f"chunk{index}.{j}"))
            busy[p] += chunk
            free[p] += chunk
            serial_chunks += chunk
        clock = max(free)

        if phase.collect_overhead > 0.0:
            timeline.append(
                TimelineSegment(0, clock, clock + phase.collect_overhead, f"collect{index}")
            )
            busy[0] += phase.collect_overhead
            clock += phase.collect_overhead

    serial_time = serial_seq + serial_chunks
    parallel_time = clock
    speedup = Speedup(serial_time / parallel_time)

    alpha: AlphaEstimate | None = None
    if k >= 2 and speedup.value >= 1.0:
        one_minus = (k - speedup.value) / ((k - 1) * speedup.value)
        alpha = AlphaEstimate(min(max(one_minus, 0.0), 1.0), EstimationMethod.SIMULATED, k)

    idle = tuple(max(0.0, parallel_time - b) for b in busy)
    return ScheduleResult(
        serial_time=serial_time,
        parallel_time=parallel_time,
        speedup=speedup,
        alpha_eff=alpha,
        per_processor_busy=tuple(busy),
        per_processor_idle=idle,
        timeline=tuple(timeline),
    )


class SweepPoint(NamedTuple):
    """One grid point of a sweep; one_minus_alpha_eff is None where speedup < 1."""

    overhead_ratio: float
    sequential_ratio: float
    one_minus_alpha_eff: float | None


def sweep_alpha_eff(
    processors: int,
    template: WorkloadSpec,
    overhead_ratios: Iterable[float],
    sequential_ratios: Iterable[float],
) -> list[SweepPoint]:
    """Map how the effective parallel fraction degrades with overhead and serial work.

    The template must contain exactly one parallel phase. At each grid point
    the template is rescaled and simulated on ``processors`` processors:

    * total overhead (dispatch + collect) is set to overhead_ratio times the
      largest chunk, split like the template's own overheads (evenly when the
      template has none);
    * every sequential duration is multiplied by sequential_ratio, measured
      against the template's own sequential time (ratio 1 keeps it, ratio 0
      removes the sequential phases entirely).

    Grid points are emitted with the overhead ratio as the outer loop.
    """
    if processors < 2:
        raise ValueError("a sweep needs at least 2 processors to define alpha_eff")
    parallel_phases = [p for p in template.phases if isinstance(p, ParallelPhase)]
    if len(parallel_phases) != 1:
        raise InvalidTemplateError(
            f"sweep template must have exactly one parallel phase, found {len(parallel_phases)}"
        )
    base = parallel_phases[0]
    max_chunk = max(base.chunks)
    base_total = base.dispatch_overhead + base.collect_overhead
    dispatch_share = base.dispatch_overhead / base_total if base_total > 0.0 else 0.5

    overhead_ratios = list(overhead_ratios)
    sequential_ratios = list(sequential_ratios)
    for r in overhead_ratios + sequential_ratios:
        if not _nonnegative(r):
            raise ValueError(f"sweep ratios must be finite and >= 0, got {r!r}")

    points: list[SweepPoint] = []
    for ov in overhead_ratios:
        total = ov * max_chunk
        scaled_parallel = ParallelPhase(
            chunks=base.chunks,
            dispatch_overhead=total * dispatch_share,
            collect_overhead=total * (1.0 - dispatch_share),
        )
        for seq in sequential_ratios:
            phases: list[Phase] = []
            for phase in template.phases:
                if isinstance(phase, SequentialPhase):
                    if seq > 0.0:
                        phases.append(SequentialPhase(phase.duration * seq))
                else:
                    phases.append(scaled_parallel)
            result = simulate(WorkloadSpec(processors, tuple(phases)))
            one_minus = result.alpha_eff.one_minus_alpha if result.alpha_eff else None
            points.append(SweepPoint(ov, seq, one_minus))
    return points


def load_workload(source: IO[str]) -> WorkloadSpec:
    """Parse a workload from its JSON description.

    Expected shape::

        {"processors": 3,
         "phases": [{"type": "sequential", "duration": 1.5},
                    {"type": "parallel", "dispatch": 0.5, "collect": 1.0,
                     "chunks": [2.5, 2.0, 3.0]}]}

    ``dispatch`` and ``collect`` default to 0 when omitted.
    """
    try:
        doc = json.load(source)
    except json.JSONDecodeError as exc:
        raise InvalidWorkloadError(f"workload file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidWorkloadError("workload file must contain a JSON object")

    processors = doc.get("processors")
    if not isinstance(processors, int) or isinstance(processors, bool):
        raise InvalidWorkloadError(f"'processors' must be an integer, got {processors!r}")
    raw_phases = doc.get("phases")
    if not isinstance(raw_phases, list) or not raw_phases:
        raise InvalidWorkloadError("'phases' must be a non-empty array")

    phases: list[Phase] = []
    for i, item in enumerate(raw_phases, 1):
        if not isinstance(item, dict):
            raise InvalidWorkloadError(f"phase {i} must be an object, got {item!r}")
        kind = item.get("type")
        if kind == "sequential":
            phases.append(SequentialPhase(_number(item, "duration", i)))
        elif kind == "parallel":
            chunks = item.get("chunks")
            if not isinstance(chunks, list) or not chunks:
                raise InvalidWorkloadError(f"phase {i}: 'chunks' must be a non-empty array")
            converted = []
            for j, c in enumerate(chunks, 1):
                if not isinstance(c, (int, float)) or isinstance(c, bool) or not math.isfinite(c):
                    raise InvalidWorkloadError(
                        f"phase {i}: chunk {j} must be a finite number, got {c!r}"
                    )
                converted.append(float(c))
            phases.append(
                ParallelPhase(
                    chunks=tuple(converted),
                    dispatch_overhead=_number(item, "dispatch", i, default=0.0),
                    collect_overhead=_number(item, "collect", i, default=0.0),
                )
            )
        else:
            raise InvalidWorkloadError(
                f"phase {i}: 'type' must be 'sequential' or 'parallel', got {kind!r}"
            )
    return WorkloadSpec(processors, tuple(phases))


def _number(item: dict, key: str, index: int, default: float | None = None) -> float:
    value = item.get(key, default)
    if isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value):
        return float(value)
    raise InvalidWorkloadError(f"phase {index}: '{key}' must be a finite number, got {value!r}")
