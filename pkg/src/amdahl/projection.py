"""Forward projections: what happens to a machine when it grows.

Every function here takes an effective serial fraction (stored as 1 - alpha)
as ground truth and extrapolates. The model is deliberately pessimistic about
nothing and optimistic about nothing: it assumes the serial fraction stays
fixed unless the caller scales it explicitly.

Throughput values are in Gflop/s throughout, matching the record files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import Efficiency, efficiency_from_alpha, _require_cores, _require_fraction
from .errors import (
    AlphaOverflowError,
    InfeasibleTargetError,
    UnboundedError,
    ZeroBudgetError,
)

__all__ = [
    "CurvePoint",
    "ScalingScenario",
    "ScenarioResult",
    "ContributionBudget",
    "BoundsResult",
    "project_curve",
    "geometric_grid",
    "whatif",
    "required_one_minus_alpha",
    "saturation_rmax",
    "bounds",
    "SPEED_OF_LIGHT_M_PER_S",
]

SPEED_OF_LIGHT_M_PER_S = 2.998e8


class CurvePoint(NamedTuple):
    """One point of a peak-performance sweep."""

    rpeak: float
    cores: int
    efficiency: float
    rmax: float


def geometric_grid(start: float, stop: float, points: int) -> list[float]:
    """Geometrically spaced values from start to stop inclusive."""
    if points < 2:
        raise ValueError(f"a grid needs at least 2 points, got {points}")
    if start <= 0.0 or stop <= 0.0:
        raise ValueError("grid endpoints must be positive")
    ratio = (stop / start) ** (1.0 / (points - 1))
    grid = [start * ratio**i for i in range(points)]
    grid[-1] = stop
    return grid


def project_curve(
    base_cores: int,
    base_rpeak: float,
    one_minus_alpha: float,
    rpeak_grid: Sequence[float],
) -> list[CurvePoint]:
    """Expected measured throughput while growing a machine along its own design.

    Growth is homogeneous: per-core peak stays at base_rpeak / base_cores, so a
    target peak implies a core count (rounded to the nearest integer, floored
    at 1). Efficiency then follows from the serial fraction at that count.
    """
    _require_cores(base_cores, minimum=1)
    _require_fraction(one_minus_alpha, "one_minus_alpha")
    if not math.isfinite(base_rpeak) or base_rpeak <= 0.0:
        raise ValueError(f"base_rpeak must be finite and > 0, got {base_rpeak!r}")

    points = []
    for rp in rpeak_grid:
        if not math.isfinite(rp) or rp <= 0.0:
            raise ValueError(f"grid rpeak must be finite and > 0, got {rp!r}")
        cores = max(1, round(base_cores * rp / base_rpeak))
        eff = efficiency_from_alpha(one_minus_alpha, cores)
        points.append(CurvePoint(rpeak=rp, cores=cores, efficiency=eff.value, rmax=eff.value * rp))
    return points


@dataclass(frozen=True)
class ScalingScenario:
    """A hypothetical upgrade: new size and peak, optionally a new code base.

    Either target may be omitted; the missing one is derived assuming the
    per-core peak stays at base_rpeak / base_cores. alpha_scale_factor
    multiplies the serial fraction: values below 1 model software that
    parallelizes better after the upgrade, values above 1 the common case
    where more of the machine is spent on coordination.
    """

    base_one_minus_alpha: float
    base_cores: int
    alpha_scale_factor: float = 1.0
    base_rpeak: float | None = None
    target_cores: int | None = None
    target_rpeak: float | None = None

    def __post_init__(self) -> None:
        _require_fraction(self.base_one_minus_alpha, "base_one_minus_alpha")
        _require_cores(self.base_cores, minimum=1)
        if not math.isfinite(self.alpha_scale_factor) or self.alpha_scale_factor < 0.0:
            raise ValueError(
                f"alpha_scale_factor must be finite and >= 0, got {self.alpha_scale_factor!r}"
            )
        for label, value in (("base_rpeak", self.base_rpeak), ("target_rpeak", self.target_rpeak)):
            if value is not None and (not math.isfinite(value) or value <= 0.0):
                raise ValueError(f"{label} must be finite and > 0, got {value!r}")
        if self.target_cores is not None:
            _require_cores(self.target_cores, minimum=1)
        if self.target_cores is None and self.target_rpeak is None:
            raise ValueError("a scenario needs target_cores, target_rpeak, or both")
        if (self.target_cores is None or self.target_rpeak is None) and self.base_rpeak is None:
            raise ValueError(
                "base_rpeak is required to derive the missing target from the per-core peak"
            )

    @property
    def resolved_target_cores(self) -> int:
        if self.target_cores is not None:
            return self.target_cores
        return max(1, round(self.base_cores * self.target_rpeak / self.base_rpeak))

    @property
    def resolved_target_rpeak(self) -> float:
        if self.target_rpeak is not None:
            return self.target_rpeak
        return self.target_cores * (self.base_rpeak / self.base_cores)


class ScenarioResult(NamedTuple):
    one_minus_alpha: float
    efficiency: Efficiency
    rmax: float


def whatif(scenario: ScalingScenario) -> ScenarioResult:
    """Evaluate a scaling scenario.

    Raises:
        AlphaOverflowError: the scaled serial fraction exceeds 1, meaning the
            scenario left the model's domain.
    """
    scaled = scenario.base_one_minus_alpha * scenario.alpha_scale_factor
    if scaled > 1.0:
        raise AlphaOverflowError(
            f"scaled serial fraction {scaled!r} exceeds 1 "
            f"(base {scenario.base_one_minus_alpha!r} x {scenario.alpha_scale_factor!r})"
        )
    eff = efficiency_from_alpha(scaled, scenario.resolved_target_cores)
    return ScenarioResult(
        one_minus_alpha=scaled,
        efficiency=eff,
        rmax=eff.value * scenario.resolved_target_rpeak,
    )


def required_one_minus_alpha(target_efficiency: float | Efficiency, cores: int) -> float:
    """The serial fraction a code must stay under to hit an efficiency at a core count.

    Raises:
        InfeasibleTargetError: the target efficiency is below 1/cores, which no
            serial fraction in [0, 1] can satisfy.
    """
    eff = target_efficiency if isinstance(target_efficiency, Efficiency) else Efficiency(target_efficiency)
    _require_cores(cores, minimum=2)
    required = eff.inverse_excess / (cores - 1)
    if required > 1.0:
        raise InfeasibleTargetError(
            f"efficiency {eff.value!r} at {cores} cores needs a serial fraction of "
            f"{required!r}, above the whole runtime"
        )
    return required


def saturation_rmax(per_processor_rpeak: float, one_minus_alpha: float) -> float:
    """Measured-throughput ceiling as the machine grows without bound.

    Adding processors at fixed per-processor peak drives rmax toward
    per_processor_rpeak / (1 - alpha): past a certain size the serial
    fraction eats every further processor.

    Raises:
        UnboundedError: the serial fraction is zero, there is no ceiling.
    """
    if not math.isfinite(per_processor_rpeak) or per_processor_rpeak <= 0.0:
        raise ValueError(
            f"per_processor_rpeak must be finite and > 0, got {per_processor_rpeak!r}"
        )
    _require_fraction(one_minus_alpha, "one_minus_alpha")
    if one_minus_alpha == 0.0:
        raise UnboundedError("serial fraction is zero, throughput grows without bound")
    return per_processor_rpeak / one_minus_alpha


@dataclass(frozen=True)
class ContributionBudget:
    """Cycle budget of everything that cannot parallelize, for a bound on 1 - alpha.

    Cycle counts are per run of total_time_s on a clock_hz machine. The
    physical term converts the round trip across physical_size_m at the speed
    of light into cycles; it is the one contribution no engineering removes.
    """

    clock_hz: float
    total_time_s: float
    hardware_cycles: float = 0.0
    os_cycles: float = 0.0
    software_cycles: float = 0.0
    physical_size_m: float = 0.0
    per_processor_flops: float | None = None

    def __post_init__(self) -> None:
        for label, value in (
            ("clock_hz", self.clock_hz),
            ("total_time_s", self.total_time_s),
        ):
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError(f"{label} must be finite and > 0, got {value!r}")
        for label, value in (
            ("hardware_cycles", self.hardware_cycles),
            ("os_cycles", self.os_cycles),
            ("software_cycles", self.software_cycles),
            ("physical_size_m", self.physical_size_m),
        ):
            if not math.isfinite(value) or value < 0.0:
                raise ValueError(f"{label} must be finite and >= 0, got {value!r}")
        if self.per_processor_flops is not None and (
            not math.isfinite(self.per_processor_flops) or self.per_processor_flops <= 0.0
        ):
            raise ValueError(
                f"per_processor_flops must be finite and > 0, got {self.per_processor_flops!r}"
            )


@dataclass(frozen=True)
class BoundsResult:
    total_cycles: float
    propagation_cycles: float
    contributed_cycles: float
    min_one_minus_alpha: float
    max_speedup: float
    saturation_flops: float | None
    breakdown: dict[str, float]


def bounds(budget: ContributionBudget) -> BoundsResult:
    """Lower bound on 1 - alpha from a budget of inherently serial cycles.

    The bound is the contributed cycles over the run's total cycles; its
    reciprocal bounds speedup, and with a per-processor rate it also bounds
    sustained throughput via the saturation ceiling.

    Raises:
        ZeroBudgetError: every contribution is zero, no bound follows.
    """
    total_cycles = budget.clock_hz * budget.total_time_s
    propagation_cycles = (
        2.0 * budget.physical_size_m / SPEED_OF_LIGHT_M_PER_S
    ) * budget.clock_hz
    parts = {
        "hardware": budget.hardware_cycles,
        "os": budget.os_cycles,
        "software": budget.software_cycles,
        "propagation": propagation_cycles,
    }
    contributed = math.fsum(parts.values())
    if contributed == 0.0:
        raise ZeroBudgetError("all serial contributions are zero, no bound follows")

    min_oma = contributed / total_cycles
    saturation = (
        None
        if budget.per_processor_flops is None
        else budget.per_processor_flops / min_oma
    )
    return BoundsResult(
        total_cycles=total_cycles,
        propagation_cycles=propagation_cycles,
        contributed_cycles=contributed,
        min_one_minus_alpha=min_oma,
        max_speedup=1.0 / min_oma,
        saturation_flops=saturation,
        breakdown={k: v / contributed for k, v in parts.items()},
    )
