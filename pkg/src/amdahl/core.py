"""Closed-form scaling relations between parallel fraction, speedup, and efficiency.

The model is the classic one: a program with parallel fraction alpha run on k
processors has speedup S(k) = 1 / ((1 - alpha) + alpha / k). Everything in this
module is an algebraic rearrangement of that relation, evaluated carefully.

Two conventions keep the numerics honest at the scales that matter (serial
fractions of 1e-7 and below on millions of cores):

* The canonical stored quantity is ``one_minus_alpha``, never alpha itself.
  Near-perfect parallelization packs all its information into digits that
  ``1 - alpha`` would destroy.
* Inversions subtract before they divide: (k - S) / ((k - 1) * S) rather than
  1 minus the textbook alpha expression, which cancels catastrophically when
  S approaches k.

Efficiency carries ``inverse_excess`` (1/E - 1) alongside its plain value for
the same reason. An efficiency produced by the forward model remembers that
quantity exactly, so inverting it recovers the parallel fraction to a few ulp
even where 1 - E is below the resolution of a double next to 1.0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateCoresError,
    InconsistentMeasurementsError,
    SuperlinearError,
    UnboundedError,
)

__all__ = [
    "EstimationMethod",
    "AlphaEstimate",
    "Speedup",
    "Efficiency",
    "speedup_from_alpha",
    "efficiency_from_alpha",
    "alpha_eff_from_speedup",
    "alpha_eff_from_efficiency",
    "alpha_from_two_efficiencies",
    "alpha_from_two_timings",
    "max_speedup",
]

# Slack applied when a computed fraction lands a few ulp above an exact
# boundary (e.g. efficiency measured exactly at 1/k). Values beyond the slack
# are genuine precondition violations, not rounding.
_BOUNDARY_SLACK = 1e-12


class EstimationMethod(Enum):
    """How a parallel-fraction estimate was obtained."""

    FROM_SPEEDUP = "speedup"
    FROM_EFFICIENCY = "efficiency"
    TWO_POINT_SLOPE = "two-point-slope"
    TWO_TIMINGS = "two-timings"
    SIMULATED = "simulated"
    ASSUMED = "assumed"


@dataclass(frozen=True)
class AlphaEstimate:
    """An estimated serial fraction ``1 - alpha_eff`` with its provenance.

    ``cores`` is the processor count the estimate was derived at, when a
    single count applies (two-point estimators leave it None).
    """

    one_minus_alpha: float
    method: EstimationMethod
    cores: int | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.one_minus_alpha) or not 0.0 <= self.one_minus_alpha <= 1.0:
            raise ValueError(
                f"one_minus_alpha must lie in [0, 1], got {self.one_minus_alpha!r}"
            )
        if self.cores is not None and self.cores < 1:
            raise ValueError(f"cores must be >= 1, got {self.cores!r}")

    @property
    def alpha(self) -> float:
        """The parallel fraction itself; lossy near 1, prefer one_minus_alpha."""
        return 1.0 - self.one_minus_alpha


@dataclass(frozen=True)
class Speedup:
    """A measured or modeled wall-clock speedup (dimensionless, > 0)."""

    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value <= 0.0:
            raise ValueError(f"speedup must be a finite positive number, got {self.value!r}")


@dataclass(frozen=True)
class Efficiency:
    """Parallel efficiency E = S / k, in (0, 1].

    ``inverse_excess`` is 1/E - 1. For a measured efficiency it is derived
    from ``value`` and adds nothing; for an efficiency built by
    :func:`efficiency_from_alpha` it is the exact product (k - 1) * (1 - alpha)
    and preserves information that the rounded ``value`` cannot hold when E is
    within a few ulp of 1.
    """

    value: float
    inverse_excess: float | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value <= 0.0:
            raise ValueError(f"efficiency must be a finite positive number, got {self.value!r}")
        if self.value > 1.0:
            raise SuperlinearError(
                f"superlinear measurement outside model: efficiency {self.value!r} exceeds 1"
            )
        if self.inverse_excess is None:
            object.__setattr__(self, "inverse_excess", (1.0 - self.value) / self.value)
        elif self.inverse_excess < 0.0 or not math.isfinite(self.inverse_excess):
            raise ValueError(f"inverse_excess must be >= 0, got {self.inverse_excess!r}")
        elif abs(self.value * (1.0 + self.inverse_excess) - 1.0) > 1e-9:
            raise ValueError(
                f"inverse_excess {self.inverse_excess!r} is inconsistent with value {self.value!r}"
            )


def _coerce_efficiency(e: float | Efficiency) -> Efficiency:
    return e if isinstance(e, Efficiency) else Efficiency(float(e))


def _coerce_speedup(s: float | Speedup) -> Speedup:
    return s if isinstance(s, Speedup) else Speedup(float(s))


def _require_cores(cores: int, minimum: int) -> None:
    if cores < minimum:
        if minimum >= 2:
            raise DegenerateCoresError(
                f"needs at least {minimum} processors to invert, got {cores}"
            )
        raise ValueError(f"cores must be >= {minimum}, got {cores}")


def _require_fraction(one_minus_alpha: float, name: str = "one_minus_alpha") -> None:
    if not math.isfinite(one_minus_alpha) or not 0.0 <= one_minus_alpha <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {one_minus_alpha!r}")


def _snap_to_unit(x: float) -> float:
    """Clamp a fraction that rounding pushed just past 1 back onto the boundary."""
    if 1.0 < x <= 1.0 + _BOUNDARY_SLACK:
        return 1.0
    return x


def speedup_from_alpha(one_minus_alpha: float, cores: int) -> Speedup:
    """Forward model: the speedup of a (1 - alpha) serial fraction on ``cores`` processors."""
    _require_cores(cores, 1)
    _require_fraction(one_minus_alpha)
    s = 1.0 / (one_minus_alpha + (1.0 - one_minus_alpha) / cores)
    # The model guarantees S <= k; spare callers the occasional half-ulp excess.
    return Speedup(min(s, float(cores)))


def efficiency_from_alpha(one_minus_alpha: float, cores: int) -> Efficiency:
    """Forward model: efficiency E = S/k, carrying its exact inverse excess.

    Evaluates 1 / (k * (1 - alpha) + alpha) in the equivalent grouping
    1 / (1 + (k - 1) * (1 - alpha)), whose denominator excess is exact.
    """
    _require_cores(cores, 1)
    _require_fraction(one_minus_alpha)
    excess = (cores - 1) * one_minus_alpha
    return Efficiency(value=1.0 / (1.0 + excess), inverse_excess=excess)


def alpha_eff_from_speedup(speedup: float | Speedup, cores: int) -> AlphaEstimate:
    """Invert a measured speedup on ``cores`` processors into ``1 - alpha_eff``.

    Uses the subtraction-first form (k - S) / ((k - 1) * S). The boundary
    S = 1 (no speedup at all) maps to one_minus_alpha = 1 without error.

    Raises:
        DegenerateCoresError: fewer than 2 processors, inversion undefined.
        SuperlinearError: S > k, outside the model.
        ValueError: S < 1 (a slowdown, which the model cannot express).
    """
    s = _coerce_speedup(speedup).value
    _require_cores(cores, 2)
    if s > cores:
        raise SuperlinearError(
            f"superlinear speedup outside model: {s!r} exceeds processor count {cores}"
        )
    if s < 1.0:
        raise ValueError(f"speedup below 1 is a slowdown the model cannot express: {s!r}")
    one_minus = _snap_to_unit((cores - s) / ((cores - 1) * s))
    return AlphaEstimate(one_minus, EstimationMethod.FROM_SPEEDUP, cores)


def alpha_eff_from_efficiency(efficiency: float | Efficiency, cores: int) -> AlphaEstimate:
    """Invert a measured efficiency on ``cores`` processors into ``1 - alpha_eff``.

    Algebraically (1 - E) / (E * (k - 1)), evaluated as (1/E - 1) / (k - 1) so
    that model-generated efficiencies invert exactly. The boundary E = 1/k
    maps to one_minus_alpha = 1 without error.

    Raises:
        DegenerateCoresError: fewer than 2 processors.
        SuperlinearError: E > 1 (raised when the Efficiency is constructed).
        ValueError: E < 1/k, which would be a slowdown.
    """
    e = _coerce_efficiency(efficiency)
    _require_cores(cores, 2)
    one_minus = _snap_to_unit(e.inverse_excess / (cores - 1))
    if one_minus > 1.0:
        raise ValueError(
            f"efficiency {e.value!r} is below 1/{cores}, a slowdown the model cannot express"
        )
    return AlphaEstimate(one_minus, EstimationMethod.FROM_EFFICIENCY, cores)


def alpha_from_two_efficiencies(
    e1: float | Efficiency,
    k1: int,
    e2: float | Efficiency,
    k2: int,
) -> AlphaEstimate:
    """Estimate ``1 - alpha`` from efficiencies measured at two processor counts.

    In the model 1/E(k) is affine in k with slope exactly (1 - alpha), so the
    estimate is the two-point slope (1/E2 - 1/E1) / (k2 - k1).

    Raises:
        InconsistentMeasurementsError: the slope is negative or >= 1, meaning
            no parallel fraction in (0, 1] explains both measurements.
    """
    ea, eb = _coerce_efficiency(e1), _coerce_efficiency(e2)
    _require_cores(k1, 1)
    _require_cores(k2, 1)
    if k1 == k2:
        raise ValueError("the two measurements must use different processor counts")
    slope = (eb.inverse_excess - ea.inverse_excess) / (k2 - k1)
    if slope < 0.0 or slope >= 1.0:
        raise InconsistentMeasurementsError(
            f"two-point slope {slope!r} admits no parallel fraction in (0, 1]"
        )
    return AlphaEstimate(slope, EstimationMethod.TWO_POINT_SLOPE, None)


def alpha_from_two_timings(t1: float, k1: int, t2: float, k2: int) -> AlphaEstimate:
    """Estimate ``1 - alpha`` from wall-clock times at two processor counts.

    Solves t1/t2 = ((1-a) + a/k1) / ((1-a) + a/k2) for the serial fraction.
    k1 = 1 is allowed (and is the best-conditioned baseline).

    Raises:
        InconsistentMeasurementsError: the timing ratio has no solution with
            a serial fraction in [0, 1].
    """
    _require_cores(k1, 1)
    _require_cores(k2, 1)
    if k1 == k2:
        raise ValueError("the two timings must use different processor counts")
    if not math.isfinite(t1) or t1 <= 0.0 or not math.isfinite(t2) or t2 <= 0.0:
        raise ValueError(f"timings must be finite positive numbers, got {t1!r} and {t2!r}")
    ratio = t1 / t2
    # T(k) is proportional to x * (1 - 1/k) + 1/k with x = 1 - alpha.
    numer = ratio / k2 - 1.0 / k1
    denom = (1.0 - 1.0 / k1) - ratio * (1.0 - 1.0 / k2)
    if denom == 0.0:
        raise InconsistentMeasurementsError(
            f"timing ratio {ratio!r} at counts {k1} and {k2} has no finite solution"
        )
    x = _snap_to_unit(numer / denom)
    if not 0.0 <= x <= 1.0:
        raise InconsistentMeasurementsError(
            f"timing ratio {ratio!r} at counts {k1} and {k2} implies serial fraction {x!r}"
        )
    return AlphaEstimate(x, EstimationMethod.TWO_TIMINGS, None)


def max_speedup(one_minus_alpha: float) -> float:
    """The asymptotic speedup limit 1 / (1 - alpha) for infinitely many processors."""
    _require_fraction(one_minus_alpha)
    if one_minus_alpha == 0.0:
        raise UnboundedError("a perfectly parallel program has no finite speedup limit")
    return 1.0 / one_minus_alpha
