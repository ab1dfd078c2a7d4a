"""Tests for scaling projections, what-if scenarios, and serial-cycle bounds."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from amdahl.core import efficiency_from_alpha
from amdahl.projection import (
    SPEED_OF_LIGHT_M_PER_S,
    ContributionBudget,
    ScalingScenario,
    bounds,
    geometric_grid,
    project_curve,
    required_one_minus_alpha,
    saturation_rmax,
    whatif,
)
from amdahl.errors import (
    AlphaOverflowError,
    DegenerateCoresError,
    InfeasibleTargetError,
    UnboundedError,
    ZeroBudgetError,
)

fractions = st.floats(min_value=1e-12, max_value=1.0, allow_nan=False)
core_counts = st.integers(min_value=2, max_value=10**7)


class TestGeometricGrid:
    def test_endpoints_and_spacing(self):
        grid = geometric_grid(1.0, 1000.0, 4)
        assert grid[0] == 1.0
        assert grid[-1] == 1000.0
        assert grid[1] == pytest.approx(10.0, rel=1e-12)
        assert grid[2] == pytest.approx(100.0, rel=1e-12)

    def test_two_points_are_just_the_endpoints(self):
        assert geometric_grid(5.0, 7.0, 2) == [5.0, 7.0]

    def test_validation(self):
        with pytest.raises(ValueError):
            geometric_grid(1.0, 10.0, 1)
        with pytest.raises(ValueError):
            geometric_grid(0.0, 10.0, 3)
        with pytest.raises(ValueError):
            geometric_grid(1.0, -10.0, 3)


class TestProjectCurve:
    def test_base_point_reproduces_starting_efficiency(self):
        base_cores, base_rpeak, oma = 10649600, 125000000.0, 3.273e-8
        (point,) = project_curve(base_cores, base_rpeak, oma, [base_rpeak])
        assert point.cores == base_cores
        expected = efficiency_from_alpha(oma, base_cores).value
        assert point.efficiency == pytest.approx(expected, rel=1e-12)
        assert point.rmax == pytest.approx(expected * base_rpeak, rel=1e-12)

    def test_cores_track_peak_homogeneously(self):
        points = project_curve(1000, 100.0, 0.01, [100.0, 200.0, 1000.0])
        assert [p.cores for p in points] == [1000, 2000, 10000]

    def test_tiny_target_floors_at_one_core(self):
        (point,) = project_curve(1000, 100.0, 0.01, [0.001])
        assert point.cores == 1
        assert point.efficiency == 1.0

    def test_perfectly_parallel_code_keeps_unit_efficiency(self):
        points = project_curve(100, 1.0, 0.0, geometric_grid(1.0, 1e6, 5))
        assert all(p.efficiency == 1.0 for p in points)
        assert all(p.rmax == p.rpeak for p in points)

    def test_efficiency_falls_and_rmax_rises_monotonically(self):
        grid = geometric_grid(0.125e9, 1e9, 16)
        points = project_curve(10649600, 0.125e9, 3.273e-8, grid)
        for a, b in zip(points, points[1:]):
            assert b.efficiency <= a.efficiency + 1e-15
            assert b.rmax >= a.rmax - 1e-6

    def test_rmax_respects_saturation_ceiling(self):
        base_cores, base_rpeak, oma = 1000, 1000.0, 1e-3
        ceiling = saturation_rmax(base_rpeak / base_cores, oma)
        points = project_curve(base_cores, base_rpeak, oma, geometric_grid(1e3, 1e12, 20))
        assert all(p.rmax <= ceiling * (1.0 + 1e-12) for p in points)

    def test_rmax_close_to_ceiling_when_cores_dominate(self):
        # Once cores * (1 - alpha) passes 100 the curve is within 1 percent
        # of the ceiling: the machine is deep into saturation.
        base_cores, base_rpeak, oma = 1000, 1000.0, 1e-3
        ceiling = saturation_rmax(base_rpeak / base_cores, oma)
        for rp in (2e5, 1e6, 1e9):
            (point,) = project_curve(base_cores, base_rpeak, oma, [rp])
            assert point.cores * oma > 100.0
            assert point.rmax == pytest.approx(ceiling, rel=1e-2)

    def test_validation(self):
        with pytest.raises(ValueError):
            project_curve(0, 100.0, 0.01, [1.0])
        with pytest.raises(ValueError):
            project_curve(10, -5.0, 0.01, [1.0])
        with pytest.raises(ValueError):
            project_curve(10, 100.0, 1.5, [1.0])
        with pytest.raises(ValueError):
            project_curve(10, 100.0, 0.01, [1.0, 0.0])

    @given(fractions, fractions, core_counts)
    def test_smaller_serial_fraction_never_hurts(self, a, b, base_cores):
        low, high = sorted((a, b))
        grid = [10.0, 1000.0, 100000.0]
        better = project_curve(base_cores, 100.0, low, grid)
        worse = project_curve(base_cores, 100.0, high, grid)
        for p_better, p_worse in zip(better, worse):
            assert p_better.rmax >= p_worse.rmax - 1e-9


class TestScenario:
    def test_requires_some_target(self):
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=0.1, base_cores=100)

    def test_single_target_needs_base_rpeak(self):
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=0.1, base_cores=100, target_cores=200)
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=0.1, base_cores=100, target_rpeak=2000.0)

    def test_derives_missing_rpeak_from_per_core_peak(self):
        scenario = ScalingScenario(
            base_one_minus_alpha=0.1,
            base_cores=100,
            base_rpeak=1000.0,
            target_cores=250,
        )
        assert scenario.resolved_target_cores == 250
        assert scenario.resolved_target_rpeak == pytest.approx(2500.0, rel=1e-15)

    def test_derives_missing_cores_from_per_core_peak(self):
        scenario = ScalingScenario(
            base_one_minus_alpha=0.1,
            base_cores=100,
            base_rpeak=1000.0,
            target_rpeak=2499.0,
        )
        assert scenario.resolved_target_cores == 250
        assert scenario.resolved_target_rpeak == 2499.0

    def test_both_targets_need_no_base_rpeak(self):
        scenario = ScalingScenario(
            base_one_minus_alpha=0.1,
            base_cores=100,
            target_cores=200,
            target_rpeak=4000.0,
        )
        assert scenario.resolved_target_cores == 200
        assert scenario.resolved_target_rpeak == 4000.0

    def test_validation(self):
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=-0.1, base_cores=10, target_cores=20,
                            target_rpeak=1.0)
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=0.1, base_cores=0, target_cores=20,
                            target_rpeak=1.0)
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=0.1, base_cores=10, target_cores=20,
                            target_rpeak=1.0, alpha_scale_factor=-1.0)
        with pytest.raises(ValueError):
            ScalingScenario(base_one_minus_alpha=0.1, base_cores=10, target_cores=20,
                            target_rpeak=math.inf)


class TestWhatif:
    def test_identity_scenario_changes_nothing(self):
        scenario = ScalingScenario(
            base_one_minus_alpha=0.02,
            base_cores=512,
            target_cores=512,
            target_rpeak=1000.0,
        )
        result = whatif(scenario)
        assert result.one_minus_alpha == 0.02
        expected = efficiency_from_alpha(0.02, 512).value
        assert result.efficiency.value == expected
        assert result.rmax == expected * 1000.0

    def test_alpha_scale_multiplies_serial_fraction(self):
        base = ScalingScenario(
            base_one_minus_alpha=0.001, base_cores=1000,
            target_cores=4000, target_rpeak=4000.0,
        )
        doubled = ScalingScenario(
            base_one_minus_alpha=0.001, base_cores=1000, alpha_scale_factor=2.0,
            target_cores=4000, target_rpeak=4000.0,
        )
        assert whatif(doubled).one_minus_alpha == pytest.approx(0.002, rel=1e-15)
        assert whatif(doubled).rmax < whatif(base).rmax

    def test_zero_scale_is_perfect_parallelism(self):
        scenario = ScalingScenario(
            base_one_minus_alpha=0.5, base_cores=10, alpha_scale_factor=0.0,
            target_cores=100, target_rpeak=500.0,
        )
        result = whatif(scenario)
        assert result.one_minus_alpha == 0.0
        assert result.efficiency.value == 1.0
        assert result.rmax == 500.0

    def test_overflow_leaves_the_model(self):
        scenario = ScalingScenario(
            base_one_minus_alpha=0.5, base_cores=10, alpha_scale_factor=3.0,
            target_cores=100, target_rpeak=500.0,
        )
        with pytest.raises(AlphaOverflowError):
            whatif(scenario)

    @given(fractions, st.floats(min_value=0.0, max_value=1.0), core_counts)
    def test_more_serial_fraction_never_helps(self, base_oma, factor, cores):
        reference = ScalingScenario(
            base_one_minus_alpha=base_oma, base_cores=cores,
            target_cores=cores * 4, target_rpeak=1000.0,
        )
        relaxed = ScalingScenario(
            base_one_minus_alpha=base_oma, base_cores=cores, alpha_scale_factor=factor,
            target_cores=cores * 4, target_rpeak=1000.0,
        )
        assert whatif(relaxed).rmax >= whatif(reference).rmax - 1e-9


class TestRequiredAlpha:
    def test_unit_efficiency_needs_no_serial_work(self):
        assert required_one_minus_alpha(1.0, 1000) == 0.0

    def test_boundary_efficiency_allows_everything(self):
        assert required_one_minus_alpha(0.25, 4) == 1.0

    def test_infeasible_target(self):
        with pytest.raises(InfeasibleTargetError):
            required_one_minus_alpha(0.1, 4)

    def test_needs_at_least_two_cores(self):
        with pytest.raises(DegenerateCoresError):
            required_one_minus_alpha(0.5, 1)

    @given(fractions, core_counts)
    def test_inverts_the_forward_model(self, one_minus_alpha, cores):
        eff = efficiency_from_alpha(one_minus_alpha, cores)
        back = required_one_minus_alpha(eff, cores)
        assert back == pytest.approx(one_minus_alpha, rel=1e-12)


class TestSaturation:
    def test_reference_value(self):
        assert saturation_rmax(10.0, 0.001) == pytest.approx(10000.0, rel=1e-15)

    def test_fully_serial_saturates_at_one_processor(self):
        assert saturation_rmax(42.0, 1.0) == 42.0

    def test_unbounded_when_perfectly_parallel(self):
        with pytest.raises(UnboundedError):
            saturation_rmax(10.0, 0.0)

    def test_validation(self):
        with pytest.raises(ValueError):
            saturation_rmax(0.0, 0.5)
        with pytest.raises(ValueError):
            saturation_rmax(10.0, 1.5)

    @given(st.floats(min_value=1e-3, max_value=1e6), fractions)
    def test_scales_linearly_in_per_processor_peak(self, per, oma):
        assert saturation_rmax(2.0 * per, oma) == pytest.approx(
            2.0 * saturation_rmax(per, oma), rel=1e-12
        )


class TestBounds:
    def test_speed_of_light_constant(self):
        assert SPEED_OF_LIGHT_M_PER_S == 2.998e8

    def test_propagation_term(self):
        budget = ContributionBudget(clock_hz=1e9, total_time_s=1.0, physical_size_m=100.0)
        result = bounds(budget)
        expected = (2.0 * 100.0 / 2.998e8) * 1e9
        assert result.propagation_cycles == expected
        assert result.contributed_cycles == expected
        assert result.breakdown["propagation"] == 1.0

    def test_total_cycles(self):
        budget = ContributionBudget(clock_hz=2e9, total_time_s=3.0, os_cycles=1.0)
        assert bounds(budget).total_cycles == 6e9

    def test_bound_and_speedup_are_reciprocal(self):
        budget = ContributionBudget(
            clock_hz=1e9, total_time_s=10.0,
            hardware_cycles=5e3, os_cycles=3e3, software_cycles=2e3,
        )
        result = bounds(budget)
        assert result.min_one_minus_alpha == pytest.approx(1e4 / 1e10, rel=1e-12)
        assert result.max_speedup * result.min_one_minus_alpha == pytest.approx(1.0, rel=1e-12)

    def test_breakdown_shares_sum_to_one(self):
        budget = ContributionBudget(
            clock_hz=1e9, total_time_s=1.0,
            hardware_cycles=1.0, os_cycles=2.0, software_cycles=3.0, physical_size_m=10.0,
        )
        shares = bounds(budget).breakdown
        assert set(shares) == {"hardware", "os", "software", "propagation"}
        assert math.fsum(shares.values()) == pytest.approx(1.0, abs=1e-12)
        assert all(s >= 0.0 for s in shares.values())

    def test_saturation_only_with_per_processor_rate(self):
        base = dict(clock_hz=1e9, total_time_s=1.0, os_cycles=100.0)
        assert bounds(ContributionBudget(**base)).saturation_flops is None
        result = bounds(ContributionBudget(**base, per_processor_flops=2e9))
        assert result.saturation_flops == pytest.approx(2e9 / (100.0 / 1e9), rel=1e-12)

    def test_zero_budget(self):
        with pytest.raises(ZeroBudgetError):
            bounds(ContributionBudget(clock_hz=1e9, total_time_s=1.0))

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            ContributionBudget(clock_hz=0.0, total_time_s=1.0)
        with pytest.raises(ValueError):
            ContributionBudget(clock_hz=1e9, total_time_s=-1.0)
        with pytest.raises(ValueError):
            ContributionBudget(clock_hz=1e9, total_time_s=1.0, os_cycles=-5.0)
        with pytest.raises(ValueError):
            ContributionBudget(clock_hz=1e9, total_time_s=1.0, physical_size_m=math.nan)
        with pytest.raises(ValueError):
            ContributionBudget(clock_hz=1e9, total_time_s=1.0, per_processor_flops=0.0)
