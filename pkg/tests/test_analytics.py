"""Series and weekly-grid behavior, checked against the brute-force oracles."""

import random
from datetime import date

import pytest

from glucolog.analytics import (
    blood_pressure_series,
    glucose_series,
    summarize,
    weekly_summary,
    weight_bmi_series,
)
from glucolog.domain import (
    BloodPressure,
    BloodPressureLevel,
    BodyWeight,
    CarbIntake,
    GlucoseLevel,
    GlucoseReading,
    GlucoseUnit,
    InsulinDose,
    Meal,
    MealRelation,
    MealSlot,
    TargetRanges,
)
from glucolog.errors import ValidationError

from oracles import (
    oracle_bp_series,
    oracle_glucose_series,
    oracle_stats,
    oracle_weekly_grid,
    oracle_weight_series,
    random_fixture,
)

MGDL = GlucoseUnit.MG_PER_DL
MMOL = GlucoseUnit.MMOL_PER_L
T0 = 1_700_000_000
WEEK = (T0, T0 + 7 * 86400)
TARGETS = TargetRanges(glucose_low=70, glucose_high=130)


def _reading(value, at, slot=None, rid="g"):
    return GlucoseReading(id=rid, patient="p1", value=value, taken_at=at, slot=slot)


class TestSummarize:
    def test_empty(self):
        s = summarize([])
        assert s.count == 0 and s.mean is None and s.min is None and s.max is None

    def test_singleton(self):
        s = summarize([5])
        assert (s.mean, s.min, s.max) == (5, 5, 5)

    def test_small_list(self):
        # (1+2+3+4)/4 = 2.5 by hand
        s = summarize([1, 2, 3, 4])
        assert (s.mean, s.min, s.max) == (2.5, 1, 4)

    def test_percentages_with_targets(self):
        s = summarize([60, 100, 120, 200], TARGETS)
        assert s.pct_below == pytest.approx(25.0)
        assert s.pct_in_range == pytest.approx(50.0)
        assert s.pct_above == pytest.approx(25.0)

    def test_all_in_range_is_100(self):
        s = summarize([80, 100, 130], TARGETS)
        assert s.pct_in_range == pytest.approx(100.0)
        assert s.pct_below == pytest.approx(0.0)


class TestGlucoseSeries:
    def test_empty_window(self):
        points, stats = glucose_series([], WEEK, MGDL, TARGETS)
        assert points == [] and stats.count == 0

    def test_three_reading_fixture(self):
        readings = [_reading(v, T0 + i * 3600, rid=f"g{i}") for i, v in enumerate([80, 100, 200])]
        points, stats = glucose_series(readings, WEEK, MGDL, TARGETS)
        # brute force over the 3-element fixture: mean 380/3, 2 of 3 in range
        assert stats.mean == pytest.approx(126.67, abs=0.01)
        assert stats.pct_in_range == pytest.approx(66.67, abs=0.01)
        assert stats.pct_above == pytest.approx(33.33, abs=0.01)
        assert [p.level for p in points] == [
            GlucoseLevel.IN_RANGE, GlucoseLevel.IN_RANGE, GlucoseLevel.ABOVE]

    def test_singleton(self):
        _, stats = glucose_series([_reading(100, T0)], WEEK, MGDL, TARGETS)
        assert stats.mean == stats.min == stats.max == 100
        assert stats.pct_in_range == pytest.approx(100.0)

    def test_window_boundaries(self):
        t0, t1 = WEEK
        readings = [_reading(100, t0, rid="at-start"), _reading(100, t1, rid="at-end")]
        points, _ = glucose_series(readings, WEEK, MGDL, TARGETS)
        assert [p.t for p in points] == [t0]

    def test_inverted_window_rejected(self):
        with pytest.raises(ValidationError):
            glucose_series([], (WEEK[1], WEEK[0]), MGDL, TARGETS)

    def test_duplicate_timestamps_keep_insertion_order(self):
        readings = [_reading(v, T0, rid=f"g{v}") for v in (100, 200, 50)]
        points, _ = glucose_series(readings, WEEK, MGDL, TARGETS)
        assert [p.value for p in points] == [100, 200, 50]

    def test_mmol_stats_scale_from_mgdl(self):
        readings = [_reading(v, T0 + i, rid=f"g{i}") for i, v in enumerate([80, 100, 200])]
        _, mgdl = glucose_series(readings, WEEK, MGDL, TARGETS)
        pts, mmol = glucose_series(readings, WEEK, MMOL, TARGETS)
        assert mmol.mean == pytest.approx(mgdl.mean / 18.016, abs=1e-9)
        assert mmol.min == pytest.approx(mgdl.min / 18.016, abs=1e-9)
        assert mmol.max == pytest.approx(mgdl.max / 18.016, abs=1e-9)
        assert (mmol.pct_below, mmol.pct_in_range, mmol.pct_above) == \
            (mgdl.pct_below, mgdl.pct_in_range, mgdl.pct_above)
        assert [p.level for p in pts] == [
            GlucoseLevel.IN_RANGE, GlucoseLevel.IN_RANGE, GlucoseLevel.ABOVE]


class TestWeightBmiSeries:
    def test_bmi_per_point(self):
        weights = [
            BodyWeight(id="w1", patient="p1", value=70.0, measured_at=T0),
            BodyWeight(id="w2", patient="p1", value=77.0, measured_at=T0 + 60),
        ]
        points, stats = weight_bmi_series(weights, WEEK, height_m=1.75)
        assert points[0].bmi == pytest.approx(22.857, abs=1e-3)
        assert points[1].bmi == pytest.approx(25.142, abs=1e-3)
        assert stats.mean == pytest.approx(73.5)

    def test_no_height_no_bmi(self):
        weights = [BodyWeight(id="w1", patient="p1", value=70.0, measured_at=T0)]
        points, _ = weight_bmi_series(weights, WEEK, height_m=None)
        assert points[0].weight_kg == 70.0 and points[0].bmi is None

    def test_empty(self):
        points, stats = weight_bmi_series([], WEEK, height_m=1.75)
        assert points == [] and stats.count == 0


class TestBloodPressureSeries:
    def test_classification(self):
        bps = [
            BloodPressure(id="b1", patient="p1", systolic=120, diastolic=80, measured_at=T0),
            BloodPressure(id="b2", patient="p1", systolic=145, diastolic=95, measured_at=T0 + 60),
        ]
        points, stats = blood_pressure_series(bps, WEEK, TargetRanges(bp_sys_high=130, bp_dia_high=80))
        assert [p.level for p in points] == [BloodPressureLevel.IN_RANGE, BloodPressureLevel.ELEVATED]
        assert stats.systolic.mean == pytest.approx(132.5)
        assert stats.diastolic.max == 95

    def test_singleton(self):
        bps = [BloodPressure(id="b1", patient="p1", systolic=120, diastolic=80, measured_at=T0)]
        _, stats = blood_pressure_series(bps, WEEK, TARGETS)
        assert stats.systolic.mean == stats.systolic.min == stats.systolic.max == 120

    def test_empty(self):
        points, stats = blood_pressure_series([], WEEK, TARGETS)
        assert points == [] and stats.systolic.count == 0


MONDAY = date(2026, 8, 17)


def _monday_epoch():
    import calendar
    return calendar.timegm(MONDAY.timetuple())


class TestWeeklySummary:
    def test_monday_required(self):
        with pytest.raises(ValidationError) as e:
            weekly_summary([], [], [], [], date(2026, 8, 18))
        assert e.value.code == "week.not_monday"

    def test_empty_week(self):
        summary = weekly_summary([], [], [], [], MONDAY)
        assert len(summary.days) == 7
        for day in summary.days:
            assert len(day.meals) == 4
            assert all(cell.is_empty() for cell in day.meals.values())
            assert day.activities == ()

    def test_glucose_averaged_in_cell(self):
        tuesday = _monday_epoch() + 86400 + 8 * 3600
        slot = MealSlot(meal=Meal.BREAKFAST, relation=MealRelation.BEFORE)
        readings = [
            _reading(90, tuesday, slot, rid="g1"),
            _reading(110, tuesday + 300, slot, rid="g2"),
        ]
        summary = weekly_summary(readings, [], [], [], MONDAY)
        cell = summary.days[1].meals[Meal.BREAKFAST]
        assert cell.glucose_before == pytest.approx(100.0)  # (90+110)/2
        assert cell.glucose_after is None

    def test_insulin_summed_in_cell(self):
        t = _monday_epoch() + 12 * 3600
        slot = MealSlot(meal=Meal.LUNCH, relation=MealRelation.BEFORE)
        doses = [
            InsulinDose(id="i1", patient="p1", units=4, insulin_kind="rapid", taken_at=t, slot=slot),
            InsulinDose(id="i2", patient="p1", units=2, insulin_kind="rapid", taken_at=t + 60, slot=slot),
        ]
        summary = weekly_summary([], doses, [], [], MONDAY)
        assert summary.days[0].meals[Meal.LUNCH].insulin_units == pytest.approx(6.0)

    def test_unspecified_slot_excluded_from_grid(self):
        t = _monday_epoch() + 3600
        summary = weekly_summary([_reading(100, t, None)], [], [], [], MONDAY)
        assert all(cell.is_empty() for day in summary.days for cell in day.meals.values())

    def test_tz_offset_shifts_day_boundary(self):
        # 23:30 UTC Monday is already Tuesday at +60 minutes offset
        t = _monday_epoch() + 23 * 3600 + 1800
        slot = MealSlot(meal=Meal.DINNER, relation=MealRelation.AFTER)
        summary_utc = weekly_summary([_reading(100, t, slot)], [], [], [], MONDAY, tz_offset_min=0)
        summary_east = weekly_summary([_reading(100, t, slot)], [], [], [], MONDAY, tz_offset_min=60)
        assert summary_utc.days[0].meals[Meal.DINNER].glucose_after == 100
        assert summary_east.days[0].meals[Meal.DINNER].glucose_after is None
        assert summary_east.days[1].meals[Meal.DINNER].glucose_after == 100


class TestOracleEquivalence:
    """Randomized fixtures vs the independent filter-then-fold oracles."""

    def _assert_stats_match(self, stats, expected):
        assert stats.count == expected["count"]
        for field in ("mean", "min", "max", "pct_below", "pct_in_range", "pct_above"):
            got, want = getattr(stats, field), expected[field]
            if want is None:
                assert got is None or field.startswith("pct")
            else:
                assert got == pytest.approx(want, abs=1e-9)

    @pytest.mark.parametrize("seed", range(25))
    def test_randomized_fixtures(self, seed):
        rng = random.Random(seed)
        fx = random_fixture(rng, rng.randint(0, 200))
        window = (T0 + rng.randint(0, 5 * 86400), T0 + rng.randint(8, 14) * 86400)
        unit = rng.choice([MGDL, MMOL])
        targets = TargetRanges(glucose_low=rng.uniform(60, 100), glucose_high=rng.uniform(140, 250))

        points, stats = glucose_series(fx["glucose"], window, unit, targets)
        o_points, o_stats = oracle_glucose_series(fx["glucose"], window, unit.value, targets)
        assert [(p.t, p.level.value) for p in points] == [(t, lv) for t, _, lv in o_points]
        for p, (_, v, _) in zip(points, o_points):
            assert p.value == pytest.approx(v, abs=1e-9)
        self._assert_stats_match(stats, o_stats)

        height = rng.choice([None, 1.6, 1.75, 1.9])
        wpoints, wstats = weight_bmi_series(fx["weights"], window, height)
        ow_points, ow_stats = oracle_weight_series(fx["weights"], window, height)
        assert [(p.t, p.weight_kg) for p in wpoints] == [(t, kg) for t, kg, _ in ow_points]
        for p, (_, _, bmi) in zip(wpoints, ow_points):
            if bmi is None:
                assert p.bmi is None
            else:
                assert p.bmi == pytest.approx(bmi, abs=1e-9)
        self._assert_stats_match(wstats, ow_stats)

        bpoints, bstats = blood_pressure_series(fx["bps"], window, targets)
        ob_points, ob_stats = oracle_bp_series(fx["bps"], window, targets)
        assert [(p.t, p.systolic, p.diastolic, p.level.value) for p in bpoints] == ob_points
        self._assert_stats_match(bstats.systolic, ob_stats["systolic"])
        self._assert_stats_match(bstats.diastolic, ob_stats["diastolic"])

    @pytest.mark.parametrize("seed", range(10))
    def test_weekly_grid_matches_oracle(self, seed):
        rng = random.Random(1000 + seed)
        fx = random_fixture(rng, rng.randint(0, 200), t_base=_monday_epoch() - 86400, t_span=9 * 86400)
        tz = rng.choice([0, -180, 60, 720])
        summary = weekly_summary(
            fx["glucose"], fx["insulin"], fx["carbs"], fx["activities"], MONDAY, tz_offset_min=tz)
        cells, day_acts = oracle_weekly_grid(
            fx["glucose"], fx["insulin"], fx["carbs"], fx["activities"], MONDAY, tz_offset_min=tz)
        for d in range(7):
            for meal in Meal:
                got = summary.days[d].meals[meal]
                want = cells[(d, meal.value)]
                for field in ("glucose_before", "glucose_after", "insulin_units", "carbs_g"):
                    g, w = getattr(got, field), want[field]
                    if w is None:
                        assert g is None
                    else:
                        assert g == pytest.approx(w, abs=1e-9)
            assert [(a.intensity.value, a.duration_min) for a in summary.days[d].activities] \
                == day_acts[d]
