"""Independent brute-force reference implementations and fixture generators.

Everything here recomputes expectations from first principles (plain loops
over raw records, literal conversion constants) so the analytics module is
checked against a second code path, not against itself.
"""

from __future__ import annotations

import calendar
from datetime import date, timedelta

from glucolog.domain import (
    ActivityIntensity,
    BloodPressure,
    BodyWeight,
    CarbIntake,
    GlucoseReading,
    InsulinDose,
    Meal,
    MealRelation,
    MealSlot,
    MedicationRecord,
    PhysicalActivity,
)

MGDL_PER_MMOLL = 18.016  # literal on purpose; do not import from the package


def oracle_stats(values, targets=None):
    """Plain filter-and-fold stats. Values are canonical mg/dL when targets given."""
    out = {"count": len(values), "mean": None, "min": None, "max": None,
           "pct_below": None, "pct_in_range": None, "pct_above": None}
    if not values:
        return out
    total = 0.0
    lo = hi = values[0]
    for v in values:
        total += v
        if v < lo:
            lo = v
        if v > hi:
            hi = v
    out.update(mean=total / len(values), min=lo, max=hi)
    if targets is not None:
        below = in_range = above = 0
        for v in values:
            if v < targets.glucose_low:
                below += 1
            elif v > targets.glucose_high:
                above += 1
            else:
                in_range += 1
        n = len(values)
        out.update(
            pct_below=100.0 * below / n,
            pct_in_range=100.0 * in_range / n,
            pct_above=100.0 * above / n,
        )
    return out


def oracle_glucose_series(readings, window, unit_tag, targets):
    """Returns (points, stats): points as (t, value, level-string) tuples."""
    t0, t1 = window
    rows = [r for r in readings if t0 <= r.taken_at < t1]
    rows.sort(key=lambda r: r.taken_at)  # list.sort is stable: insertion order kept
    points = []
    for r in rows:
        value = r.value if unit_tag == "mg/dL" else r.value / MGDL_PER_MMOLL
        if r.value < targets.glucose_low:
            level = "below"
        elif r.value > targets.glucose_high:
            level = "above"
        else:
            level = "in_range"
        points.append((r.taken_at, value, level))
    stats = oracle_stats([v for _, v, _ in points])
    canonical = oracle_stats([r.value for r in rows], targets)
    stats.update(
        pct_below=canonical["pct_below"],
        pct_in_range=canonical["pct_in_range"],
        pct_above=canonical["pct_above"],
    )
    return points, stats


def oracle_weight_series(weights, window, height_m):
    t0, t1 = window
    rows = [r for r in weights if t0 <= r.measured_at < t1]
    rows.sort(key=lambda r: r.measured_at)
    points = [
        (r.measured_at, r.value, (r.value / (height_m * height_m)) if height_m else None)
        for r in rows
    ]
    return points, oracle_stats([r.value for r in rows])


def oracle_bp_series(bps, window, targets):
    t0, t1 = window
    rows = [r for r in bps if t0 <= r.measured_at < t1]
    rows.sort(key=lambda r: r.measured_at)
    points = []
    for r in rows:
        elevated = r.systolic > targets.bp_sys_high or r.diastolic > targets.bp_dia_high
        points.append((r.measured_at, r.systolic, r.diastolic, "elevated" if elevated else "in_range"))
    return points, {
        "systolic": oracle_stats([r.systolic for r in rows]),
        "diastolic": oracle_stats([r.diastolic for r in rows]),
    }


def oracle_weekly_grid(glucose, insulin, carbs, activities, week_start, tz_offset_min=0):
    """7x4 grid as nested dicts keyed by (day index, meal tag)."""
    start = calendar.timegm(week_start.timetuple()) - tz_offset_min * 60
    end = start + 7 * 86400

    def day_of(ts):
        if start <= ts < end:
            return (ts - start) // 86400
        return None

    grid = {
        (d, meal.value): {"glucose_before": [], "glucose_after": [], "insulin": [], "carbs": []}
        for d in range(7)
        for meal in Meal
    }
    acts = {d: [] for d in range(7)}

    for r in glucose:
        d = day_of(r.taken_at)
        if d is None or r.slot is None:
            continue
        key = "glucose_before" if r.slot.relation == MealRelation.BEFORE else "glucose_after"
        grid[(d, r.slot.meal.value)][key].append(r.value)
    for r in insulin:
        d = day_of(r.taken_at)
        if d is not None and r.slot is not None:
            grid[(d, r.slot.meal.value)]["insulin"].append(r.units)
    for r in carbs:
        d = day_of(r.taken_at)
        if d is not None and r.slot is not None:
            grid[(d, r.slot.meal.value)]["carbs"].append(r.grams)
    for r in activities:
        d = day_of(r.performed_at)
        if d is not None:
            acts[d].append(r)

    cells = {}
    for (d, meal), acc in grid.items():
        cells[(d, meal)] = {
            "glucose_before": sum(acc["glucose_before"]) / len(acc["glucose_before"])
            if acc["glucose_before"] else None,
            "glucose_after": sum(acc["glucose_after"]) / len(acc["glucose_after"])
            if acc["glucose_after"] else None,
            "insulin_units": sum(acc["insulin"]) if acc["insulin"] else None,
            "carbs_g": sum(acc["carbs"]) if acc["carbs"] else None,
        }
    day_activities = {
        d: [(a.intensity.value, a.duration_min) for a in sorted(rows, key=lambda a: a.performed_at)]
        for d, rows in acts.items()
    }
    return cells, day_activities


# --- randomized fixture generation ------------------------------------------

def any_monday(rng):
    base = date(2026, 8, 17)  # a Monday
    return base + timedelta(weeks=rng.randint(-52, 52))


def random_slot(rng):
    if rng.random() < 0.25:
        return None
    return MealSlot(meal=rng.choice(list(Meal)), relation=rng.choice(list(MealRelation)))


def random_fixture(rng, n_records, patient="p1", t_base=1_700_000_000, t_span=14 * 86400):
    """A mixed bag of up to n_records valid records for one patient."""
    glucose, insulin, carbs, weights, bps, meds, acts = [], [], [], [], [], [], []
    for i in range(n_records):
        ts = t_base + rng.randint(0, t_span - 1)
        kind = rng.randrange(7)
        rid = f"r{i}"
        if kind == 0:
            glucose.append(GlucoseReading(
                id=rid, patient=patient, value=rng.uniform(10.0, 1000.0),
                taken_at=ts, slot=random_slot(rng)))
        elif kind == 1:
            insulin.append(InsulinDose(
                id=rid, patient=patient, units=rng.uniform(0.5, 200.0),
                insulin_kind="rapid", taken_at=ts, slot=random_slot(rng)))
        elif kind == 2:
            carbs.append(CarbIntake(
                id=rid, patient=patient, grams=rng.uniform(1.0, 1000.0),
                taken_at=ts, slot=random_slot(rng)))
        elif kind == 3:
            weights.append(BodyWeight(
                id=rid, patient=patient, value=rng.uniform(1.0, 500.0), measured_at=ts))
        elif kind == 4:
            dia = rng.randint(20, 199)
            bps.append(BloodPressure(
                id=rid, patient=patient, systolic=rng.randint(dia + 1, 300),
                diastolic=dia, measured_at=ts))
        elif kind == 5:
            meds.append(MedicationRecord(
                id=rid, patient=patient, name="metformin", dose="850 mg", taken_at=ts))
        else:
            acts.append(PhysicalActivity(
                id=rid, patient=patient, intensity=rng.choice(list(ActivityIntensity)),
                duration_min=rng.randint(1, 1440), performed_at=ts))
    return {
        "glucose": glucose, "insulin": insulin, "carbs": carbs,
        "weights": weights, "bps": bps, "medications": meds, "activities": acts,
    }
