"""Evolution series and summary statistics.

Pure functions over record snapshots: each call filters its window
(half-open, timestamp at start included, at end excluded), sorts stably by
timestamp, and folds the survivors into points plus a stats block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..domain import (
    BloodPressure,
    BloodPressureLevel,
    BodyWeight,
    GlucoseLevel,
    GlucoseReading,
    GlucoseUnit,
    TargetRanges,
    classify_blood_pressure,
    classify_glucose,
    compute_bmi,
    convert_glucose,
)
from ..times import check_window


@dataclass(frozen=True)
class SeriesPoint:
    t: int
    value: float
    level: Optional[GlucoseLevel] = None


@dataclass(frozen=True)
class WeightPoint:
    t: int
    weight_kg: float
    bmi: Optional[float] = None


@dataclass(frozen=True)
class BloodPressurePoint:
    t: int
    systolic: int
    diastolic: int
    level: BloodPressureLevel


@dataclass(frozen=True)
class SeriesStats:
    """count/mean/min/max plus in-range percentages when targets apply.

    mean/min/max are None when count is 0; percentages are None unless the
    series was classified against glucose targets.
    """

    count: int
    mean: Optional[float] = None
    min: Optional[float] = None
    max: Optional[float] = None
    pct_below: Optional[float] = None
    pct_in_range: Optional[float] = None
    pct_above: Optional[float] = None


@dataclass(frozen=True)
class BloodPressureStats:
    systolic: SeriesStats
    diastolic: SeriesStats


def _stats(values: Sequence[float], levels: Optional[Sequence[GlucoseLevel]] = None) -> SeriesStats:
    count = len(values)
    if count == 0:
        return SeriesStats(count=0)
    out = dict(count=count, mean=sum(values) / count, min=min(values), max=max(values))
    if levels is not None:
        below = sum(1 for lv in levels if lv is GlucoseLevel.BELOW)
        above = sum(1 for lv in levels if lv is GlucoseLevel.ABOVE)
        in_range = count - below - above
        out.update(
            pct_below=100.0 * below / count,
            pct_in_range=100.0 * in_range / count,
            pct_above=100.0 * above / count,
        )
    return SeriesStats(**out)


def summarize(values: Sequence[float], targets: Optional[TargetRanges] = None) -> SeriesStats:
    """Shared stats kernel. ``values`` are canonical mg/dL when targets given."""
    levels = [classify_glucose(v, targets) for v in values] if targets is not None else None
    return _stats(list(values), levels)


def _in_window(records, window, key):
    t0, t1 = check_window(window)
    return sorted((r for r in records if t0 <= key(r) < t1), key=key)


def glucose_series(
    readings: Sequence[GlucoseReading],
    window: tuple[int, int],
    unit: GlucoseUnit,
    targets: TargetRanges,
) -> tuple[list[SeriesPoint], SeriesStats]:
    """Windowed glucose points in the requested unit, classified against targets."""
    selected = _in_window(readings, window, lambda r: r.taken_at)
    points = [
        SeriesPoint(
            t=r.taken_at,
            value=convert_glucose(r.value, GlucoseUnit.MG_PER_DL, unit),
            level=classify_glucose(r.value, targets),
        )
        for r in selected
    ]
    stats = _stats([p.value for p in points], [p.level for p in points])
    return points, stats


def weight_bmi_series(
    weights: Sequence[BodyWeight],
    window: tuple[int, int],
    height_m: Optional[float],
) -> tuple[list[WeightPoint], SeriesStats]:
    """Weight points in canonical kg; BMI per point, absent without a height."""
    selected = _in_window(weights, window, lambda r: r.measured_at)
    points = [
        WeightPoint(
            t=r.measured_at,
            weight_kg=r.value,
            bmi=compute_bmi(r.value, height_m) if height_m is not None else None,
        )
        for r in selected
    ]
    return points, _stats([p.weight_kg for p in points])


def blood_pressure_series(
    bps: Sequence[BloodPressure],
    window: tuple[int, int],
    targets: TargetRanges,
) -> tuple[list[BloodPressurePoint], BloodPressureStats]:
    selected = _in_window(bps, window, lambda r: r.measured_at)
    points = [
        BloodPressurePoint(
            t=r.measured_at,
            systolic=r.systolic,
            diastolic=r.diastolic,
            level=classify_blood_pressure(r, targets),
        )
        for r in selected
    ]
    stats = BloodPressureStats(
        systolic=_stats([p.systolic for p in points]),
        diastolic=_stats([p.diastolic for p in points]),
    )
    return points, stats
