"""The per-day, per-meal weekly diary grid.

Day boundaries are computed in a caller-supplied UTC offset; records tagged
with no meal slot stay out of the grid (they still appear in the evolution
series). When several records land in the same day/meal cell, glucose is
averaged while insulin and carbohydrates are summed.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, timedelta
from typing import Mapping, Optional, Sequence

from ..domain import (
    ActivityIntensity,
    CarbIntake,
    GlucoseReading,
    InsulinDose,
    Meal,
    MealRelation,
    PhysicalActivity,
)
from ..errors import ValidationError
from ..times import SECONDS_PER_DAY, date_to_epoch_utc

DAYS_PER_WEEK = 7


@dataclass(frozen=True)
class MealCell:
    glucose_before: Optional[float] = None
    glucose_after: Optional[float] = None
    insulin_units: Optional[float] = None
    carbs_g: Optional[float] = None

    def is_empty(self) -> bool:
        return (
            self.glucose_before is None
            and self.glucose_after is None
            and self.insulin_units is None
            and self.carbs_g is None
        )


@dataclass(frozen=True)
class ActivityEntry:
    intensity: ActivityIntensity
    duration_min: int


@dataclass(frozen=True)
class DaySummary:
    day: date
    meals: Mapping[Meal, MealCell]
    activities: tuple[ActivityEntry, ...]


@dataclass(frozen=True)
class WeeklySummary:
    week_start: date  # always a Monday
    days: tuple[DaySummary, ...]  # exactly 7


def weekly_summary(
    glucose: Sequence[GlucoseReading],
    insulin: Sequence[InsulinDose],
    carbs: Sequence[CarbIntake],
    activities: Sequence[PhysicalActivity],
    week_start: date,
    tz_offset_min: int = 0,
) -> WeeklySummary:
    """Aggregate one local week of records into the 7x4 diary grid."""
    if week_start.weekday() != 0:
        raise ValidationError("week_start must be a Monday", code="week.not_monday")

    # UTC instant of local Monday 00:00 in the requested offset
    start = date_to_epoch_utc(week_start) - tz_offset_min * 60
    end = start + DAYS_PER_WEEK * SECONDS_PER_DAY

    def day_index(ts: int) -> Optional[int]:
        if not start <= ts < end:
            return None
        return (ts - start) // SECONDS_PER_DAY

    # accumulators: [day][meal] -> lists/sums
    glucose_acc: list[dict[Meal, dict[MealRelation, list[float]]]] = [
        {m: {rel: [] for rel in MealRelation} for m in Meal} for _ in range(DAYS_PER_WEEK)
    ]
    insulin_acc = [{m: [] for m in Meal} for _ in range(DAYS_PER_WEEK)]
    carbs_acc = [{m: [] for m in Meal} for _ in range(DAYS_PER_WEEK)]
    activity_acc: list[list[PhysicalActivity]] = [[] for _ in range(DAYS_PER_WEEK)]

    for r in glucose:
        idx = day_index(r.taken_at)
        if idx is not None and r.slot is not None:
            glucose_acc[idx][r.slot.meal][r.slot.relation].append(r.value)
    for r in insulin:
        idx = day_index(r.taken_at)
        if idx is not None and r.slot is not None:
            insulin_acc[idx][r.slot.meal].append(r.units)
    for r in carbs:
        idx = day_index(r.taken_at)
        if idx is not None and r.slot is not None:
            carbs_acc[idx][r.slot.meal].append(r.grams)
    for r in activities:
        idx = day_index(r.performed_at)
        if idx is not None:
            activity_acc[idx].append(r)

    days = []
    for i in range(DAYS_PER_WEEK):
        meals = {}
        for m in Meal:
            before = glucose_acc[i][m][MealRelation.BEFORE]
            after = glucose_acc[i][m][MealRelation.AFTER]
            doses = insulin_acc[i][m]
            grams = carbs_acc[i][m]
            meals[m] = MealCell(
                glucose_before=sum(before) / len(before) if before else None,
                glucose_after=sum(after) / len(after) if after else None,
                insulin_units=sum(doses) if doses else None,
                carbs_g=sum(grams) if grams else None,
            )
        day_acts = sorted(activity_acc[i], key=lambda a: a.performed_at)
        days.append(
            DaySummary(
                day=week_start + timedelta(days=i),
                meals=meals,
                activities=tuple(
                    ActivityEntry(intensity=a.intensity, duration_min=a.duration_min)
                    for a in day_acts
                ),
            )
        )
    return WeeklySummary(week_start=week_start, days=tuple(days))
