"""Evolution series, summary statistics, and the weekly diary grid."""

from .series import (
    BloodPressurePoint,
    BloodPressureStats,
    SeriesPoint,
    SeriesStats,
    WeightPoint,
    blood_pressure_series,
    glucose_series,
    summarize,
    weight_bmi_series,
)
from .weekly import (
    ActivityEntry,
    DaySummary,
    MealCell,
    WeeklySummary,
    weekly_summary,
)

__all__ = [
    "BloodPressurePoint",
    "BloodPressureStats",
    "SeriesPoint",
    "SeriesStats",
    "WeightPoint",
    "blood_pressure_series",
    "glucose_series",
    "summarize",
    "weight_bmi_series",
    "ActivityEntry",
    "DaySummary",
    "MealCell",
    "WeeklySummary",
    "weekly_summary",
]
