"""Unit conversions, BMI, and target-range classification.

Conversions are pure and never round; rounding happens at display only.
"""

from __future__ import annotations

import math
from enum import Enum

from ..errors import ValidationError
from .records import (
    BloodPressure,
    GlucoseUnit,
    TargetRanges,
    WeightUnit,
)

# mg/dL per mmol/L (glucose molar mass ~180.16 g/mol) and lbs per kg.
MGDL_PER_MMOLL = 18.016
LBS_PER_KG = 2.20462


class GlucoseLevel(Enum):
    BELOW = "below"
    IN_RANGE = "in_range"
    ABOVE = "above"


class BloodPressureLevel(Enum):
    IN_RANGE = "in_range"
    ELEVATED = "elevated"


def _check_convertible(value: float) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError("value must be a number", code="convert.not_a_number")
    if not math.isfinite(value):
        raise ValidationError("value must be finite", code="convert.not_finite")
    if value < 0:
        raise ValidationError("value must be non-negative", code="convert.negative")


def convert_glucose(value: float, from_unit: GlucoseUnit, to_unit: GlucoseUnit) -> float:
    """Convert a glucose concentration between mg/dL and mmol/L."""
    _check_convertible(value)
    if from_unit == to_unit:
        return float(value)
    if from_unit == GlucoseUnit.MG_PER_DL:
        return value / MGDL_PER_MMOLL
    return value * MGDL_PER_MMOLL


def convert_weight(value: float, from_unit: WeightUnit, to_unit: WeightUnit) -> float:
    """Convert a body weight between kilograms and pounds."""
    _check_convertible(value)
    if from_unit == to_unit:
        return float(value)
    if from_unit == WeightUnit.KILOGRAMS:
        return value * LBS_PER_KG
    return value / LBS_PER_KG


def compute_bmi(weight_kg: float, height_m: float | None) -> float:
    """Body mass index: weight (kg) divided by height (m) squared, unrounded.

    Raises ``ValidationError("bmi.height_required")`` when the height is
    unknown, and rejects weights/heights outside the profile bounds.
    """
    from .records import HEIGHT_MAX_M, HEIGHT_MIN_M, WEIGHT_MAX_KG, WEIGHT_MIN_KG

    if height_m is None:
        raise ValidationError("height required to compute BMI", code="bmi.height_required")
    if not (WEIGHT_MIN_KG <= weight_kg <= WEIGHT_MAX_KG):
        raise ValidationError("weight out of bounds", code="bmi.weight_out_of_bounds")
    if not (HEIGHT_MIN_M <= height_m <= HEIGHT_MAX_M):
        raise ValidationError("height out of bounds", code="bmi.height_out_of_bounds")
    return weight_kg / (height_m * height_m)


def classify_glucose(value_mgdl: float, targets: TargetRanges) -> GlucoseLevel:
    """Classify a canonical mg/dL value against the target band, bounds inclusive."""
    if value_mgdl < targets.glucose_low:
        return GlucoseLevel.BELOW
    if value_mgdl > targets.glucose_high:
        return GlucoseLevel.ABOVE
    return GlucoseLevel.IN_RANGE


def classify_blood_pressure(bp: BloodPressure, targets: TargetRanges) -> BloodPressureLevel:
    """Elevated when either channel exceeds its threshold; thresholds inclusive."""
    if bp.systolic > targets.bp_sys_high or bp.diastolic > targets.bp_dia_high:
        return BloodPressureLevel.ELEVATED
    return BloodPressureLevel.IN_RANGE
