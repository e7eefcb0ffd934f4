"""Core clinical types, unit conversions, validation, and classification."""

from .records import (
    ACTIVITY_MAX_MIN,
    BP_DIA_MAX,
    BP_DIA_MIN,
    BP_SYS_MAX,
    BP_SYS_MIN,
    CARBS_MAX_G,
    DEFAULT_GLUCOSE_UNIT,
    DEFAULT_TARGETS,
    DEFAULT_WEIGHT_UNIT,
    GLUCOSE_MAX_MGDL,
    GLUCOSE_MIN_MGDL,
    HEIGHT_MAX_M,
    HEIGHT_MIN_M,
    INSULIN_MAX_UNITS,
    NOTE_MAX_CHARS,
    RECORD_TYPES,
    WEIGHT_MAX_KG,
    WEIGHT_MIN_KG,
    ActivityIntensity,
    BloodPressure,
    BodyWeight,
    CarbIntake,
    GlucoseReading,
    GlucoseUnit,
    InsulinDose,
    Language,
    Meal,
    MealRelation,
    MealSlot,
    MeasurementRecord,
    MedicationRecord,
    PhysicalActivity,
    Role,
    TargetRanges,
    UnitPreferences,
    UserProfile,
    WeightUnit,
    record_timestamp,
    record_type_tag,
)
from .units import (
    LBS_PER_KG,
    MGDL_PER_MMOLL,
    BloodPressureLevel,
    GlucoseLevel,
    classify_blood_pressure,
    classify_glucose,
    compute_bmi,
    convert_glucose,
    convert_weight,
)
from .validation import Violation, validate_profile, validate_record, validate_targets

__all__ = [name for name in dir() if not name.startswith("_")]
