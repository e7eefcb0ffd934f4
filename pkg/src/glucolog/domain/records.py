"""Clinical record types and user profiles.

All values are stored in canonical units (glucose in mg/dL, weight in kg,
blood pressure in mmHg) regardless of the user's display preference;
timestamps are UTC epoch seconds.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Union

# Plausibility bounds used by validation and by TargetRanges checks.
GLUCOSE_MIN_MGDL = 10.0
GLUCOSE_MAX_MGDL = 1000.0
WEIGHT_MIN_KG = 1.0
WEIGHT_MAX_KG = 500.0
BP_SYS_MIN = 40
BP_SYS_MAX = 300
BP_DIA_MIN = 20
BP_DIA_MAX = 200
INSULIN_MAX_UNITS = 200.0
CARBS_MAX_G = 1000.0
ACTIVITY_MAX_MIN = 1440
HEIGHT_MIN_M = 0.3
HEIGHT_MAX_M = 2.8
NOTE_MAX_CHARS = 500
NAME_MAX_CHARS = 200
DOSE_MAX_CHARS = 100


class GlucoseUnit(Enum):
    MG_PER_DL = "mg/dL"
    MMOL_PER_L = "mmol/L"


class WeightUnit(Enum):
    KILOGRAMS = "kg"
    POUNDS = "lbs"


class Meal(Enum):
    BREAKFAST = "breakfast"
    LUNCH = "lunch"
    SNACK = "snack"
    DINNER = "dinner"


class MealRelation(Enum):
    BEFORE = "before"
    AFTER = "after"


@dataclass(frozen=True)
class MealSlot:
    """A (meal, relation) pair; a relation never exists without a meal.

    Records without meal context carry ``slot=None`` instead.
    """

    meal: Meal
    relation: MealRelation


class ActivityIntensity(Enum):
    LOW = "low"
    MODERATE = "moderate"
    HIGH = "high"


class Role(Enum):
    PATIENT = "patient"
    SUPERVISOR = "supervisor"


class Language(Enum):
    EN = "en"
    ES = "es"


@dataclass(frozen=True)
class GlucoseReading:
    id: str
    patient: str
    value: float  # canonical mg/dL
    taken_at: int  # UTC epoch seconds
    slot: Optional[MealSlot] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class InsulinDose:
    id: str
    patient: str
    units: float
    insulin_kind: str
    taken_at: int
    slot: Optional[MealSlot] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class CarbIntake:
    id: str
    patient: str
    grams: float
    taken_at: int
    slot: Optional[MealSlot] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class MedicationRecord:
    id: str
    patient: str
    name: str
    dose: str
    taken_at: int
    note: Optional[str] = None


@dataclass(frozen=True)
class PhysicalActivity:
    id: str
    patient: str
    intensity: ActivityIntensity
    duration_min: int
    performed_at: int
    note: Optional[str] = None


@dataclass(frozen=True)
class BodyWeight:
    id: str
    patient: str
    value: float  # canonical kg
    measured_at: int
    note: Optional[str] = None


@dataclass(frozen=True)
class BloodPressure:
    id: str
    patient: str
    systolic: int  # mmHg
    diastolic: int  # mmHg
    measured_at: int
    note: Optional[str] = None


MeasurementRecord = Union[
    GlucoseReading,
    InsulinDose,
    CarbIntake,
    MedicationRecord,
    PhysicalActivity,
    BodyWeight,
    BloodPressure,
]

#: wire/storage type tag -> record class
RECORD_TYPES: dict[str, type] = {
    "glucose": GlucoseReading,
    "insulin": InsulinDose,
    "carbs": CarbIntake,
    "medication": MedicationRecord,
    "activity": PhysicalActivity,
    "weight": BodyWeight,
    "blood_pressure": BloodPressure,
}

_TYPE_TAGS = {cls: tag for tag, cls in RECORD_TYPES.items()}


def record_type_tag(record: MeasurementRecord) -> str:
    """Return the storage tag ("glucose", "insulin", ...) for a record."""
    try:
        return _TYPE_TAGS[type(record)]
    except KeyError:
        raise TypeError(f"not a measurement record: {type(record).__name__}")


def record_timestamp(record: MeasurementRecord) -> int:
    """The event timestamp, whatever the field is called on the type."""
    if isinstance(record, PhysicalActivity):
        return record.performed_at
    if isinstance(record, (BodyWeight, BloodPressure)):
        return record.measured_at
    return record.taken_at


@dataclass(frozen=True)
class TargetRanges:
    """Per-patient goal bounds driving classification and statistics."""

    glucose_low: float = 70.0  # mg/dL
    glucose_high: float = 180.0  # mg/dL
    bp_sys_high: int = 130  # mmHg
    bp_dia_high: int = 80  # mmHg


DEFAULT_TARGETS = TargetRanges()
DEFAULT_GLUCOSE_UNIT = GlucoseUnit.MG_PER_DL
DEFAULT_WEIGHT_UNIT = WeightUnit.KILOGRAMS


@dataclass(frozen=True)
class UnitPreferences:
    glucose: GlucoseUnit = DEFAULT_GLUCOSE_UNIT
    weight: WeightUnit = DEFAULT_WEIGHT_UNIT


@dataclass(frozen=True)
class UserProfile:
    """A registered user.

    Supervisors never carry targets or height; patients default to
    mg/dL + kg preferences and the stock target ranges.
    """

    id: str
    role: Role
    display_name: str
    email: str  # unique, lowercase-normalized
    credential_hash: str
    language: Language = Language.EN
    unit_prefs: UnitPreferences = field(default_factory=UnitPreferences)
    height_m: Optional[float] = None
    targets: Optional[TargetRanges] = None

    def with_updates(self, **changes) -> "UserProfile":
        return replace(self, **changes)
