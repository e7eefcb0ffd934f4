"""Invariant checks for records, target ranges, and profiles.

``validate_record`` never raises: violations are the return value, one entry
per broken invariant, each with a stable machine-readable code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .records import (
    ACTIVITY_MAX_MIN,
    BP_DIA_MAX,
    BP_DIA_MIN,
    BP_SYS_MAX,
    BP_SYS_MIN,
    CARBS_MAX_G,
    DOSE_MAX_CHARS,
    GLUCOSE_MAX_MGDL,
    GLUCOSE_MIN_MGDL,
    HEIGHT_MAX_M,
    HEIGHT_MIN_M,
    INSULIN_MAX_UNITS,
    NAME_MAX_CHARS,
    NOTE_MAX_CHARS,
    WEIGHT_MAX_KG,
    WEIGHT_MIN_KG,
    BloodPressure,
    BodyWeight,
    CarbIntake,
    GlucoseReading,
    InsulinDose,
    MeasurementRecord,
    MedicationRecord,
    PhysicalActivity,
    Role,
    TargetRanges,
    UserProfile,
    record_timestamp,
)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _number_in(value, lo, hi) -> bool:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        return False
    if isinstance(value, float) and not math.isfinite(value):
        return False
    return lo <= value <= hi


def validate_record(record: MeasurementRecord, now: Optional[int] = None) -> list[Violation]:
    """Check every invariant of a measurement record.

    The returned list is empty iff the record is valid. When ``now`` is
    supplied (creation time from the injected clock), a future event
    timestamp is also a violation.
    """
    v: list[Violation] = []

    if not record.id:
        v.append(Violation("record.id_missing", "record id must be non-empty"))
    if not record.patient:
        v.append(Violation("record.patient_missing", "record must reference a patient"))

    ts = record_timestamp(record)
    if not isinstance(ts, int) or isinstance(ts, bool) or ts < 0:
        v.append(Violation("record.timestamp_invalid", "timestamp must be non-negative epoch seconds"))
    elif now is not None and ts > now:
        v.append(Violation("record.timestamp_in_future", "timestamp is in the future"))

    note = getattr(record, "note", None)
    if note is not None and len(note) > NOTE_MAX_CHARS:
        v.append(Violation("note.too_long", f"note exceeds {NOTE_MAX_CHARS} characters"))

    if isinstance(record, GlucoseReading):
        if not _number_in(record.value, GLUCOSE_MIN_MGDL, GLUCOSE_MAX_MGDL):
            v.append(Violation(
                "glucose.out_of_bounds",
                f"glucose must be within {GLUCOSE_MIN_MGDL}-{GLUCOSE_MAX_MGDL} mg/dL",
            ))
    elif isinstance(record, InsulinDose):
        if not _number_in(record.units, 0, INSULIN_MAX_UNITS) or record.units <= 0:
            v.append(Violation(
                "insulin.units_out_of_bounds",
                f"insulin units must be > 0 and <= {INSULIN_MAX_UNITS}",
            ))
        if len(record.insulin_kind or "") > DOSE_MAX_CHARS:
            v.append(Violation("insulin.kind_too_long", f"insulin kind exceeds {DOSE_MAX_CHARS} characters"))
    elif isinstance(record, CarbIntake):
        if not _number_in(record.grams, 0, CARBS_MAX_G) or record.grams <= 0:
            v.append(Violation(
                "carbs.grams_out_of_bounds",
                f"carbohydrate grams must be > 0 and <= {CARBS_MAX_G}",
            ))
    elif isinstance(record, MedicationRecord):
        if not record.name or not record.name.strip():
            v.append(Violation("medication.name_empty", "medication name must be non-empty"))
        elif len(record.name) > NAME_MAX_CHARS:
            v.append(Violation("medication.name_too_long", f"medication name exceeds {NAME_MAX_CHARS} characters"))
        if record.dose is not None and len(record.dose) > DOSE_MAX_CHARS:
            v.append(Violation("medication.dose_too_long", f"dose text exceeds {DOSE_MAX_CHARS} characters"))
    elif isinstance(record, PhysicalActivity):
        if not isinstance(record.duration_min, int) or isinstance(record.duration_min, bool) \
                or not (1 <= record.duration_min <= ACTIVITY_MAX_MIN):
            v.append(Violation(
                "activity.duration_out_of_bounds",
                f"duration must be 1-{ACTIVITY_MAX_MIN} minutes",
            ))
    elif isinstance(record, BodyWeight):
        if not _number_in(record.value, WEIGHT_MIN_KG, WEIGHT_MAX_KG):
            v.append(Violation(
                "weight.out_of_bounds",
                f"weight must be within {WEIGHT_MIN_KG}-{WEIGHT_MAX_KG} kg",
            ))
    elif isinstance(record, BloodPressure):
        sys_ok = _number_in(record.systolic, BP_SYS_MIN, BP_SYS_MAX)
        dia_ok = _number_in(record.diastolic, BP_DIA_MIN, BP_DIA_MAX)
        if not sys_ok:
            v.append(Violation("bp.systolic_out_of_bounds", f"systolic must be {BP_SYS_MIN}-{BP_SYS_MAX} mmHg"))
        if not dia_ok:
            v.append(Violation("bp.diastolic_out_of_bounds", f"diastolic must be {BP_DIA_MIN}-{BP_DIA_MAX} mmHg"))
        if sys_ok and dia_ok and not record.systolic > record.diastolic:
            v.append(Violation("bp.systolic_not_greater", "systolic must exceed diastolic"))
    else:
        v.append(Violation("record.unknown_type", f"unknown record type {type(record).__name__}"))

    return v


def validate_targets(targets: TargetRanges) -> list[Violation]:
    v: list[Violation] = []
    low_ok = _number_in(targets.glucose_low, GLUCOSE_MIN_MGDL, GLUCOSE_MAX_MGDL)
    high_ok = _number_in(targets.glucose_high, GLUCOSE_MIN_MGDL, GLUCOSE_MAX_MGDL)
    if not (low_ok and high_ok):
        v.append(Violation(
            "targets.glucose_out_of_bounds",
            f"glucose targets must lie within {GLUCOSE_MIN_MGDL}-{GLUCOSE_MAX_MGDL} mg/dL",
        ))
    elif not targets.glucose_low < targets.glucose_high:
        v.append(Violation("targets.glucose_order", "glucose_low must be below glucose_high"))
    if not _number_in(targets.bp_sys_high, BP_SYS_MIN, BP_SYS_MAX) \
            or not _number_in(targets.bp_dia_high, BP_DIA_MIN, BP_DIA_MAX):
        v.append(Violation("targets.bp_out_of_bounds", "blood-pressure thresholds out of bounds"))
    return v


def validate_profile(profile: UserProfile) -> list[Violation]:
    v: list[Violation] = []
    if not profile.id:
        v.append(Violation("profile.id_missing", "profile id must be non-empty"))
    if not profile.display_name or not profile.display_name.strip():
        v.append(Violation("profile.display_name_empty", "display name must be non-empty"))
    email = profile.email or ""
    if "@" not in email or email != email.strip().lower():
        v.append(Violation("profile.email_invalid", "email must be lowercase-normalized and contain '@'"))

    if profile.role == Role.SUPERVISOR:
        if profile.targets is not None:
            v.append(Violation("profile.supervisor_has_targets", "supervisors carry no target ranges"))
        if profile.height_m is not None:
            v.append(Violation("profile.supervisor_has_height", "supervisors carry no height"))
    else:
        if profile.targets is None:
            v.append(Violation("profile.patient_missing_targets", "patients must carry target ranges"))
        else:
            v.extend(validate_targets(profile.targets))
        if profile.height_m is not None and not _number_in(profile.height_m, HEIGHT_MIN_M, HEIGHT_MAX_M):
            v.append(Violation("profile.height_out_of_bounds", f"height must be {HEIGHT_MIN_M}-{HEIGHT_MAX_M} m"))
    return v
