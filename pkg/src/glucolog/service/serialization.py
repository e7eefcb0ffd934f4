"""Translation between stored entities and API bodies.

Outbound values are converted into the requesting user's preferred units
and tagged with the unit they are expressed in; inbound values may carry an
explicit unit tag and otherwise default to the requester's preference.
Storage stays canonical (mg/dL, kg) either way.
"""

from __future__ import annotations

from typing import Optional

from ..analytics import (
    BloodPressurePoint,
    BloodPressureStats,
    SeriesPoint,
    SeriesStats,
    WeeklySummary,
    WeightPoint,
)
from ..domain import (
    ActivityIntensity,
    BloodPressure,
    BodyWeight,
    CarbIntake,
    GlucoseReading,
    GlucoseUnit,
    InsulinDose,
    Meal,
    MealRelation,
    MealSlot,
    MeasurementRecord,
    MedicationRecord,
    PhysicalActivity,
    TargetRanges,
    UnitPreferences,
    UserProfile,
    WeightUnit,
    convert_glucose,
    convert_weight,
    record_type_tag,
)
from ..errors import ValidationError
from ..times import format_timestamp, parse_timestamp

MGDL = GlucoseUnit.MG_PER_DL
KG = WeightUnit.KILOGRAMS


def _slot_to_api(slot: Optional[MealSlot]) -> Optional[dict]:
    if slot is None:
        return None
    return {"meal": slot.meal.value, "relation": slot.relation.value}


def _slot_from_api(raw) -> Optional[MealSlot]:
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise ValidationError("slot must be an object with meal and relation", code="record.bad_slot")
    try:
        return MealSlot(Meal(raw["meal"]), MealRelation(raw["relation"]))
    except (KeyError, ValueError):
        raise ValidationError("slot must name a meal and a before/after relation", code="record.bad_slot")


def _enum_from_api(enum_cls, raw, code: str):
    try:
        return enum_cls(raw)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise ValidationError(f"expected one of: {allowed}", code=code)


def record_to_api(record: MeasurementRecord, prefs: UnitPreferences) -> dict:
    out: dict = {"id": record.id, "type": record_type_tag(record), "patient": record.patient,
                 "note": record.note}
    if isinstance(record, GlucoseReading):
        out.update(
            taken_at=format_timestamp(record.taken_at),
            value=convert_glucose(record.value, MGDL, prefs.glucose),
            unit=prefs.glucose.value,
            slot=_slot_to_api(record.slot),
        )
    elif isinstance(record, InsulinDose):
        out.update(
            taken_at=format_timestamp(record.taken_at),
            units=record.units,
            unit="IU",
            insulin_kind=record.insulin_kind,
            slot=_slot_to_api(record.slot),
        )
    elif isinstance(record, CarbIntake):
        out.update(
            taken_at=format_timestamp(record.taken_at),
            grams=record.grams,
            unit="g",
            slot=_slot_to_api(record.slot),
        )
    elif isinstance(record, MedicationRecord):
        out.update(
            taken_at=format_timestamp(record.taken_at),
            name=record.name,
            dose=record.dose,
        )
    elif isinstance(record, PhysicalActivity):
        out.update(
            performed_at=format_timestamp(record.performed_at),
            intensity=record.intensity.value,
            duration_min=record.duration_min,
            unit="min",
        )
    elif isinstance(record, BodyWeight):
        out.update(
            measured_at=format_timestamp(record.measured_at),
            value=convert_weight(record.value, KG, prefs.weight),
            unit=prefs.weight.value,
        )
    elif isinstance(record, BloodPressure):
        out.update(
            measured_at=format_timestamp(record.measured_at),
            systolic=record.systolic,
            diastolic=record.diastolic,
            unit="mmHg",
        )
    else:
        raise TypeError(f"not a measurement record: {type(record).__name__}")
    return out


_ALLOWED_KEYS = {
    "glucose": {"taken_at", "value", "unit", "slot", "note"},
    "insulin": {"taken_at", "units", "insulin_kind", "slot", "note"},
    "carbs": {"taken_at", "grams", "slot", "note"},
    "medication": {"taken_at", "name", "dose", "note"},
    "activity": {"performed_at", "intensity", "duration_min", "note"},
    "weight": {"measured_at", "value", "unit", "note"},
    "blood_pressure": {"measured_at", "systolic", "diastolic", "note"},
}


def record_from_api(
    rtype: str,
    payload: dict,
    *,
    record_id: str,
    patient: str,
    prefs: UnitPreferences,
) -> MeasurementRecord:
    """Build a canonical-unit record from a request body.

    The body is checked for unknown keys here; value bounds are the
    validation layer's job and stay out of this function.
    """
    if rtype not in _ALLOWED_KEYS:
        raise ValidationError(f"unknown record type {rtype!r}", code="record.unknown_type")
    if not isinstance(payload, dict):
        raise ValidationError("request body must be a JSON object", code="validation_failed")
    unknown = set(payload) - _ALLOWED_KEYS[rtype]
    if unknown:
        raise ValidationError(
            f"unknown fields for {rtype}: {', '.join(sorted(unknown))}",
            code="record.unknown_field",
        )

    note = payload.get("note")
    if rtype == "glucose":
        unit = prefs.glucose if "unit" not in payload else _enum_from_api(
            GlucoseUnit, payload["unit"], "record.bad_unit")
        return GlucoseReading(
            id=record_id, patient=patient,
            value=convert_glucose(_require(payload, "value"), unit, MGDL),
            taken_at=parse_timestamp(_require(payload, "taken_at")),
            slot=_slot_from_api(payload.get("slot")),
            note=note,
        )
    if rtype == "insulin":
        return InsulinDose(
            id=record_id, patient=patient,
            units=_require(payload, "units"),
            insulin_kind=_require(payload, "insulin_kind"),
            taken_at=parse_timestamp(_require(payload, "taken_at")),
            slot=_slot_from_api(payload.get("slot")),
            note=note,
        )
    if rtype == "carbs":
        return CarbIntake(
            id=record_id, patient=patient,
            grams=_require(payload, "grams"),
            taken_at=parse_timestamp(_require(payload, "taken_at")),
            slot=_slot_from_api(payload.get("slot")),
            note=note,
        )
    if rtype == "medication":
        return MedicationRecord(
            id=record_id, patient=patient,
            name=_require(payload, "name"),
            dose=_require(payload, "dose"),
            taken_at=parse_timestamp(_require(payload, "taken_at")),
            note=note,
        )
    if rtype == "activity":
        return PhysicalActivity(
            id=record_id, patient=patient,
            intensity=_enum_from_api(
                ActivityIntensity, _require(payload, "intensity"), "record.bad_intensity"),
            duration_min=_require(payload, "duration_min"),
            performed_at=parse_timestamp(_require(payload, "performed_at")),
            note=note,
        )
    if rtype == "weight":
        unit = prefs.weight if "unit" not in payload else _enum_from_api(
            WeightUnit, payload["unit"], "record.bad_unit")
        return BodyWeight(
            id=record_id, patient=patient,
            value=convert_weight(_require(payload, "value"), unit, KG),
            measured_at=parse_timestamp(_require(payload, "measured_at")),
            note=note,
        )
    return BloodPressure(
        id=record_id, patient=patient,
        systolic=_require(payload, "systolic"),
        diastolic=_require(payload, "diastolic"),
        measured_at=parse_timestamp(_require(payload, "measured_at")),
        note=note,
    )


def _require(payload: dict, key: str):
    if key not in payload:
        raise ValidationError(f"missing required field {key!r}", code="record.missing_field")
    return payload[key]


def profile_to_api(profile: UserProfile) -> dict:
    t = profile.targets
    return {
        "id": profile.id,
        "role": profile.role.value,
        "display_name": profile.display_name,
        "email": profile.email,
        "language": profile.language.value,
        "units": {
            "glucose": profile.unit_prefs.glucose.value,
            "weight": profile.unit_prefs.weight.value,
        },
        "height_m": profile.height_m,
        "targets": None if t is None else {
            "glucose_low": t.glucose_low,
            "glucose_high": t.glucose_high,
            "bp_sys_high": t.bp_sys_high,
            "bp_dia_high": t.bp_dia_high,
        },
    }


def _stats_to_api(stats: SeriesStats, scale: float = 1.0) -> dict:
    def conv(x):
        return None if x is None else x * scale

    return {
        "count": stats.count,
        "mean": conv(stats.mean),
        "min": conv(stats.min),
        "max": conv(stats.max),
        "pct_below": stats.pct_below,
        "pct_in_range": stats.pct_in_range,
        "pct_above": stats.pct_above,
    }


def glucose_series_to_api(
    points: list[SeriesPoint],
    stats: SeriesStats,
    unit: GlucoseUnit,
    targets: TargetRanges,
) -> dict:
    return {
        "unit": unit.value,
        "targets": {
            "low": convert_glucose(targets.glucose_low, MGDL, unit),
            "high": convert_glucose(targets.glucose_high, MGDL, unit),
        },
        "points": [
            {"t": format_timestamp(p.t), "value": p.value, "level": p.level.value}
            for p in points
        ],
        "stats": _stats_to_api(stats),
    }


def weight_series_to_api(
    points: list[WeightPoint],
    stats: SeriesStats,
    unit: WeightUnit,
) -> dict:
    def conv(kg: float) -> float:
        return convert_weight(kg, KG, unit)

    scale = conv(1.0)
    return {
        "unit": unit.value,
        "points": [
            {"t": format_timestamp(p.t), "weight": conv(p.weight_kg), "bmi": p.bmi}
            for p in points
        ],
        "stats": _stats_to_api(stats, scale=scale),
    }


def bp_series_to_api(
    points: list[BloodPressurePoint],
    stats: BloodPressureStats,
    targets: TargetRanges,
) -> dict:
    return {
        "unit": "mmHg",
        "targets": {"sys_high": targets.bp_sys_high, "dia_high": targets.bp_dia_high},
        "points": [
            {
                "t": format_timestamp(p.t),
                "systolic": p.systolic,
                "diastolic": p.diastolic,
                "level": p.level.value,
            }
            for p in points
        ],
        "stats": {
            "systolic": _stats_to_api(stats.systolic),
            "diastolic": _stats_to_api(stats.diastolic),
        },
    }


def weekly_to_api(summary: WeeklySummary, tz_offset_min: int, unit: GlucoseUnit) -> dict:
    def conv(mgdl: Optional[float]) -> Optional[float]:
        return None if mgdl is None else convert_glucose(mgdl, MGDL, unit)

    days = []
    for day in summary.days:
        days.append({
            "day": day.day.isoformat(),
            "meals": {
                meal.value: {
                    "glucose_before": conv(cell.glucose_before),
                    "glucose_after": conv(cell.glucose_after),
                    "insulin_units": cell.insulin_units,
                    "carbs_g": cell.carbs_g,
                }
                for meal, cell in day.meals.items()
            },
            "activities": [
                {"intensity": a.intensity.value, "duration_min": a.duration_min}
                for a in day.activities
            ],
        })
    return {
        "week_start": summary.week_start.isoformat(),
        "tz_offset_min": tz_offset_min,
        "glucose_unit": unit.value,
        "days": days,
    }
