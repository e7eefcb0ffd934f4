"""Canonical dict encoding for stored entities.

One flat JSON-safe shape per entity, shared by the SQLite payload column,
the backup archive, and the import/export code. Values stay in canonical
units; timestamps stay epoch seconds.
"""

from __future__ import annotations

import dataclasses
from enum import Enum

from ..domain import (
    ActivityIntensity,
    GlucoseUnit,
    Language,
    Meal,
    MealRelation,
    MealSlot,
    MeasurementRecord,
    RECORD_TYPES,
    Role,
    TargetRanges,
    UnitPreferences,
    UserProfile,
    WeightUnit,
    record_type_tag,
)
from ..supervision.links import LinkStatus, SupervisionLink


def record_to_dict(record: MeasurementRecord) -> dict:
    d: dict = {"type": record_type_tag(record)}
    for f in dataclasses.fields(record):
        v = getattr(record, f.name)
        if isinstance(v, Enum):
            v = v.value
        elif isinstance(v, MealSlot):
            v = {"meal": v.meal.value, "relation": v.relation.value}
        d[f.name] = v
    return d


def record_from_dict(d: dict) -> MeasurementRecord:
    cls = RECORD_TYPES[d["type"]]
    kwargs = {}
    for f in dataclasses.fields(cls):
        v = d.get(f.name)
        if f.name == "slot":
            v = MealSlot(Meal(v["meal"]), MealRelation(v["relation"])) if v else None
        elif f.name == "intensity":
            v = ActivityIntensity(v)
        kwargs[f.name] = v
    return cls(**kwargs)


def profile_to_dict(profile: UserProfile) -> dict:
    t = profile.targets
    return {
        "id": profile.id,
        "role": profile.role.value,
        "display_name": profile.display_name,
        "email": profile.email,
        "credential_hash": profile.credential_hash,
        "language": profile.language.value,
        "glucose_unit": profile.unit_prefs.glucose.value,
        "weight_unit": profile.unit_prefs.weight.value,
        "height_m": profile.height_m,
        "targets": None if t is None else {
            "glucose_low": t.glucose_low,
            "glucose_high": t.glucose_high,
            "bp_sys_high": t.bp_sys_high,
            "bp_dia_high": t.bp_dia_high,
        },
    }


def profile_from_dict(d: dict) -> UserProfile:
    t = d.get("targets")
    return UserProfile(
        id=d["id"],
        role=Role(d["role"]),
        display_name=d["display_name"],
        email=d["email"],
        credential_hash=d["credential_hash"],
        language=Language(d.get("language", "en")),
        unit_prefs=UnitPreferences(
            glucose=GlucoseUnit(d.get("glucose_unit", "mg/dL")),
            weight=WeightUnit(d.get("weight_unit", "kg")),
        ),
        height_m=d.get("height_m"),
        targets=None if t is None else TargetRanges(
            glucose_low=t["glucose_low"],
            glucose_high=t["glucose_high"],
            bp_sys_high=t["bp_sys_high"],
            bp_dia_high=t["bp_dia_high"],
        ),
    )


def link_to_dict(link: SupervisionLink) -> dict:
    return {
        "patient": link.patient,
        "supervisor": link.supervisor,
        "created_at": link.created_at,
        "status": link.status.value,
    }


def link_from_dict(d: dict) -> SupervisionLink:
    return SupervisionLink(
        patient=d["patient"],
        supervisor=d["supervisor"],
        created_at=d["created_at"],
        status=LinkStatus(d["status"]),
    )
