"""CSV import/export: one file per entity type, canonical units throughout.

The on-disk schema (column order matters, header row required, timestamps
ISO-8601 UTC):

  users.csv           id,role,display_name,email,credential_hash,language,
                      glucose_unit,weight_unit,height_m,
                      glucose_low,glucose_high,bp_sys_high,bp_dia_high
  links.csv           patient,supervisor,created_at,status
  glucose.csv         id,patient,taken_at,value_mgdl,meal,relation,note
  insulin.csv         id,patient,taken_at,units,insulin_kind,meal,relation,note
  carbs.csv           id,patient,taken_at,grams,meal,relation,note
  medication.csv      id,patient,taken_at,name,dose,note
  activity.csv        id,patient,performed_at,intensity,duration_min,note
  weight.csv          id,patient,measured_at,value_kg,note
  blood_pressure.csv  id,patient,measured_at,systolic,diastolic,note

Optional cells (notes, meal slots, supervisor-only profile columns) are
empty strings. Users and links are part of the set so that importing into
an empty store never breaks referential integrity.
"""

from __future__ import annotations

import csv
import os
from typing import Callable, Optional

from ..domain import (
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
    MedicationRecord,
    PhysicalActivity,
    Role,
    TargetRanges,
    UnitPreferences,
    UserProfile,
    WeightUnit,
    record_type_tag,
)
from ..errors import GlucologError, ValidationError
from ..persistence.store import Store
from ..supervision.links import LinkStatus, SupervisionLink
from ..times import format_timestamp, parse_timestamp


class CsvError(ValidationError):
    """A malformed row, pinned to its file and physical line number."""

    def __init__(self, file: str, row: int, problem: str):
        super().__init__(f"{file}, row {row}: {problem}", code="csv.bad_row")
        self.file = file
        self.row = row


USER_COLUMNS = [
    "id", "role", "display_name", "email", "credential_hash", "language",
    "glucose_unit", "weight_unit", "height_m",
    "glucose_low", "glucose_high", "bp_sys_high", "bp_dia_high",
]
LINK_COLUMNS = ["patient", "supervisor", "created_at", "status"]
RECORD_COLUMNS = {
    "glucose": ["id", "patient", "taken_at", "value_mgdl", "meal", "relation", "note"],
    "insulin": ["id", "patient", "taken_at", "units", "insulin_kind", "meal", "relation", "note"],
    "carbs": ["id", "patient", "taken_at", "grams", "meal", "relation", "note"],
    "medication": ["id", "patient", "taken_at", "name", "dose", "note"],
    "activity": ["id", "patient", "performed_at", "intensity", "duration_min", "note"],
    "weight": ["id", "patient", "measured_at", "value_kg", "note"],
    "blood_pressure": ["id", "patient", "measured_at", "systolic", "diastolic", "note"],
}

_opt = lambda v: v if v != "" else None  # noqa: E731


def export_csv(store: Store, dest_dir: str) -> dict[str, int]:
    """Write the store's contents under ``dest_dir``; returns rows per file."""
    os.makedirs(dest_dir, exist_ok=True)
    written: dict[str, int] = {}

    def dump(filename: str, columns: list[str], rows: list[list]):
        with open(os.path.join(dest_dir, filename), "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(columns)
            writer.writerows(rows)
        written[filename] = len(rows)

    user_rows = []
    for u in sorted(store.list_users(), key=lambda u: u.id):
        t = u.targets
        user_rows.append([
            u.id, u.role.value, u.display_name, u.email, u.credential_hash,
            u.language.value, u.unit_prefs.glucose.value, u.unit_prefs.weight.value,
            "" if u.height_m is None else u.height_m,
            "" if t is None else t.glucose_low,
            "" if t is None else t.glucose_high,
            "" if t is None else t.bp_sys_high,
            "" if t is None else t.bp_dia_high,
        ])
    dump("users.csv", USER_COLUMNS, user_rows)

    link_rows = [
        [l.patient, l.supervisor, format_timestamp(l.created_at), l.status.value]
        for l in store.list_links()
    ]
    dump("links.csv", LINK_COLUMNS, link_rows)

    by_type: dict[str, list] = {tag: [] for tag in RECORD_COLUMNS}
    for record in store.all_records():
        by_type[record_type_tag(record)].append(record)

    def slot_cells(record) -> list[str]:
        if record.slot is None:
            return ["", ""]
        return [record.slot.meal.value, record.slot.relation.value]

    note = lambda r: r.note if r.note is not None else ""  # noqa: E731

    dump("glucose.csv", RECORD_COLUMNS["glucose"], [
        [r.id, r.patient, format_timestamp(r.taken_at), r.value, *slot_cells(r), note(r)]
        for r in by_type["glucose"]
    ])
    dump("insulin.csv", RECORD_COLUMNS["insulin"], [
        [r.id, r.patient, format_timestamp(r.taken_at), r.units, r.insulin_kind,
         *slot_cells(r), note(r)]
        for r in by_type["insulin"]
    ])
    dump("carbs.csv", RECORD_COLUMNS["carbs"], [
        [r.id, r.patient, format_timestamp(r.taken_at), r.grams, *slot_cells(r), note(r)]
        for r in by_type["carbs"]
    ])
    dump("medication.csv", RECORD_COLUMNS["medication"], [
        [r.id, r.patient, format_timestamp(r.taken_at), r.name, r.dose, note(r)]
        for r in by_type["medication"]
    ])
    dump("activity.csv", RECORD_COLUMNS["activity"], [
        [r.id, r.patient, format_timestamp(r.performed_at), r.intensity.value,
         r.duration_min, note(r)]
        for r in by_type["activity"]
    ])
    dump("weight.csv", RECORD_COLUMNS["weight"], [
        [r.id, r.patient, format_timestamp(r.measured_at), r.value, note(r)]
        for r in by_type["weight"]
    ])
    dump("blood_pressure.csv", RECORD_COLUMNS["blood_pressure"], [
        [r.id, r.patient, format_timestamp(r.measured_at), r.systolic, r.diastolic, note(r)]
        for r in by_type["blood_pressure"]
    ])
    return written


# -- import -------------------------------------------------------------------


def _read_rows(path: str, filename: str, columns: list[str]):
    """Yield (physical_row_number, cells-by-column) for each data row."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvError(filename, 1, "file is empty, expected a header row")
        if header != columns:
            raise CsvError(filename, 1, f"header must be exactly: {','.join(columns)}")
        for row_no, cells in enumerate(reader, start=2):
            if not cells:
                continue
            if len(cells) != len(columns):
                raise CsvError(
                    filename, row_no,
                    f"expected {len(columns)} columns, found {len(cells)}")
            yield row_no, dict(zip(columns, cells))


def _parse(filename: str, row: int, what: str, fn: Callable, raw: str):
    try:
        return fn(raw)
    except (GlucologError, ValueError, TypeError):
        raise CsvError(filename, row, f"bad {what}: {raw!r}")


def _parse_slot(filename: str, row: int, cells: dict) -> Optional[MealSlot]:
    meal, relation = cells["meal"], cells["relation"]
    if meal == "" and relation == "":
        return None
    if meal == "" or relation == "":
        raise CsvError(filename, row, "meal and relation must be both set or both empty")
    return MealSlot(
        _parse(filename, row, "meal", Meal, meal),
        _parse(filename, row, "relation", MealRelation, relation),
    )


def import_csv(store: Store, src_dir: str) -> dict[str, int]:
    """Load a directory written by ``export_csv`` into ``store``.

    Users load first, then links, then records, so a consistent export
    always satisfies the store's referential checks. The first malformed
    row aborts the import with its file and row number. Individual files
    may be absent; the directory itself may not.
    """
    if not os.path.isdir(src_dir):
        raise ValidationError(f"not a directory: {src_dir}", code="csv.missing_dir")

    loaded: dict[str, int] = {}

    def path_of(filename: str) -> Optional[str]:
        p = os.path.join(src_dir, filename)
        return p if os.path.exists(p) else None

    users_path = path_of("users.csv")
    if users_path:
        n = 0
        for row_no, c in _read_rows(users_path, "users.csv", USER_COLUMNS):
            role = _parse("users.csv", row_no, "role", Role, c["role"])
            target_cells = [c["glucose_low"], c["glucose_high"], c["bp_sys_high"], c["bp_dia_high"]]
            if all(cell == "" for cell in target_cells):
                targets = None
            elif any(cell == "" for cell in target_cells):
                raise CsvError("users.csv", row_no, "target columns must be all set or all empty")
            else:
                targets = TargetRanges(
                    glucose_low=_parse("users.csv", row_no, "glucose_low", float, c["glucose_low"]),
                    glucose_high=_parse("users.csv", row_no, "glucose_high", float, c["glucose_high"]),
                    bp_sys_high=_parse("users.csv", row_no, "bp_sys_high", int, c["bp_sys_high"]),
                    bp_dia_high=_parse("users.csv", row_no, "bp_dia_high", int, c["bp_dia_high"]),
                )
            profile = UserProfile(
                id=c["id"],
                role=role,
                display_name=c["display_name"],
                email=c["email"],
                credential_hash=c["credential_hash"],
                language=_parse("users.csv", row_no, "language", Language, c["language"]),
                unit_prefs=UnitPreferences(
                    glucose=_parse("users.csv", row_no, "glucose_unit", GlucoseUnit, c["glucose_unit"]),
                    weight=_parse("users.csv", row_no, "weight_unit", WeightUnit, c["weight_unit"]),
                ),
                height_m=None if c["height_m"] == "" else _parse(
                    "users.csv", row_no, "height_m", float, c["height_m"]),
                targets=targets,
            )
            _store_row(store.add_user, profile, "users.csv", row_no)
            n += 1
        loaded["users.csv"] = n

    links_path = path_of("links.csv")
    if links_path:
        n = 0
        for row_no, c in _read_rows(links_path, "links.csv", LINK_COLUMNS):
            link = SupervisionLink(
                patient=c["patient"],
                supervisor=c["supervisor"],
                created_at=_parse("links.csv", row_no, "created_at", parse_timestamp, c["created_at"]),
                status=_parse("links.csv", row_no, "status", LinkStatus, c["status"]),
            )
            _store_row(store.add_link, link, "links.csv", row_no)
            n += 1
        loaded["links.csv"] = n

    builders = {
        "glucose": lambda f, r, c: GlucoseReading(
            id=c["id"], patient=c["patient"],
            taken_at=_parse(f, r, "taken_at", parse_timestamp, c["taken_at"]),
            value=_parse(f, r, "value_mgdl", float, c["value_mgdl"]),
            slot=_parse_slot(f, r, c), note=_opt(c["note"])),
        "insulin": lambda f, r, c: InsulinDose(
            id=c["id"], patient=c["patient"],
            taken_at=_parse(f, r, "taken_at", parse_timestamp, c["taken_at"]),
            units=_parse(f, r, "units", float, c["units"]),
            insulin_kind=c["insulin_kind"],
            slot=_parse_slot(f, r, c), note=_opt(c["note"])),
        "carbs": lambda f, r, c: CarbIntake(
            id=c["id"], patient=c["patient"],
            taken_at=_parse(f, r, "taken_at", parse_timestamp, c["taken_at"]),
            grams=_parse(f, r, "grams", float, c["grams"]),
            slot=_parse_slot(f, r, c), note=_opt(c["note"])),
        "medication": lambda f, r, c: MedicationRecord(
            id=c["id"], patient=c["patient"],
            taken_at=_parse(f, r, "taken_at", parse_timestamp, c["taken_at"]),
            name=c["name"], dose=c["dose"], note=_opt(c["note"])),
        "activity": lambda f, r, c: PhysicalActivity(
            id=c["id"], patient=c["patient"],
            performed_at=_parse(f, r, "performed_at", parse_timestamp, c["performed_at"]),
            intensity=_parse(f, r, "intensity", ActivityIntensity, c["intensity"]),
            duration_min=_parse(f, r, "duration_min", int, c["duration_min"]),
            note=_opt(c["note"])),
        "weight": lambda f, r, c: BodyWeight(
            id=c["id"], patient=c["patient"],
            measured_at=_parse(f, r, "measured_at", parse_timestamp, c["measured_at"]),
            value=_parse(f, r, "value_kg", float, c["value_kg"]),
            note=_opt(c["note"])),
        "blood_pressure": lambda f, r, c: BloodPressure(
            id=c["id"], patient=c["patient"],
            measured_at=_parse(f, r, "measured_at", parse_timestamp, c["measured_at"]),
            systolic=_parse(f, r, "systolic", int, c["systolic"]),
            diastolic=_parse(f, r, "diastolic", int, c["diastolic"]),
            note=_opt(c["note"])),
    }
    for tag, columns in RECORD_COLUMNS.items():
        filename = f"{tag}.csv"
        path = path_of(filename)
        if path is None:
            continue
        n = 0
        for row_no, c in _read_rows(path, filename, columns):
            record = builders[tag](filename, row_no, c)
            _store_row(store.put_record, record, filename, row_no)
            n += 1
        loaded[filename] = n
    return loaded


def _store_row(put: Callable, entity, filename: str, row_no: int) -> None:
    try:
        put(entity)
    except GlucologError as exc:
        raise CsvError(filename, row_no, exc.message)
