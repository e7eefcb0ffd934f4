"""Deterministic demo dataset for manual testing and the seed CLI command.

Everything is fixed: ids, timestamps, and values. Seeding the same empty
store twice (or on two machines) yields byte-identical contents except for
the salted credential hashes.
"""

from __future__ import annotations

from datetime import date

from ..domain import (
    ActivityIntensity,
    BloodPressure,
    BodyWeight,
    CarbIntake,
    GlucoseReading,
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
)
from ..persistence.store import Store
from ..supervision.links import SupervisionLink
from ..times import SECONDS_PER_DAY, date_to_epoch_utc
from .auth import hash_password

SEED_WEEK_START = date(2026, 8, 3)  # a Monday
SEED_PASSWORD = "diabetes-demo"

_MEAL_HOURS = {Meal.BREAKFAST: 8, Meal.LUNCH: 13, Meal.SNACK: 17, Meal.DINNER: 20}

# (day, meal, glucose before, glucose after, insulin units, carbs g)
_DIARY = [
    (0, Meal.BREAKFAST, 92.0, 138.0, 4.0, 45.0),
    (0, Meal.LUNCH, 101.0, 152.0, 6.0, 60.0),
    (0, Meal.DINNER, 110.0, 147.0, 5.0, 50.0),
    (1, Meal.BREAKFAST, 88.0, 129.0, 4.0, 40.0),
    (1, Meal.SNACK, 120.0, 145.0, 0.0, 25.0),
    (1, Meal.DINNER, 105.0, 188.0, 6.0, 70.0),
    (2, Meal.BREAKFAST, 96.0, 142.0, 4.0, 45.0),
    (2, Meal.LUNCH, 64.0, 118.0, 5.0, 55.0),
    (3, Meal.BREAKFAST, 90.0, 135.0, 4.0, 45.0),
    (3, Meal.DINNER, 117.0, 201.0, 7.0, 80.0),
    (4, Meal.BREAKFAST, 85.0, 126.0, 4.0, 40.0),
    (4, Meal.LUNCH, 99.0, 149.0, 6.0, 60.0),
    (5, Meal.BREAKFAST, 102.0, 155.0, 5.0, 50.0),
    (5, Meal.DINNER, 95.0, 140.0, 5.0, 55.0),
    (6, Meal.BREAKFAST, 93.0, 131.0, 4.0, 45.0),
    (6, Meal.LUNCH, 108.0, 162.0, 6.0, 65.0),
]

# (day, hour, intensity, minutes)
_ACTIVITIES = [
    (0, 18, ActivityIntensity.MODERATE, 30),
    (2, 7, ActivityIntensity.LOW, 45),
    (4, 19, ActivityIntensity.HIGH, 25),
    (6, 10, ActivityIntensity.MODERATE, 60),
]

# (day, weight kg)
_WEIGHTS = [(0, 71.4), (2, 71.1), (4, 70.8), (6, 70.6)]

# (day, systolic, diastolic)
_BPS = [(0, 124, 79), (3, 136, 84), (6, 121, 76)]


def seed_store(store: Store, pbkdf2_iterations: int = 10_000) -> dict[str, str]:
    """Populate an empty-ish store with the demo accounts and one diary week.

    Returns the demo account emails keyed by id. All demo passwords are
    ``diabetes-demo``.
    """
    start = date_to_epoch_utc(SEED_WEEK_START)
    credential = hash_password(SEED_PASSWORD, pbkdf2_iterations)

    ana = UserProfile(
        id="demo-ana", role=Role.PATIENT, display_name="Ana Moreno",
        email="ana@example.org", credential_hash=credential,
        language=Language.ES, unit_prefs=UnitPreferences(),
        height_m=1.64, targets=TargetRanges(glucose_low=70.0, glucose_high=180.0),
    )
    sam = UserProfile(
        id="demo-sam", role=Role.SUPERVISOR, display_name="Sam Reyes",
        email="sam@example.org", credential_hash=credential,
    )
    store.add_user(ana)
    store.add_user(sam)
    store.add_link(SupervisionLink(patient=ana.id, supervisor=sam.id, created_at=start))

    def at(day: int, hour: int, minute: int = 0) -> int:
        return start + day * SECONDS_PER_DAY + hour * 3600 + minute * 60

    for i, (day, meal, before, after, units, grams) in enumerate(_DIARY):
        hour = _MEAL_HOURS[meal]
        store.put_record(GlucoseReading(
            id=f"demo-g{i:03d}b", patient=ana.id, value=before,
            taken_at=at(day, hour), slot=MealSlot(meal, MealRelation.BEFORE)))
        store.put_record(GlucoseReading(
            id=f"demo-g{i:03d}a", patient=ana.id, value=after,
            taken_at=at(day, hour + 2), slot=MealSlot(meal, MealRelation.AFTER)))
        if units > 0:
            store.put_record(InsulinDose(
                id=f"demo-i{i:03d}", patient=ana.id, units=units,
                insulin_kind="rapid", taken_at=at(day, hour, 5),
                slot=MealSlot(meal, MealRelation.BEFORE)))
        store.put_record(CarbIntake(
            id=f"demo-c{i:03d}", patient=ana.id, grams=grams,
            taken_at=at(day, hour, 10), slot=MealSlot(meal, MealRelation.BEFORE)))

    for i, (day, hour, intensity, minutes) in enumerate(_ACTIVITIES):
        store.put_record(PhysicalActivity(
            id=f"demo-a{i:03d}", patient=ana.id, intensity=intensity,
            duration_min=minutes, performed_at=at(day, hour)))

    for i, (day, kg) in enumerate(_WEIGHTS):
        store.put_record(BodyWeight(
            id=f"demo-w{i:03d}", patient=ana.id, value=kg, measured_at=at(day, 7, 30)))

    for i, (day, sys, dia) in enumerate(_BPS):
        store.put_record(BloodPressure(
            id=f"demo-b{i:03d}", patient=ana.id, systolic=sys, diastolic=dia,
            measured_at=at(day, 7, 35)))

    store.put_record(MedicationRecord(
        id="demo-m000", patient=ana.id, name="metformin", dose="850 mg",
        taken_at=at(0, 8, 15)))

    return {ana.id: ana.email, sam.id: sam.email}
