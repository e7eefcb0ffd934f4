"""Store semantics, snapshot archives, and the backup scheduler.

The ``store`` fixture runs every test against both backends, so the SQLite
implementation is held to exactly the in-memory semantics.
"""

import json

import pytest

from glucolog.domain import (
    BloodPressure,
    BodyWeight,
    GlucoseReading,
    InsulinDose,
    Meal,
    MealRelation,
    MealSlot,
    MedicationRecord,
    PhysicalActivity,
    ActivityIntensity,
    CarbIntake,
    record_type_tag,
)
from glucolog.errors import ConflictError, NotFoundError, ValidationError
from glucolog.persistence import (
    BackupScheduler,
    MemoryStore,
    Session,
    SqliteStore,
    backup_snapshot,
    new_id,
    restore_snapshot,
    verify_archive,
)
from glucolog.supervision import LinkStatus, SupervisionLink

from conftest import make_patient, make_supervisor

T0 = 1_700_000_000


def reading(rid, patient="p1", value=100.0, at=T0, **kw):
    return GlucoseReading(id=rid, patient=patient, value=value, taken_at=at, **kw)


class TestUsers:
    def test_add_and_get(self, store):
        alice = make_patient("p1", display_name="Alice")
        store.add_user(alice)
        assert store.get_user("p1") == alice

    def test_email_lookup(self, store):
        store.add_user(make_patient("p1", email="alice@example.org"))
        hit = store.find_user_by_email("alice@example.org")
        assert hit is not None and hit.id == "p1"
        assert store.find_user_by_email("nobody@example.org") is None

    def test_duplicate_id_rejected(self, store):
        store.add_user(make_patient("p1"))
        with pytest.raises(ConflictError):
            store.add_user(make_patient("p1", email="other@example.org"))

    def test_duplicate_email_rejected(self, store):
        store.add_user(make_patient("p1", email="same@example.org"))
        with pytest.raises(ConflictError) as exc:
            store.add_user(make_patient("p2", email="same@example.org"))
        assert exc.value.code == "email_taken"

    def test_update_changes_profile(self, store):
        store.add_user(make_patient("p1", display_name="Alice"))
        store.update_user(store.get_user("p1").with_updates(display_name="Alicia"))
        assert store.get_user("p1").display_name == "Alicia"

    def test_update_frees_old_email(self, store):
        store.add_user(make_patient("p1", email="old@example.org"))
        store.update_user(store.get_user("p1").with_updates(email="new@example.org"))
        assert store.find_user_by_email("old@example.org") is None
        assert store.find_user_by_email("new@example.org").id == "p1"

    def test_update_cannot_steal_email(self, store):
        store.add_user(make_patient("p1", email="a@example.org"))
        store.add_user(make_patient("p2", email="b@example.org"))
        with pytest.raises(ConflictError):
            store.update_user(store.get_user("p2").with_updates(email="a@example.org"))

    def test_invalid_profile_rejected(self, store):
        with pytest.raises(ValidationError):
            store.add_user(make_patient("p1", email="NOT-AN-EMAIL"))

    def test_unknown_user_raises(self, store):
        with pytest.raises(NotFoundError):
            store.get_user("ghost")


class TestRecords:
    @pytest.fixture(autouse=True)
    def _users(self, store):
        store.add_user(make_patient("p1"))
        store.add_user(make_patient("p2"))
        store.add_user(make_supervisor("s1"))

    def test_round_trip_every_type(self, store):
        slot = MealSlot(Meal.LUNCH, MealRelation.BEFORE)
        records = [
            GlucoseReading(id="g1", patient="p1", value=112.5, taken_at=T0, slot=slot, note="fasting"),
            InsulinDose(id="i1", patient="p1", units=4.0, insulin_kind="aspart", taken_at=T0 + 1, slot=slot),
            CarbIntake(id="c1", patient="p1", grams=45.0, taken_at=T0 + 2),
            MedicationRecord(id="m1", patient="p1", name="metformin", dose="850 mg", taken_at=T0 + 3),
            PhysicalActivity(id="a1", patient="p1", intensity=ActivityIntensity.MODERATE,
                             duration_min=30, performed_at=T0 + 4),
            BodyWeight(id="w1", patient="p1", value=71.2, measured_at=T0 + 5),
            BloodPressure(id="b1", patient="p1", systolic=120, diastolic=78, measured_at=T0 + 6),
        ]
        for rec in records:
            store.put_record(rec)
        for rec in records:
            assert store.get_record(rec.id) == rec

    def test_duplicate_id_rejected(self, store):
        store.put_record(reading("g1"))
        with pytest.raises(ConflictError):
            store.put_record(reading("g1", value=120.0))

    def test_out_of_bounds_rejected(self, store):
        with pytest.raises(ValidationError):
            store.put_record(reading("g1", value=5.0))
        with pytest.raises(NotFoundError):
            store.get_record("g1")

    def test_unknown_owner_rejected(self, store):
        with pytest.raises(ValidationError) as exc:
            store.put_record(reading("g1", patient="ghost"))
        assert exc.value.code == "record.patient_unknown"

    def test_supervisor_cannot_own_records(self, store):
        with pytest.raises(ValidationError) as exc:
            store.put_record(reading("g1", patient="s1"))
        assert exc.value.code == "record.owner_not_patient"

    def test_update_keeps_identity(self, store):
        store.put_record(reading("g1", value=100.0))
        store.update_record(reading("g1", value=140.0, note="post lunch"))
        assert store.get_record("g1").value == 140.0

    def test_update_cannot_move_owner(self, store):
        store.put_record(reading("g1", patient="p1"))
        with pytest.raises(ValidationError):
            store.update_record(reading("g1", patient="p2"))
        assert store.get_record("g1").patient == "p1"

    def test_update_cannot_change_type(self, store):
        store.put_record(reading("g1"))
        with pytest.raises(ValidationError):
            store.update_record(CarbIntake(id="g1", patient="p1", grams=30.0, taken_at=T0))

    def test_update_validates(self, store):
        store.put_record(reading("g1", value=100.0))
        with pytest.raises(ValidationError):
            store.update_record(reading("g1", value=-1.0))
        assert store.get_record("g1").value == 100.0

    def test_delete(self, store):
        store.put_record(reading("g1"))
        store.delete_record("g1")
        with pytest.raises(NotFoundError):
            store.get_record("g1")
        with pytest.raises(NotFoundError):
            store.delete_record("g1")

    def test_query_filters_patient(self, store):
        store.put_record(reading("g1", patient="p1"))
        store.put_record(reading("g2", patient="p2"))
        assert [r.id for r in store.query_records("p1")] == ["g1"]

    def test_query_filters_types(self, store):
        store.put_record(reading("g1"))
        store.put_record(CarbIntake(id="c1", patient="p1", grams=30.0, taken_at=T0))
        only = store.query_records("p1", types=["carbs"])
        assert [r.id for r in only] == ["c1"]

    def test_query_window_half_open(self, store):
        for i, rid in enumerate(["a", "b", "c"]):
            store.put_record(reading(rid, at=T0 + i * 10))
        ids = [r.id for r in store.query_records("p1", window=(T0, T0 + 20))]
        assert ids == ["a", "b"]

    def test_query_sorted_with_stable_ties(self, store):
        store.put_record(reading("late", at=T0 + 60))
        store.put_record(reading("tie1", at=T0))
        store.put_record(reading("tie2", at=T0))
        ids = [r.id for r in store.query_records("p1")]
        assert ids == ["tie1", "tie2", "late"]

    def test_counts(self, store):
        store.put_record(reading("g1"))
        store.put_record(reading("g2", at=T0 + 1))
        store.put_record(BodyWeight(id="w1", patient="p1", value=70.0, measured_at=T0))
        c = store.counts()
        assert c["glucose"] == 2 and c["weight"] == 1 and c["users"] == 3


class TestLinks:
    @pytest.fixture(autouse=True)
    def _users(self, store):
        store.add_user(make_patient("p1"))
        store.add_user(make_supervisor("s1"))

    def test_add_and_fetch_active(self, store):
        store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0))
        link = store.get_active_link("p1", "s1")
        assert link is not None and link.status is LinkStatus.ACTIVE

    def test_one_active_per_pair(self, store):
        store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0))
        with pytest.raises(ConflictError):
            store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0 + 5))

    def test_revoked_link_is_kept(self, store):
        store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0))
        revoked = store.revoke_link("p1", "s1")
        assert revoked.status is LinkStatus.REVOKED
        assert store.get_active_link("p1", "s1") is None
        assert [l.status for l in store.list_links()] == [LinkStatus.REVOKED]

    def test_relink_after_revoke(self, store):
        store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0))
        store.revoke_link("p1", "s1")
        store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0 + 10))
        assert store.get_active_link("p1", "s1").created_at == T0 + 10
        assert len(store.list_links()) == 2

    def test_revoke_without_link(self, store):
        with pytest.raises(NotFoundError):
            store.revoke_link("p1", "s1")

    def test_link_needs_known_users(self, store):
        with pytest.raises(NotFoundError):
            store.add_link(SupervisionLink(patient="ghost", supervisor="s1", created_at=T0))


class TestSessions:
    def test_round_trip(self, store):
        s = Session(token_hash="h1", user_id="p1", issued_at=T0, expires_at=T0 + 3600)
        store.add_session(s)
        assert store.get_session("h1") == s
        assert store.get_session("nope") is None

    def test_delete(self, store):
        store.add_session(Session(token_hash="h1", user_id="p1", issued_at=T0, expires_at=T0 + 1))
        assert store.delete_session("h1") is True
        assert store.delete_session("h1") is False


class TestSqlitePersistence:
    def test_survives_reopen(self, tmp_path):
        path = str(tmp_path / "store.db")
        store = SqliteStore(path)
        store.add_user(make_patient("p1"))
        store.put_record(reading("g1", value=99.0))
        store.close()

        again = SqliteStore(path)
        try:
            assert again.get_user("p1").id == "p1"
            assert again.get_record("g1").value == 99.0
        finally:
            again.close()


def populated_store():
    store = MemoryStore()
    store.add_user(make_patient("p1", display_name="Alice"))
    store.add_user(make_patient("p2", display_name="Bob"))
    store.add_user(make_supervisor("s1", display_name="Carol"))
    store.add_link(SupervisionLink(patient="p1", supervisor="s1", created_at=T0))
    store.add_link(SupervisionLink(patient="p2", supervisor="s1", created_at=T0,
                                   status=LinkStatus.REVOKED))
    store.put_record(reading("g1", value=95.5, at=T0, slot=MealSlot(Meal.BREAKFAST, MealRelation.AFTER)))
    store.put_record(reading("g2", patient="p2", value=210.0, at=T0 + 30))
    store.put_record(InsulinDose(id="i1", patient="p1", units=6.0, insulin_kind="glargine", taken_at=T0))
    store.put_record(BodyWeight(id="w1", patient="p1", value=70.0, measured_at=T0))
    store.add_session(Session(token_hash="h1", user_id="p1", issued_at=T0, expires_at=T0 + 86400))
    return store


class TestBackup:
    def test_round_trip_preserves_everything(self, tmp_path):
        source = populated_store()
        path = str(tmp_path / "snap.jsonl")
        manifest = backup_snapshot(source, path, created_at=T0 + 100)
        assert manifest.checksum.startswith("sha256:")
        assert manifest.record_counts["glucose"] == 2

        target = MemoryStore()
        restore_snapshot(target, path)
        assert target.counts() == source.counts()
        assert target.all_records() == source.all_records()
        assert {u.id for u in target.list_users()} == {"p1", "p2", "s1"}
        assert target.list_links() == source.list_links()
        assert target.get_session("h1") == source.get_session("h1")

    def test_round_trip_into_sqlite(self, tmp_path):
        source = populated_store()
        path = str(tmp_path / "snap.jsonl")
        backup_snapshot(source, path, created_at=T0)
        target = SqliteStore(str(tmp_path / "restored.db"))
        try:
            restore_snapshot(target, path)
            assert target.counts() == source.counts()
        finally:
            target.close()

    def test_archive_layout(self, tmp_path):
        path = str(tmp_path / "snap.jsonl")
        backup_snapshot(populated_store(), path, created_at=T0)
        lines = [json.loads(l) for l in open(path, encoding="utf-8")]
        assert lines[0]["format"] == "glucolog-backup" and lines[0]["version"] == 1
        assert all(set(l) == {"type", "data"} for l in lines[1:-1])
        assert set(lines[-1]) == {"checksum"}

    def test_tampered_archive_rejected(self, tmp_path):
        path = str(tmp_path / "snap.jsonl")
        backup_snapshot(populated_store(), path, created_at=T0)
        raw = open(path, "rb").read().replace(b"95.5", b"19.5", 1)
        open(path, "wb").write(raw)
        with pytest.raises(ValidationError) as exc:
            verify_archive(path)
        assert exc.value.code == "backup.checksum_mismatch"
        target = MemoryStore()
        with pytest.raises(ValidationError):
            restore_snapshot(target, path)
        assert not any(target.counts().values())

    def test_truncated_archive_rejected(self, tmp_path):
        path = str(tmp_path / "snap.jsonl")
        backup_snapshot(populated_store(), path, created_at=T0)
        raw = open(path, "rb").read()
        open(path, "wb").write(raw[: len(raw) // 2])
        with pytest.raises(ValidationError):
            restore_snapshot(MemoryStore(), path)

    def test_restore_requires_empty_store(self, tmp_path):
        path = str(tmp_path / "snap.jsonl")
        backup_snapshot(populated_store(), path, created_at=T0)
        occupied = MemoryStore()
        occupied.add_user(make_patient("px"))
        with pytest.raises(ValidationError) as exc:
            restore_snapshot(occupied, path)
        assert exc.value.code == "backup.store_not_empty"


class FakeClock:
    def __init__(self, start=T0):
        self.now = start

    def __call__(self):
        return self.now

    def advance(self, seconds):
        self.now += seconds


class TestScheduler:
    def make(self, tmp_path, clock):
        store = MemoryStore()
        store.add_user(make_patient("p1"))
        store.put_record(reading(new_id()))
        return BackupScheduler(store, str(tmp_path), clock=clock)

    def test_nothing_before_first_boundary(self, tmp_path):
        clock = FakeClock()
        sched = self.make(tmp_path, clock)
        clock.advance(12 * 3600 - 1)
        assert sched.poll() is None
        assert sched.history == []

    def test_steady_polling_fires_once_per_interval(self, tmp_path):
        clock = FakeClock()
        sched = self.make(tmp_path, clock)
        for _ in range(36):  # poll every hour for 36 h
            clock.advance(3600)
            sched.poll()
        assert len(sched.history) == 3

    def test_long_gap_fires_single_catch_up(self, tmp_path):
        clock = FakeClock()
        sched = self.make(tmp_path, clock)
        clock.advance(30 * 3600)  # sleeps through two boundaries
        assert sched.poll() is not None
        assert sched.poll() is None
        assert len(sched.history) == 1

    def test_archives_are_restorable(self, tmp_path):
        clock = FakeClock()
        sched = self.make(tmp_path, clock)
        clock.advance(12 * 3600)
        manifest = sched.poll()
        target = MemoryStore()
        restore_snapshot(target, manifest.destination)
        assert target.counts()["glucose"] == 1

    def test_failure_waits_for_next_boundary(self, tmp_path):
        clock = FakeClock()
        sched = self.make(tmp_path, clock)
        sched._dest_dir = str(tmp_path / "missing" / "nested")  # force write failure
        clock.advance(12 * 3600)
        assert sched.poll() is None
        assert sched.failures == 1
        assert sched.poll() is None  # no immediate retry
        sched._dest_dir = str(tmp_path)
        clock.advance(12 * 3600)
        assert sched.poll() is not None
