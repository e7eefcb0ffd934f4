"""SQLite-backed store for single-host deployments.

Rows keep the full entity as a JSON payload next to the columns we filter
on, so schema migrations only matter when a query needs a new column. The
``records.seq`` autoincrement preserves insertion order among records that
share a timestamp, matching the in-memory store's tie-breaking.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from typing import Optional, Sequence

from ..domain import (
    MeasurementRecord,
    RECORD_TYPES,
    UserProfile,
    record_timestamp,
    record_type_tag,
)
from ..errors import ConflictError, NotFoundError, ValidationError
from ..supervision.links import LinkStatus, SupervisionLink
from ..times import WINDOW_ALL, check_window
from .codec import (
    link_from_dict,
    link_to_dict,
    profile_from_dict,
    profile_to_dict,
    record_from_dict,
    record_to_dict,
)
from .store import Session, Store

_SCHEMA = """
CREATE TABLE IF NOT EXISTS users (
    id      TEXT PRIMARY KEY,
    email   TEXT NOT NULL UNIQUE,
    payload TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS records (
    seq     INTEGER PRIMARY KEY AUTOINCREMENT,
    id      TEXT NOT NULL UNIQUE,
    type    TEXT NOT NULL,
    patient TEXT NOT NULL,
    ts      INTEGER NOT NULL,
    payload TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS idx_records_patient_ts ON records (patient, ts);
CREATE TABLE IF NOT EXISTS links (
    seq        INTEGER PRIMARY KEY AUTOINCREMENT,
    patient    TEXT NOT NULL,
    supervisor TEXT NOT NULL,
    created_at INTEGER NOT NULL,
    status     TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS sessions (
    token_hash TEXT PRIMARY KEY,
    user_id    TEXT NOT NULL,
    issued_at  INTEGER NOT NULL,
    expires_at INTEGER NOT NULL
);
"""


class SqliteStore(Store):
    def __init__(self, path: str):
        self._lock = threading.RLock()
        self._conn = sqlite3.connect(path, check_same_thread=False)
        self._conn.execute("PRAGMA journal_mode = WAL")
        self._conn.execute("PRAGMA foreign_keys = ON")
        with self._conn:
            self._conn.executescript(_SCHEMA)

    def close(self) -> None:
        with self._lock:
            self._conn.close()

    # -- users ----------------------------------------------------------------

    def add_user(self, profile: UserProfile) -> None:
        with self._lock:
            self._check_profile(profile)
            payload = json.dumps(profile_to_dict(profile))
            try:
                with self._conn:
                    self._conn.execute(
                        "INSERT INTO users (id, email, payload) VALUES (?, ?, ?)",
                        (profile.id, profile.email, payload),
                    )
            except sqlite3.IntegrityError as exc:
                if "users.id" in str(exc):
                    raise ConflictError(f"user id {profile.id!r} already exists", code="user.id_taken")
                raise ConflictError(f"email {profile.email!r} already registered", code="email_taken")

    def get_user(self, user_id: str) -> UserProfile:
        with self._lock:
            row = self._conn.execute(
                "SELECT payload FROM users WHERE id = ?", (user_id,)).fetchone()
        if row is None:
            raise NotFoundError(f"unknown user {user_id!r}", code="user.not_found")
        return profile_from_dict(json.loads(row[0]))

    def find_user_by_email(self, email: str) -> Optional[UserProfile]:
        with self._lock:
            row = self._conn.execute(
                "SELECT payload FROM users WHERE email = ?", (email,)).fetchone()
        return profile_from_dict(json.loads(row[0])) if row else None

    def update_user(self, profile: UserProfile) -> None:
        with self._lock:
            self.get_user(profile.id)
            self._check_profile(profile)
            payload = json.dumps(profile_to_dict(profile))
            try:
                with self._conn:
                    self._conn.execute(
                        "UPDATE users SET email = ?, payload = ? WHERE id = ?",
                        (profile.email, payload, profile.id),
                    )
            except sqlite3.IntegrityError:
                raise ConflictError(f"email {profile.email!r} already registered", code="email_taken")

    def list_users(self) -> list[UserProfile]:
        with self._lock:
            rows = self._conn.execute("SELECT payload FROM users ORDER BY id").fetchall()
        return [profile_from_dict(json.loads(r[0])) for r in rows]

    # -- records --------------------------------------------------------------

    def put_record(self, record: MeasurementRecord) -> None:
        with self._lock:
            self._check_new_record(record)
            payload = json.dumps(record_to_dict(record))
            try:
                with self._conn:
                    self._conn.execute(
                        "INSERT INTO records (id, type, patient, ts, payload) VALUES (?, ?, ?, ?, ?)",
                        (record.id, record_type_tag(record), record.patient,
                         record_timestamp(record), payload),
                    )
            except sqlite3.IntegrityError:
                raise ConflictError(f"record id {record.id!r} already exists", code="record.id_taken")

    def get_record(self, record_id: str) -> MeasurementRecord:
        with self._lock:
            row = self._conn.execute(
                "SELECT payload FROM records WHERE id = ?", (record_id,)).fetchone()
        if row is None:
            raise NotFoundError(f"unknown record {record_id!r}", code="record.not_found")
        return record_from_dict(json.loads(row[0]))

    def update_record(self, record: MeasurementRecord) -> None:
        with self._lock:
            current = self.get_record(record.id)
            if record.patient != current.patient or type(record) is not type(current):
                raise ValidationError(
                    "record type and owner are immutable", code="record.immutable_fields")
            self._check_new_record(record)
            payload = json.dumps(record_to_dict(record))
            with self._conn:
                self._conn.execute(
                    "UPDATE records SET ts = ?, payload = ? WHERE id = ?",
                    (record_timestamp(record), payload, record.id),
                )

    def delete_record(self, record_id: str) -> None:
        with self._lock:
            with self._conn:
                cur = self._conn.execute("DELETE FROM records WHERE id = ?", (record_id,))
            if cur.rowcount == 0:
                raise NotFoundError(f"unknown record {record_id!r}", code="record.not_found")

    def query_records(self, patient, types=None, window=WINDOW_ALL):
        t0, t1 = check_window(window)
        sql = "SELECT payload FROM records WHERE patient = ? AND ts >= ? AND ts < ?"
        args: list = [patient, t0, t1]
        if types is not None:
            tags = list(types)
            sql += f" AND type IN ({','.join('?' * len(tags))})"
            args.extend(tags)
        sql += " ORDER BY ts, seq"
        with self._lock:
            rows = self._conn.execute(sql, args).fetchall()
        return [record_from_dict(json.loads(r[0])) for r in rows]

    def all_records(self) -> list[MeasurementRecord]:
        with self._lock:
            rows = self._conn.execute("SELECT payload FROM records ORDER BY seq").fetchall()
        return [record_from_dict(json.loads(r[0])) for r in rows]

    # -- links ----------------------------------------------------------------

    def get_active_link(self, patient, supervisor):
        with self._lock:
            row = self._conn.execute(
                "SELECT patient, supervisor, created_at, status FROM links"
                " WHERE patient = ? AND supervisor = ? AND status = ?",
                (patient, supervisor, LinkStatus.ACTIVE.value),
            ).fetchone()
        return self._link_from_row(row) if row else None

    def add_link(self, link: SupervisionLink) -> None:
        with self._lock:
            for uid, what in ((link.patient, "patient"), (link.supervisor, "supervisor")):
                if self.get_user_or_none(uid) is None:
                    raise NotFoundError(f"unknown {what} {uid!r}", code="user.not_found")
            if link.status == LinkStatus.ACTIVE and self.get_active_link(link.patient, link.supervisor):
                raise ConflictError("an active link already exists for this pair", code="duplicate_link")
            with self._conn:
                self._conn.execute(
                    "INSERT INTO links (patient, supervisor, created_at, status) VALUES (?, ?, ?, ?)",
                    (link.patient, link.supervisor, link.created_at, link.status.value),
                )

    def revoke_link(self, patient, supervisor) -> SupervisionLink:
        with self._lock:
            with self._conn:
                cur = self._conn.execute(
                    "UPDATE links SET status = ? WHERE patient = ? AND supervisor = ? AND status = ?",
                    (LinkStatus.REVOKED.value, patient, supervisor, LinkStatus.ACTIVE.value),
                )
            if cur.rowcount == 0:
                raise NotFoundError("no active link for this pair", code="link.not_found")
            row = self._conn.execute(
                "SELECT patient, supervisor, created_at, status FROM links"
                " WHERE patient = ? AND supervisor = ? AND status = ?"
                " ORDER BY seq DESC LIMIT 1",
                (patient, supervisor, LinkStatus.REVOKED.value),
            ).fetchone()
        return self._link_from_row(row)

    def list_links(self) -> list[SupervisionLink]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT patient, supervisor, created_at, status FROM links ORDER BY seq"
            ).fetchall()
        return [self._link_from_row(r) for r in rows]

    @staticmethod
    def _link_from_row(row) -> SupervisionLink:
        return link_from_dict({
            "patient": row[0], "supervisor": row[1],
            "created_at": row[2], "status": row[3],
        })

    # -- sessions -------------------------------------------------------------

    def add_session(self, session: Session) -> None:
        with self._lock:
            with self._conn:
                self._conn.execute(
                    "INSERT OR REPLACE INTO sessions (token_hash, user_id, issued_at, expires_at)"
                    " VALUES (?, ?, ?, ?)",
                    (session.token_hash, session.user_id, session.issued_at, session.expires_at),
                )

    def get_session(self, token_hash: str) -> Optional[Session]:
        with self._lock:
            row = self._conn.execute(
                "SELECT token_hash, user_id, issued_at, expires_at FROM sessions"
                " WHERE token_hash = ?", (token_hash,)).fetchone()
        return Session(*row) if row else None

    def delete_session(self, token_hash: str) -> bool:
        with self._lock:
            with self._conn:
                cur = self._conn.execute(
                    "DELETE FROM sessions WHERE token_hash = ?", (token_hash,))
            return cur.rowcount > 0

    def list_sessions(self) -> list[Session]:
        with self._lock:
            rows = self._conn.execute(
                "SELECT token_hash, user_id, issued_at, expires_at FROM sessions ORDER BY token_hash"
            ).fetchall()
        return [Session(*r) for r in rows]

    # -- bookkeeping ----------------------------------------------------------

    def counts(self) -> dict[str, int]:
        with self._lock:
            counts = {
                "users": self._scalar("SELECT COUNT(*) FROM users"),
                "links": self._scalar("SELECT COUNT(*) FROM links"),
                "sessions": self._scalar("SELECT COUNT(*) FROM sessions"),
            }
            per_type = {tag: 0 for tag in RECORD_TYPES}
            for tag, n in self._conn.execute("SELECT type, COUNT(*) FROM records GROUP BY type"):
                per_type[tag] = n
            counts.update(per_type)
            return counts

    def _scalar(self, sql: str) -> int:
        return self._conn.execute(sql).fetchone()[0]
