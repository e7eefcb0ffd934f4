"""Storage abstraction and the in-memory reference implementation.

A store must be atomic per call: a rejected mutation leaves every
observation unchanged. All implementations support concurrent readers with
serialized writers. Entity ids come from ``new_id`` (UUIDs, never reused).
"""

from __future__ import annotations

import threading
import uuid
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional, Sequence

from ..domain import (
    MeasurementRecord,
    Role,
    UserProfile,
    record_timestamp,
    record_type_tag,
    validate_profile,
    validate_record,
    RECORD_TYPES,
)
from ..errors import ConflictError, NotFoundError, ValidationError
from ..supervision.links import LinkStatus, SupervisionLink
from ..times import WINDOW_ALL, check_window


def new_id() -> str:
    return uuid.uuid4().hex


@dataclass(frozen=True)
class Session:
    """A server-side session row; only the token's hash is ever stored."""

    token_hash: str
    user_id: str
    issued_at: int
    expires_at: int


class Store(ABC):
    """Durable storage of profiles, records, supervision links, and sessions."""

    # -- users ----------------------------------------------------------------
    @abstractmethod
    def add_user(self, profile: UserProfile) -> None: ...

    @abstractmethod
    def get_user(self, user_id: str) -> UserProfile: ...

    @abstractmethod
    def find_user_by_email(self, email: str) -> Optional[UserProfile]: ...

    @abstractmethod
    def update_user(self, profile: UserProfile) -> None: ...

    @abstractmethod
    def list_users(self) -> list[UserProfile]: ...

    # -- measurement records --------------------------------------------------
    @abstractmethod
    def put_record(self, record: MeasurementRecord) -> None: ...

    @abstractmethod
    def get_record(self, record_id: str) -> MeasurementRecord: ...

    @abstractmethod
    def update_record(self, record: MeasurementRecord) -> None: ...

    @abstractmethod
    def delete_record(self, record_id: str) -> None: ...

    @abstractmethod
    def query_records(
        self,
        patient: str,
        types: Optional[Sequence[str]] = None,
        window: tuple[int, int] = WINDOW_ALL,
    ) -> list[MeasurementRecord]: ...

    @abstractmethod
    def all_records(self) -> list[MeasurementRecord]: ...

    # -- supervision links ----------------------------------------------------
    @abstractmethod
    def get_active_link(self, patient: str, supervisor: str) -> Optional[SupervisionLink]: ...

    @abstractmethod
    def add_link(self, link: SupervisionLink) -> None: ...

    @abstractmethod
    def revoke_link(self, patient: str, supervisor: str) -> SupervisionLink: ...

    @abstractmethod
    def list_links(self) -> list[SupervisionLink]: ...

    # -- sessions -------------------------------------------------------------
    @abstractmethod
    def add_session(self, session: Session) -> None: ...

    @abstractmethod
    def get_session(self, token_hash: str) -> Optional[Session]: ...

    @abstractmethod
    def delete_session(self, token_hash: str) -> bool: ...

    @abstractmethod
    def list_sessions(self) -> list[Session]: ...

    # -- bookkeeping ----------------------------------------------------------
    @abstractmethod
    def counts(self) -> dict[str, int]: ...

    def close(self) -> None:
        pass

    # shared validation -------------------------------------------------------

    def _check_new_record(self, record: MeasurementRecord) -> None:
        violations = validate_record(record)
        if violations:
            raise ValidationError(
                "; ".join(str(v) for v in violations),
                code=violations[0].code,
                violations=violations,
            )
        owner = self.get_user_or_none(record.patient)
        if owner is None:
            raise ValidationError(
                f"record references unknown patient {record.patient!r}",
                code="record.patient_unknown",
            )
        if owner.role != Role.PATIENT:
            raise ValidationError(
                "records can only belong to patient users",
                code="record.owner_not_patient",
            )

    def get_user_or_none(self, user_id: str) -> Optional[UserProfile]:
        try:
            return self.get_user(user_id)
        except NotFoundError:
            return None

    def _check_profile(self, profile: UserProfile) -> None:
        violations = validate_profile(profile)
        if violations:
            raise ValidationError(
                "; ".join(str(v) for v in violations),
                code=violations[0].code,
                violations=violations,
            )

    def record_counts(self) -> dict[str, int]:
        counts = {tag: 0 for tag in RECORD_TYPES}
        for record in self.all_records():
            counts[record_type_tag(record)] += 1
        return counts


class MemoryStore(Store):
    """Dict-backed store used by tests and as the semantics reference."""

    def __init__(self):
        self._lock = threading.RLock()
        self._users: dict[str, UserProfile] = {}
        self._emails: dict[str, str] = {}
        self._records: dict[str, tuple[int, MeasurementRecord]] = {}  # id -> (seq, record)
        self._links: list[SupervisionLink] = []
        self._sessions: dict[str, Session] = {}
        self._seq = 0

    # -- users ----------------------------------------------------------------

    def add_user(self, profile: UserProfile) -> None:
        with self._lock:
            self._check_profile(profile)
            if profile.id in self._users:
                raise ConflictError(f"user id {profile.id!r} already exists", code="user.id_taken")
            if profile.email in self._emails:
                raise ConflictError(f"email {profile.email!r} already registered", code="email_taken")
            self._users[profile.id] = profile
            self._emails[profile.email] = profile.id

    def get_user(self, user_id: str) -> UserProfile:
        with self._lock:
            try:
                return self._users[user_id]
            except KeyError:
                raise NotFoundError(f"unknown user {user_id!r}", code="user.not_found")

    def find_user_by_email(self, email: str) -> Optional[UserProfile]:
        with self._lock:
            user_id = self._emails.get(email)
            return self._users.get(user_id) if user_id else None

    def update_user(self, profile: UserProfile) -> None:
        with self._lock:
            current = self.get_user(profile.id)
            self._check_profile(profile)
            other = self._emails.get(profile.email)
            if other is not None and other != profile.id:
                raise ConflictError(f"email {profile.email!r} already registered", code="email_taken")
            del self._emails[current.email]
            self._users[profile.id] = profile
            self._emails[profile.email] = profile.id

    def list_users(self) -> list[UserProfile]:
        with self._lock:
            return list(self._users.values())

    # -- records --------------------------------------------------------------

    def put_record(self, record: MeasurementRecord) -> None:
        with self._lock:
            self._check_new_record(record)
            if record.id in self._records:
                raise ConflictError(f"record id {record.id!r} already exists", code="record.id_taken")
            self._seq += 1
            self._records[record.id] = (self._seq, record)

    def get_record(self, record_id: str) -> MeasurementRecord:
        with self._lock:
            try:
                return self._records[record_id][1]
            except KeyError:
                raise NotFoundError(f"unknown record {record_id!r}", code="record.not_found")

    def update_record(self, record: MeasurementRecord) -> None:
        with self._lock:
            seq, current = self._records.get(record.id, (None, None))
            if current is None:
                raise NotFoundError(f"unknown record {record.id!r}", code="record.not_found")
            if record.patient != current.patient or type(record) is not type(current):
                raise ValidationError(
                    "record type and owner are immutable", code="record.immutable_fields")
            self._check_new_record(record)
            self._records[record.id] = (seq, record)

    def delete_record(self, record_id: str) -> None:
        with self._lock:
            if record_id not in self._records:
                raise NotFoundError(f"unknown record {record_id!r}", code="record.not_found")
            del self._records[record_id]

    def query_records(self, patient, types=None, window=WINDOW_ALL):
        t0, t1 = check_window(window)
        wanted = set(types) if types is not None else None
        with self._lock:
            rows = [
                (seq, rec)
                for seq, rec in self._records.values()
                if rec.patient == patient
                and (wanted is None or record_type_tag(rec) in wanted)
                and t0 <= record_timestamp(rec) < t1
            ]
        rows.sort(key=lambda pair: (record_timestamp(pair[1]), pair[0]))
        return [rec for _, rec in rows]

    def all_records(self) -> list[MeasurementRecord]:
        with self._lock:
            return [rec for _, rec in sorted(self._records.values(), key=lambda p: p[0])]

    # -- links ----------------------------------------------------------------

    def get_active_link(self, patient, supervisor):
        with self._lock:
            for link in self._links:
                if (link.patient, link.supervisor, link.status) == (patient, supervisor, LinkStatus.ACTIVE):
                    return link
            return None

    def add_link(self, link: SupervisionLink) -> None:
        with self._lock:
            for uid, what in ((link.patient, "patient"), (link.supervisor, "supervisor")):
                if uid not in self._users:
                    raise NotFoundError(f"unknown {what} {uid!r}", code="user.not_found")
            if link.status == LinkStatus.ACTIVE and self.get_active_link(link.patient, link.supervisor):
                raise ConflictError("an active link already exists for this pair", code="duplicate_link")
            self._links.append(link)

    def revoke_link(self, patient, supervisor) -> SupervisionLink:
        with self._lock:
            for i, link in enumerate(self._links):
                if (link.patient, link.supervisor, link.status) == (patient, supervisor, LinkStatus.ACTIVE):
                    revoked = SupervisionLink(
                        patient=patient, supervisor=supervisor,
                        created_at=link.created_at, status=LinkStatus.REVOKED)
                    self._links[i] = revoked
                    return revoked
            raise NotFoundError("no active link for this pair", code="link.not_found")

    def list_links(self) -> list[SupervisionLink]:
        with self._lock:
            return list(self._links)

    # -- sessions -------------------------------------------------------------

    def add_session(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.token_hash] = session

    def get_session(self, token_hash: str) -> Optional[Session]:
        with self._lock:
            return self._sessions.get(token_hash)

    def delete_session(self, token_hash: str) -> bool:
        with self._lock:
            return self._sessions.pop(token_hash, None) is not None

    def list_sessions(self) -> list[Session]:
        with self._lock:
            return list(self._sessions.values())

    # -- bookkeeping ----------------------------------------------------------

    def counts(self) -> dict[str, int]:
        with self._lock:
            counts = {"users": len(self._users), "links": len(self._links),
                      "sessions": len(self._sessions)}
            counts.update(self.record_counts())
            return counts
