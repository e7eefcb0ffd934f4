"""Supervisor discovery, link lifecycle, and the access-control decision.

Links are patient-initiated and can be torn down by either side. A revoked
link stays in the store for audit but grants nothing; at most one active
link exists per (patient, supervisor) pair.
"""

from __future__ import annotations

import time
from typing import TYPE_CHECKING, Callable

from ..domain import Role, UserProfile
from ..errors import AuthorizationError, ValidationError
from .links import AccessAction, AccessDecision, LinkStatus, SupervisionLink

if TYPE_CHECKING:
    from ..persistence.store import Store

SEARCH_MIN_QUERY = 2
SEARCH_MAX_RESULTS = 50


class SupervisionService:
    def __init__(self, store: "Store", clock: Callable[[], float] = time.time):
        self._store = store
        self._clock = clock

    def search_supervisors(self, query: str) -> list[UserProfile]:
        """Find supervisor accounts whose name or email contains ``query``."""
        needle = query.strip().lower()
        if len(needle) < SEARCH_MIN_QUERY:
            raise ValidationError(
                f"search needs at least {SEARCH_MIN_QUERY} characters",
                code="search.query_too_short",
            )
        hits = [
            u for u in self._store.list_users()
            if u.role == Role.SUPERVISOR
            and (needle in u.display_name.lower() or needle in u.email.lower())
        ]
        hits.sort(key=lambda u: (u.display_name.lower(), u.id))
        return hits[:SEARCH_MAX_RESULTS]

    def associate(self, patient_id: str, supervisor_id: str, actor_id: str) -> SupervisionLink:
        if actor_id != patient_id:
            raise AuthorizationError("only the patient can add a supervisor")
        patient = self._store.get_user(patient_id)
        supervisor = self._store.get_user(supervisor_id)
        if patient.role != Role.PATIENT:
            raise ValidationError(
                "the supervised side of a link must be a patient account",
                code="link.patient_role",
            )
        if supervisor.role != Role.SUPERVISOR:
            raise ValidationError(
                "the supervising side of a link must be a supervisor account",
                code="link.supervisor_role",
            )
        link = SupervisionLink(
            patient=patient_id,
            supervisor=supervisor_id,
            created_at=int(self._clock()),
            status=LinkStatus.ACTIVE,
        )
        self._store.add_link(link)
        return link

    def dissociate(self, patient_id: str, supervisor_id: str, actor_id: str) -> SupervisionLink:
        if actor_id not in (patient_id, supervisor_id):
            raise AuthorizationError("only a member of the link can end it")
        self._store.get_user(actor_id)
        return self._store.revoke_link(patient_id, supervisor_id)

    def list_supervisors(self, patient_id: str) -> list[UserProfile]:
        self._store.get_user(patient_id)
        out = [
            self._store.get_user(link.supervisor)
            for link in self._store.list_links()
            if link.patient == patient_id and link.status == LinkStatus.ACTIVE
        ]
        out.sort(key=lambda u: (u.display_name.lower(), u.id))
        return out

    def list_supervised(self, supervisor_id: str) -> list[UserProfile]:
        self._store.get_user(supervisor_id)
        out = [
            self._store.get_user(link.patient)
            for link in self._store.list_links()
            if link.supervisor == supervisor_id and link.status == LinkStatus.ACTIVE
        ]
        out.sort(key=lambda u: (u.display_name.lower(), u.id))
        return out

    def authorize(self, actor_id: str, subject_id: str, action: AccessAction) -> AccessDecision:
        """Decide whether ``actor`` may perform ``action`` on ``subject``'s data.

        Owners get full access. A supervisor with an active link to the
        subject gets read access only. Everyone else is denied.
        """
        self._store.get_user(actor_id)
        self._store.get_user(subject_id)
        if actor_id == subject_id:
            return AccessDecision.allow()
        link = self._store.get_active_link(patient=subject_id, supervisor=actor_id)
        if link is None:
            return AccessDecision.deny("no_link")
        if action == AccessAction.READ:
            return AccessDecision.allow()
        return AccessDecision.deny("supervisor_read_only")
