"""Supervision link and access-decision value types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class LinkStatus(Enum):
    ACTIVE = "active"
    REVOKED = "revoked"


@dataclass(frozen=True)
class SupervisionLink:
    """A patient granting a supervisor read-only visibility.

    Revoked links are kept for audit; at most one ACTIVE link may exist
    per (patient, supervisor) pair.
    """

    patient: str
    supervisor: str
    created_at: int
    status: LinkStatus = LinkStatus.ACTIVE


class AccessAction(Enum):
    READ = "read"
    WRITE = "write"


@dataclass(frozen=True)
class AccessDecision:
    allowed: bool
    reason: Optional[str] = None  # machine-readable, present on every Deny

    @classmethod
    def allow(cls) -> "AccessDecision":
        return cls(allowed=True)

    @classmethod
    def deny(cls, reason: str) -> "AccessDecision":
        return cls(allowed=False, reason=reason)
