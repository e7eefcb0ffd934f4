"""Supervisor links and the read-only access they grant."""

from .links import (
    AccessAction,
    AccessDecision,
    LinkStatus,
    SupervisionLink,
)
from .service import SEARCH_MAX_RESULTS, SEARCH_MIN_QUERY, SupervisionService

__all__ = [
    "AccessAction",
    "AccessDecision",
    "LinkStatus",
    "SupervisionLink",
    "SupervisionService",
    "SEARCH_MAX_RESULTS",
    "SEARCH_MIN_QUERY",
]
