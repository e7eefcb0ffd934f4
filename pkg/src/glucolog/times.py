"""Timestamp helpers. Canonical representation is UTC epoch seconds (int)."""

from __future__ import annotations

import calendar
from datetime import date, datetime, timezone

from .errors import ValidationError

SECONDS_PER_DAY = 86400

#: half-open window covering all representable time
WINDOW_ALL = (0, 2 ** 62)


def parse_timestamp(text: str) -> int:
    """Parse an ISO-8601 instant ("2026-08-23T10:00:00Z") to epoch seconds."""
    try:
        raw = text.strip()
        if raw.endswith(("Z", "z")):
            raw = raw[:-1] + "+00:00"
        dt = datetime.fromisoformat(raw)
    except (ValueError, AttributeError):
        raise ValidationError(f"invalid timestamp: {text!r}", code="timestamp.unparseable")
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return int(dt.timestamp())


def format_timestamp(ts: int) -> str:
    return datetime.fromtimestamp(ts, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def date_to_epoch_utc(d: date) -> int:
    """Epoch seconds of midnight UTC on the given calendar date."""
    return calendar.timegm(d.timetuple())


def check_window(window: tuple[int, int]) -> tuple[int, int]:
    """Validate a half-open [t0, t1) window; returns it for chaining."""
    t0, t1 = window
    if not t0 < t1:
        raise ValidationError("window start must precede end", code="window.inverted")
    return window
