"""Stores, snapshot archives, and the backup scheduler."""

from .backup import (
    BackupManifest,
    archive_name,
    backup_snapshot,
    restore_snapshot,
    verify_archive,
)
from .scheduler import DEFAULT_INTERVAL_S, BackupScheduler
from .sqlite_store import SqliteStore
from .store import MemoryStore, Session, Store, new_id

__all__ = [
    "BackupManifest",
    "BackupScheduler",
    "DEFAULT_INTERVAL_S",
    "MemoryStore",
    "Session",
    "SqliteStore",
    "Store",
    "archive_name",
    "backup_snapshot",
    "new_id",
    "restore_snapshot",
    "verify_archive",
]
