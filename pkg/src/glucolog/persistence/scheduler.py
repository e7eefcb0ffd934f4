"""Periodic snapshot driver.

The scheduler is deliberately poll-based: callers (a background thread in
the server, or a test with a fake clock) call ``poll()`` whenever they like
and the scheduler decides whether an interval boundary has been crossed
since the last snapshot. Crossing several boundaries at once, e.g. after
the host was suspended, produces a single catch-up snapshot rather than a
burst of redundant ones.
"""

from __future__ import annotations

import logging
import os
import threading
import time
from typing import Callable, Optional

from .backup import BackupManifest, archive_name, backup_snapshot
from .store import Store

log = logging.getLogger("glucolog.backup")

DEFAULT_INTERVAL_S = 12 * 3600


class BackupScheduler:
    def __init__(
        self,
        store: Store,
        dest_dir: str,
        clock: Callable[[], float] = time.time,
        interval_s: int = DEFAULT_INTERVAL_S,
    ):
        if interval_s <= 0:
            raise ValueError("interval_s must be positive")
        self._store = store
        self._dest_dir = dest_dir
        self._clock = clock
        self._interval = interval_s
        self._start = int(clock())
        self._marker = 0  # index of the last boundary we have snapshotted for
        self._thread: Optional[threading.Thread] = None
        self._stop = threading.Event()
        self.history: list[BackupManifest] = []
        self.failures = 0

    def poll(self) -> Optional[BackupManifest]:
        """Take one snapshot if a new interval boundary has passed."""
        now = int(self._clock())
        crossed = (now - self._start) // self._interval
        if crossed <= self._marker:
            return None
        # Advance the marker first: a failing snapshot waits for the next
        # boundary instead of being retried on every poll.
        self._marker = crossed
        destination = os.path.join(self._dest_dir, archive_name(now))
        try:
            manifest = backup_snapshot(self._store, destination, created_at=now)
        except Exception:
            self.failures += 1
            log.exception("scheduled backup to %s failed", destination)
            return None
        self.history.append(manifest)
        log.info("wrote backup %s (%s)", destination, manifest.checksum)
        return manifest

    # -- background thread mode ----------------------------------------------

    def start(self, poll_every_s: float = 60.0) -> None:
        if self._thread is not None:
            return
        os.makedirs(self._dest_dir, exist_ok=True)
        self._stop.clear()

        def run():
            while not self._stop.wait(poll_every_s):
                self.poll()

        self._thread = threading.Thread(target=run, name="glucolog-backup", daemon=True)
        self._thread.start()

    def stop(self) -> None:
        if self._thread is None:
            return
        self._stop.set()
        self._thread.join(timeout=5)
        self._thread = None
