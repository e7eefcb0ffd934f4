"""Snapshot archives: one JSONL file holding everything a store contains.

Layout, line by line:

  1. header   {"format": "glucolog-backup", "version": 1, "created_at": ...,
               "record_counts": {...}}
  2..n-1 body {"type": "user" | "link" | "record" | "session", "data": {...}}
  n. trailer  {"checksum": "sha256:<hex>"}

The checksum covers every byte of the file before the trailer line, so a
truncated or edited archive fails verification before anything is loaded.
Restore only ever targets an empty store; merging archives is out of scope.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass

from ..errors import ValidationError
from .codec import (
    link_from_dict,
    link_to_dict,
    profile_from_dict,
    profile_to_dict,
    record_from_dict,
    record_to_dict,
)
from .store import Session, Store

FORMAT_NAME = "glucolog-backup"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class BackupManifest:
    created_at: int
    destination: str
    record_counts: dict[str, int]
    checksum: str


def archive_name(created_at: int) -> str:
    stamp = time.strftime("%Y%m%dT%H%M%SZ", time.gmtime(created_at))
    return f"glucolog-backup-{stamp}.jsonl"


def backup_snapshot(store: Store, destination: str, created_at: int) -> BackupManifest:
    """Write the store's full contents to ``destination`` atomically."""
    counts = store.counts()
    lines = [json.dumps({
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "created_at": created_at,
        "record_counts": counts,
    }, sort_keys=True)]
    for profile in store.list_users():
        lines.append(_body_line("user", profile_to_dict(profile)))
    for link in store.list_links():
        lines.append(_body_line("link", link_to_dict(link)))
    for record in store.all_records():
        lines.append(_body_line("record", record_to_dict(record)))
    for session in store.list_sessions():
        lines.append(_body_line("session", {
            "token_hash": session.token_hash,
            "user_id": session.user_id,
            "issued_at": session.issued_at,
            "expires_at": session.expires_at,
        }))

    body = ("\n".join(lines) + "\n").encode("utf-8")
    checksum = "sha256:" + hashlib.sha256(body).hexdigest()
    payload = body + (json.dumps({"checksum": checksum}) + "\n").encode("utf-8")

    tmp = destination + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(payload)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, destination)
    return BackupManifest(
        created_at=created_at, destination=destination,
        record_counts=counts, checksum=checksum,
    )


def verify_archive(path: str) -> dict:
    """Check the trailer checksum and return the parsed header."""
    with open(path, "rb") as fh:
        raw = fh.read()
    head, _, last = raw.rstrip(b"\n").rpartition(b"\n")
    if not head:
        raise ValidationError("archive is too short to be valid", code="backup.truncated")
    body = head + b"\n"
    try:
        trailer = json.loads(last)
        expected = trailer["checksum"]
    except (ValueError, KeyError, TypeError):
        raise ValidationError("archive trailer is not a checksum line", code="backup.bad_trailer")
    actual = "sha256:" + hashlib.sha256(body).hexdigest()
    if actual != expected:
        raise ValidationError(
            f"archive checksum mismatch: expected {expected}, computed {actual}",
            code="backup.checksum_mismatch",
        )
    header = json.loads(body.split(b"\n", 1)[0])
    if header.get("format") != FORMAT_NAME or header.get("version") != FORMAT_VERSION:
        raise ValidationError("unrecognized archive header", code="backup.bad_header")
    return header


def restore_snapshot(store: Store, path: str) -> BackupManifest:
    """Load a verified archive into an empty store."""
    if any(store.counts().values()):
        raise ValidationError(
            "restore requires an empty store", code="backup.store_not_empty")
    header = verify_archive(path)

    groups: dict[str, list[dict]] = {"user": [], "link": [], "record": [], "session": []}
    with open(path, "r", encoding="utf-8") as fh:
        next(fh)  # header, already parsed
        for line in fh:
            entry = json.loads(line)
            if "checksum" in entry:
                break
            kind = entry.get("type")
            if kind not in groups:
                raise ValidationError(
                    f"archive contains unknown entry type {kind!r}", code="backup.bad_entry")
            groups[kind].append(entry["data"])

    # users first so links and records pass referential checks
    for data in groups["user"]:
        store.add_user(profile_from_dict(data))
    for data in groups["link"]:
        store.add_link(link_from_dict(data))
    for data in groups["record"]:
        store.put_record(record_from_dict(data))
    for data in groups["session"]:
        store.add_session(Session(
            token_hash=data["token_hash"], user_id=data["user_id"],
            issued_at=data["issued_at"], expires_at=data["expires_at"],
        ))
    return BackupManifest(
        created_at=header["created_at"], destination=path,
        record_counts=header["record_counts"], checksum=_trailer_checksum(path),
    )


def _body_line(kind: str, data: dict) -> str:
    return json.dumps({"type": kind, "data": data}, sort_keys=True)


def _trailer_checksum(path: str) -> str:
    with open(path, "rb") as fh:
        raw = fh.read()
    return json.loads(raw.rstrip(b"\n").rpartition(b"\n")[2])["checksum"]
