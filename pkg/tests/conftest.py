import pytest

from glucolog.domain import Role, TargetRanges, UserProfile
from glucolog.persistence import MemoryStore, SqliteStore


def make_patient(uid, **kw):
    kw.setdefault("targets", TargetRanges())
    return UserProfile(
        id=uid,
        role=Role.PATIENT,
        display_name=kw.pop("display_name", f"Patient {uid}"),
        email=kw.pop("email", f"{uid}@example.org"),
        credential_hash=kw.pop("credential_hash", "x"),
        **kw,
    )


def make_supervisor(uid, **kw):
    return UserProfile(
        id=uid,
        role=Role.SUPERVISOR,
        display_name=kw.pop("display_name", f"Supervisor {uid}"),
        email=kw.pop("email", f"{uid}@example.org"),
        credential_hash=kw.pop("credential_hash", "x"),
        **kw,
    )


@pytest.fixture(params=["memory", "sqlite"])
def store(request, tmp_path):
    if request.param == "memory":
        s = MemoryStore()
    else:
        s = SqliteStore(str(tmp_path / "store.db"))
    yield s
    s.close()
