"""Validate live API responses against the published JSON Schemas.

The schema files under glucolog/service/schemas are part of the public
contract; these tests make sure the server actually honors them.
"""

import json
from importlib import resources

import pytest
from fastapi.testclient import TestClient
from jsonschema import Draft202012Validator

from glucolog.persistence import MemoryStore
from glucolog.service import ServiceConfig, create_app
from glucolog.service.seed import SEED_PASSWORD, seed_store

from test_service import FakeClock, T0, iso, signup


def load_schema(name):
    path = resources.files("glucolog.service").joinpath("schemas", f"{name}.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture(scope="module")
def schema_validators():
    names = [
        "error", "profile", "login", "record", "record-list", "glucose-series",
        "weight-series", "bp-series", "weekly-summary", "content", "user-list", "link",
    ]
    return {name: Draft202012Validator(load_schema(name)) for name in names}


def check(validators, name, payload):
    errors = sorted(validators[name].iter_errors(payload), key=lambda e: list(e.path))
    assert not errors, f"{name}: " + "; ".join(e.message for e in errors[:5])


@pytest.fixture
def seeded_client():
    store = MemoryStore()
    seed_store(store)
    app = create_app(store, ServiceConfig(pbkdf2_iterations=1000), clock=FakeClock())
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


@pytest.fixture
def client():
    store = MemoryStore()
    app = create_app(store, ServiceConfig(pbkdf2_iterations=1000), clock=FakeClock())
    with TestClient(app, raise_server_exceptions=False) as c:
        yield c


class TestSchemasAreWellFormed:
    def test_every_schema_compiles(self, schema_validators):
        for name, validator in schema_validators.items():
            Draft202012Validator.check_schema(validator.schema)


class TestLiveResponsesValidate:
    def test_auth_and_profile_payloads(self, seeded_client, schema_validators):
        c = seeded_client
        r = c.post("/v1/auth/login", json={"email": "ana@example.org",
                                           "password": SEED_PASSWORD})
        assert r.status_code == 200
        check(schema_validators, "login", r.json())
        headers = {"Authorization": f"Bearer {r.json()['token']}"}
        check(schema_validators, "profile", c.get("/v1/me", headers=headers).json())

    def test_record_payloads(self, client, schema_validators):
        profile, headers, _ = signup(client)
        pid = profile["id"]
        at = iso(T0 + 3600)
        bodies = {
            "glucose": {"value": 100.0, "taken_at": at,
                        "slot": {"meal": "dinner", "relation": "after"}},
            "insulin": {"units": 6.0, "insulin_kind": "long", "taken_at": at},
            "carbs": {"grams": 30.0, "taken_at": at},
            "medication": {"name": "metformin", "dose": "500 mg", "taken_at": at},
            "activity": {"intensity": "high", "duration_min": 20, "performed_at": at},
            "weight": {"value": 68.2, "measured_at": at},
            "blood_pressure": {"systolic": 118, "diastolic": 76, "measured_at": at},
        }
        for rtype, body in bodies.items():
            r = client.post(f"/v1/patients/{pid}/records/{rtype}", headers=headers, json=body)
            assert r.status_code == 201, (rtype, r.text)
            check(schema_validators, "record", r.json())
            listed = client.get(f"/v1/patients/{pid}/records/{rtype}", headers=headers)
            check(schema_validators, "record-list", listed.json())

    def test_stats_payloads(self, seeded_client, schema_validators):
        c = seeded_client
        r = c.post("/v1/auth/login", json={"email": "ana@example.org",
                                           "password": SEED_PASSWORD})
        headers = {"Authorization": f"Bearer {r.json()['token']}"}
        pid = "demo-ana"
        check(schema_validators, "glucose-series",
              c.get(f"/v1/patients/{pid}/stats/glucose-series", headers=headers).json())
        check(schema_validators, "weight-series",
              c.get(f"/v1/patients/{pid}/stats/weight-bmi-series", headers=headers).json())
        check(schema_validators, "bp-series",
              c.get(f"/v1/patients/{pid}/stats/bp-series", headers=headers).json())
        weekly = c.get(f"/v1/patients/{pid}/stats/weekly-summary", headers=headers,
                       params={"week_start": "2026-08-03"})
        assert weekly.status_code == 200, weekly.text
        check(schema_validators, "weekly-summary", weekly.json())

    def test_supervision_payloads(self, client, schema_validators):
        patient, ph, _ = signup(client)
        supervisor, _, _ = signup(client, role="supervisor", name="Searchable Sue")
        search = client.get("/v1/supervisors/search", headers=ph,
                            params={"q": "searchable"})
        check(schema_validators, "user-list", search.json())
        link = client.post(f"/v1/patients/{patient['id']}/supervisors", headers=ph,
                           json={"supervisor_id": supervisor["id"]})
        check(schema_validators, "link", link.json())
        listed = client.get(f"/v1/patients/{patient['id']}/supervisors", headers=ph)
        check(schema_validators, "user-list", listed.json())

    def test_content_payloads(self, client, schema_validators):
        for name in ("faq", "terms"):
            for lang in ("en", "es", "xx"):
                r = client.get(f"/v1/content/{name}", params={"lang": lang})
                check(schema_validators, "content", r.json())

    def test_error_payloads(self, client, schema_validators):
        samples = [
            client.get("/v1/me"),
            client.post("/v1/auth/login", json={"email": "x@example.org",
                                                "password": "wrongwrong"}),
            client.get("/v1/nowhere"),
            client.post("/v1/auth/register", json={"role": "patient"}),
        ]
        for resp in samples:
            assert resp.status_code >= 400
            check(schema_validators, "error", resp.json())
