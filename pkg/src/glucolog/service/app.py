"""The HTTP service: auth, records, statistics, supervision, settings, content.

Every handler follows the same shape: authenticate the bearer token,
check the supervision rule for the subject patient, only then touch data.
All non-2xx responses carry exactly one error envelope::

    {"error": {"status": ..., "code": ..., "message": ..., "details": [...]}}

with the message localized to the requester's profile language, falling
back to the Accept-Language header for anonymous callers.
"""

from __future__ import annotations

import time
from datetime import date
from typing import Callable, Optional

from fastapi import Body, FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..analytics import blood_pressure_series, glucose_series, weekly_summary, weight_bmi_series
from ..domain import (
    DEFAULT_TARGETS,
    GlucoseUnit,
    Language,
    Role,
    TargetRanges,
    UnitPreferences,
    UserProfile,
    WeightUnit,
    RECORD_TYPES,
    record_type_tag,
    validate_targets,
)
from ..errors import (
    AuthenticationError,
    AuthorizationError,
    ConflictError,
    GlucologError,
    NotFoundError,
    ValidationError,
)
from ..persistence.store import Store, new_id
from ..supervision import AccessAction, SupervisionService
from ..times import WINDOW_ALL, check_window, format_timestamp, parse_timestamp
from .auth import AuthService, hash_token
from .config import ServiceConfig
from .documents import load_document
from .i18n import error_message, negotiate_language
from .serialization import (
    bp_series_to_api,
    glucose_series_to_api,
    profile_to_api,
    record_from_api,
    record_to_api,
    weekly_to_api,
    weight_series_to_api,
)

_STATUS_BY_ERROR = (
    (AuthenticationError, 401),
    (AuthorizationError, 403),
    (NotFoundError, 404),
    (ConflictError, 409),
    (ValidationError, 422),
)

_CODE_BY_STATUS = {
    401: "unauthenticated",
    403: "forbidden",
    404: "not_found",
    409: "conflict",
    422: "validation_failed",
}


def create_app(
    store: Store,
    config: Optional[ServiceConfig] = None,
    clock: Callable[[], float] = time.time,
) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="glucolog", version="1", docs_url=None, redoc_url=None,
                  openapi_url=None)
    # Auth is bearer-token, never cookie-based, so a wildcard origin is safe
    # and lets the web client be hosted anywhere.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    auth = AuthService(
        store, clock=clock,
        token_ttl_s=config.token_ttl_s,
        pbkdf2_iterations=config.pbkdf2_iterations,
    )
    supervision = SupervisionService(store, clock=clock)
    app.state.store = store
    app.state.config = config
    app.state.auth = auth
    app.state.clock = clock

    # ----- helpers -----------------------------------------------------------

    def bearer_token(request: Request) -> Optional[str]:
        header = request.headers.get("Authorization", "")
        scheme, _, token = header.partition(" ")
        if scheme.lower() != "bearer" or not token.strip():
            return None
        return token.strip()

    def current_user(request: Request) -> UserProfile:
        return auth.authenticate(bearer_token(request))

    def require_access(actor: UserProfile, subject_id: str, action: AccessAction) -> None:
        decision = supervision.authorize(actor.id, subject_id, action)
        if not decision.allowed:
            raise AuthorizationError("access denied", code=decision.reason)

    def request_language(request: Request) -> Language:
        profile_lang = None
        token = bearer_token(request)
        if token:
            try:
                session = store.get_session(hash_token(token))
                if session is not None and int(clock()) < session.expires_at:
                    profile_lang = store.get_user(session.user_id).language
            except GlucologError:
                profile_lang = None
        return negotiate_language(profile_lang, request.headers.get("Accept-Language"))

    def envelope(request: Request, status: int, code: str, details=None) -> JSONResponse:
        body = {
            "error": {
                "status": status,
                "code": code,
                "message": error_message(code, request_language(request)),
            }
        }
        if details:
            body["error"]["details"] = details
        return JSONResponse(status_code=status, content=body)

    def parse_window(from_: Optional[str], to: Optional[str]) -> tuple[int, int]:
        t0 = parse_timestamp(from_) if from_ else 0
        t1 = parse_timestamp(to) if to else WINDOW_ALL[1]
        return check_window((t0, t1))

    def check_rtype(rtype: str) -> None:
        if rtype not in RECORD_TYPES:
            raise NotFoundError(f"no such record collection {rtype!r}", code="not_found")

    def fetch_owned(rid: str, pid: str, rtype: str):
        record = store.get_record(rid)
        if record.patient != pid or record_type_tag(record) != rtype:
            raise NotFoundError(f"unknown record {rid!r}", code="record.not_found")
        return record

    def str_field(payload: dict, key: str, *, required: bool = True, default=None) -> Optional[str]:
        if key not in payload or payload[key] is None:
            if required:
                raise ValidationError(f"missing required field {key!r}", code="validation_failed")
            return default
        value = payload[key]
        if not isinstance(value, str):
            raise ValidationError(f"field {key!r} must be a string", code="validation_failed")
        return value

    def patient_targets(profile: UserProfile) -> TargetRanges:
        return profile.targets if profile.targets is not None else DEFAULT_TARGETS

    def public_user(profile: UserProfile) -> dict:
        return {"id": profile.id, "display_name": profile.display_name, "email": profile.email}

    # ----- error envelopes ---------------------------------------------------

    @app.exception_handler(GlucologError)
    async def glucolog_error_handler(request: Request, exc: GlucologError):
        status = next(
            (s for cls, s in _STATUS_BY_ERROR if isinstance(exc, cls)), 400)
        details = None
        violations = getattr(exc, "violations", None)
        if violations:
            details = [{"code": v.code, "message": v.message} for v in violations]
        return envelope(request, status, exc.code, details)

    @app.exception_handler(RequestValidationError)
    async def request_validation_handler(request: Request, exc: RequestValidationError):
        details = [
            {"loc": [str(part) for part in err.get("loc", ())], "message": str(err.get("msg", ""))}
            for err in exc.errors()
        ]
        return envelope(request, 422, "validation_failed", details)

    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(request: Request, exc: StarletteHTTPException):
        code = _CODE_BY_STATUS.get(exc.status_code, "error")
        return envelope(request, exc.status_code, code)

    @app.exception_handler(Exception)
    async def unhandled_exception_handler(request: Request, exc: Exception):
        return envelope(request, 500, "internal_error")

    # ----- health and auth ---------------------------------------------------

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/auth/register", status_code=201)
    def register(payload: dict = Body(...)):
        role_raw = str_field(payload, "role")
        try:
            role = Role(role_raw)
        except ValueError:
            raise ValidationError("role must be patient or supervisor", code="auth.bad_role")
        lang_raw = str_field(payload, "language", required=False)
        try:
            language = Language(lang_raw) if lang_raw else Language.EN
        except ValueError:
            raise ValidationError("language must be en or es", code="auth.bad_language")
        profile = auth.register(
            role=role,
            display_name=str_field(payload, "display_name"),
            email=str_field(payload, "email"),
            password=str_field(payload, "password"),
            language=language,
        )
        return profile_to_api(profile)

    @app.post("/v1/auth/login")
    def login(payload: dict = Body(...)):
        token, session = auth.login(
            str_field(payload, "email"), str_field(payload, "password"))
        return {
            "token": token,
            "user_id": session.user_id,
            "expires_at": format_timestamp(session.expires_at),
        }

    @app.post("/v1/auth/logout")
    def logout(request: Request):
        auth.logout(bearer_token(request))
        return {"ok": True}

    @app.get("/v1/me")
    def me(request: Request):
        return profile_to_api(current_user(request))

    # ----- records -----------------------------------------------------------

    @app.get("/v1/patients/{pid}/records/{rtype}")
    def list_records(
        pid: str,
        rtype: str,
        request: Request,
        from_: Optional[str] = Query(None, alias="from"),
        to: Optional[str] = Query(None),
    ):
        check_rtype(rtype)
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        window = parse_window(from_, to)
        records = store.query_records(pid, types=[rtype], window=window)
        items = [record_to_api(r, user.unit_prefs) for r in records]
        return {"items": items, "count": len(items)}

    @app.post("/v1/patients/{pid}/records/{rtype}", status_code=201)
    def create_record(pid: str, rtype: str, request: Request, payload: dict = Body(...)):
        check_rtype(rtype)
        user = current_user(request)
        require_access(user, pid, AccessAction.WRITE)
        record = record_from_api(
            rtype, payload, record_id=new_id(), patient=pid, prefs=user.unit_prefs)
        store.put_record(record)
        return record_to_api(record, user.unit_prefs)

    @app.get("/v1/patients/{pid}/records/{rtype}/{rid}")
    def get_record(pid: str, rtype: str, rid: str, request: Request):
        check_rtype(rtype)
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        return record_to_api(fetch_owned(rid, pid, rtype), user.unit_prefs)

    @app.put("/v1/patients/{pid}/records/{rtype}/{rid}")
    def update_record(pid: str, rtype: str, rid: str, request: Request,
                      payload: dict = Body(...)):
        check_rtype(rtype)
        user = current_user(request)
        require_access(user, pid, AccessAction.WRITE)
        fetch_owned(rid, pid, rtype)
        record = record_from_api(
            rtype, payload, record_id=rid, patient=pid, prefs=user.unit_prefs)
        store.update_record(record)
        return record_to_api(record, user.unit_prefs)

    @app.delete("/v1/patients/{pid}/records/{rtype}/{rid}", status_code=204)
    def delete_record(pid: str, rtype: str, rid: str, request: Request):
        check_rtype(rtype)
        user = current_user(request)
        require_access(user, pid, AccessAction.WRITE)
        fetch_owned(rid, pid, rtype)
        store.delete_record(rid)
        return Response(status_code=204)

    # ----- statistics --------------------------------------------------------

    @app.get("/v1/patients/{pid}/stats/glucose-series")
    def glucose_series_endpoint(
        pid: str,
        request: Request,
        from_: Optional[str] = Query(None, alias="from"),
        to: Optional[str] = Query(None),
    ):
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        subject = store.get_user(pid)
        window = parse_window(from_, to)
        readings = store.query_records(pid, types=["glucose"], window=window)
        targets = patient_targets(subject)
        points, stats = glucose_series(
            readings, window, unit=user.unit_prefs.glucose, targets=targets)
        return glucose_series_to_api(points, stats, user.unit_prefs.glucose, targets)

    @app.get("/v1/patients/{pid}/stats/weight-bmi-series")
    def weight_series_endpoint(
        pid: str,
        request: Request,
        from_: Optional[str] = Query(None, alias="from"),
        to: Optional[str] = Query(None),
    ):
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        subject = store.get_user(pid)
        window = parse_window(from_, to)
        weights = store.query_records(pid, types=["weight"], window=window)
        points, stats = weight_bmi_series(weights, window, height_m=subject.height_m)
        return weight_series_to_api(points, stats, user.unit_prefs.weight)

    @app.get("/v1/patients/{pid}/stats/bp-series")
    def bp_series_endpoint(
        pid: str,
        request: Request,
        from_: Optional[str] = Query(None, alias="from"),
        to: Optional[str] = Query(None),
    ):
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        subject = store.get_user(pid)
        window = parse_window(from_, to)
        bps = store.query_records(pid, types=["blood_pressure"], window=window)
        targets = patient_targets(subject)
        points, stats = blood_pressure_series(bps, window, targets=targets)
        return bp_series_to_api(points, stats, targets)

    @app.get("/v1/patients/{pid}/stats/weekly-summary")
    def weekly_summary_endpoint(
        pid: str,
        request: Request,
        week_start: str = Query(...),
        tz_offset_min: int = Query(0),
    ):
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        try:
            start = date.fromisoformat(week_start)
        except ValueError:
            raise ValidationError("week_start must be a YYYY-MM-DD date", code="week.bad_date")
        summary = weekly_summary(
            glucose=store.query_records(pid, types=["glucose"]),
            insulin=store.query_records(pid, types=["insulin"]),
            carbs=store.query_records(pid, types=["carbs"]),
            activities=store.query_records(pid, types=["activity"]),
            week_start=start,
            tz_offset_min=tz_offset_min,
        )
        return weekly_to_api(summary, tz_offset_min, user.unit_prefs.glucose)

    # ----- supervision -------------------------------------------------------

    @app.get("/v1/supervisors/search")
    def search_supervisors(request: Request, q: str = Query("")):
        current_user(request)
        hits = supervision.search_supervisors(q)
        return {"items": [public_user(u) for u in hits]}

    @app.get("/v1/patients/{pid}/supervisors")
    def list_patient_supervisors(pid: str, request: Request):
        user = current_user(request)
        require_access(user, pid, AccessAction.READ)
        return {"items": [public_user(u) for u in supervision.list_supervisors(pid)]}

    @app.post("/v1/patients/{pid}/supervisors", status_code=201)
    def associate_supervisor(pid: str, request: Request, payload: dict = Body(...)):
        user = current_user(request)
        link = supervision.associate(
            pid, str_field(payload, "supervisor_id"), actor_id=user.id)
        return {
            "patient": link.patient,
            "supervisor": link.supervisor,
            "created_at": format_timestamp(link.created_at),
            "status": link.status.value,
        }

    @app.delete("/v1/patients/{pid}/supervisors/{sid}", status_code=204)
    def dissociate_supervisor(pid: str, sid: str, request: Request):
        user = current_user(request)
        supervision.dissociate(pid, sid, actor_id=user.id)
        return Response(status_code=204)

    @app.get("/v1/supervised")
    def list_supervised(request: Request):
        user = current_user(request)
        return {"items": [public_user(u) for u in supervision.list_supervised(user.id)]}

    # ----- settings ----------------------------------------------------------

    @app.get("/v1/settings")
    def get_settings(request: Request):
        return profile_to_api(current_user(request))

    @app.put("/v1/settings/targets")
    def put_targets(request: Request, payload: dict = Body(...)):
        user = current_user(request)
        try:
            targets = TargetRanges(
                glucose_low=payload["glucose_low"],
                glucose_high=payload["glucose_high"],
                bp_sys_high=payload["bp_sys_high"],
                bp_dia_high=payload["bp_dia_high"],
            )
        except KeyError as exc:
            raise ValidationError(f"missing required field {exc.args[0]!r}", code="validation_failed")
        violations = validate_targets(targets)
        if violations:
            raise ValidationError(
                "; ".join(str(v) for v in violations),
                code=violations[0].code, violations=violations)
        store.update_user(user.with_updates(targets=targets))
        return profile_to_api(store.get_user(user.id))

    @app.put("/v1/settings/units")
    def put_units(request: Request, payload: dict = Body(...)):
        user = current_user(request)
        prefs = user.unit_prefs
        if "glucose" in payload:
            try:
                prefs = UnitPreferences(
                    glucose=GlucoseUnit(payload["glucose"]), weight=prefs.weight)
            except ValueError:
                raise ValidationError("glucose unit must be mg/dL or mmol/L", code="settings.bad_unit")
        if "weight" in payload:
            try:
                prefs = UnitPreferences(
                    glucose=prefs.glucose, weight=WeightUnit(payload["weight"]))
            except ValueError:
                raise ValidationError("weight unit must be kg or lbs", code="settings.bad_unit")
        store.update_user(user.with_updates(unit_prefs=prefs))
        return profile_to_api(store.get_user(user.id))

    @app.put("/v1/settings/language")
    def put_language(request: Request, payload: dict = Body(...)):
        user = current_user(request)
        try:
            language = Language(str_field(payload, "language"))
        except ValueError:
            raise ValidationError("language must be en or es", code="auth.bad_language")
        store.update_user(user.with_updates(language=language))
        return profile_to_api(store.get_user(user.id))

    @app.put("/v1/settings/profile")
    def put_profile(request: Request, payload: dict = Body(...)):
        user = current_user(request)
        updates = {}
        if "display_name" in payload:
            updates["display_name"] = str_field(payload, "display_name")
        if "height_m" in payload:
            updates["height_m"] = payload["height_m"]
        if updates:
            store.update_user(user.with_updates(**updates))
        return profile_to_api(store.get_user(user.id))

    # ----- content -----------------------------------------------------------

    @app.get("/v1/content/{name}")
    def content(name: str, request: Request, lang: Optional[str] = Query(None)):
        language: Optional[Language] = None
        if lang:
            try:
                language = Language(lang.strip().lower())
            except ValueError:
                language = None  # unknown codes fall back, never 404
        if language is None:
            language = request_language(request)
        return load_document(name, language)

    return app
