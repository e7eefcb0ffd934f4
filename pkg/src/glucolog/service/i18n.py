"""Message catalogs and request-language negotiation.

Error messages are looked up by their machine code. The user's profile
language wins; anonymous requests fall back to the Accept-Language header,
then to English.
"""

from __future__ import annotations

from typing import Optional

from ..domain import Language

_CATALOG: dict[str, dict[Language, str]] = {
    "validation_failed": {
        Language.EN: "The request is invalid.",
        Language.ES: "La solicitud no es válida.",
    },
    "unauthenticated": {
        Language.EN: "Authentication required.",
        Language.ES: "Se requiere autenticación.",
    },
    "invalid_credentials": {
        Language.EN: "Invalid email or password.",
        Language.ES: "Correo o contraseña incorrectos.",
    },
    "forbidden": {
        Language.EN: "You do not have permission to do that.",
        Language.ES: "No tiene permiso para hacer eso.",
    },
    "supervisor_read_only": {
        Language.EN: "Supervisors have read-only access.",
        Language.ES: "Los supervisores tienen acceso de solo lectura.",
    },
    "no_link": {
        Language.EN: "No supervision link grants access to this patient.",
        Language.ES: "Ningún vínculo de supervisión da acceso a este paciente.",
    },
    "not_found": {
        Language.EN: "The requested resource does not exist.",
        Language.ES: "El recurso solicitado no existe.",
    },
    "conflict": {
        Language.EN: "The request conflicts with existing data.",
        Language.ES: "La solicitud entra en conflicto con datos existentes.",
    },
    "email_taken": {
        Language.EN: "That email address is already registered.",
        Language.ES: "Ese correo electrónico ya está registrado.",
    },
    "auth.weak_password": {
        Language.EN: "Passwords need at least 8 characters.",
        Language.ES: "La contraseña necesita al menos 8 caracteres.",
    },
    "search.query_too_short": {
        Language.EN: "Search needs at least 2 characters.",
        Language.ES: "La búsqueda necesita al menos 2 caracteres.",
    },
    "window.inverted": {
        Language.EN: "The time window must end after it starts.",
        Language.ES: "La ventana de tiempo debe terminar después de empezar.",
    },
    "week.not_monday": {
        Language.EN: "The week must start on a Monday.",
        Language.ES: "La semana debe empezar en lunes.",
    },
    "timestamp.unparseable": {
        Language.EN: "Timestamps must be ISO-8601 UTC.",
        Language.ES: "Las fechas deben estar en formato ISO-8601 UTC.",
    },
    "internal_error": {
        Language.EN: "Something went wrong on the server.",
        Language.ES: "Algo salió mal en el servidor.",
    },
}

_FALLBACKS = {
    "record.": "validation_failed",
    "profile.": "validation_failed",
    "targets.": "validation_failed",
    "note.": "validation_failed",
    "glucose.": "validation_failed",
    "insulin.": "validation_failed",
    "carbs.": "validation_failed",
    "medication.": "validation_failed",
    "activity.": "validation_failed",
    "weight.": "validation_failed",
    "bp.": "validation_failed",
    "link.": "validation_failed",
    "convert.": "validation_failed",
    "bmi.": "validation_failed",
    "backup.": "validation_failed",
    "user.": "not_found",
}


def error_message(code: str, language: Language) -> str:
    entry = _CATALOG.get(code)
    if entry is None:
        for prefix, generic in _FALLBACKS.items():
            if code.startswith(prefix):
                entry = _CATALOG[generic]
                break
    if entry is None:
        entry = _CATALOG["validation_failed"]
    return entry.get(language) or entry[Language.EN]


def parse_accept_language(header: Optional[str]) -> Optional[Language]:
    """Pick the best supported language from an Accept-Language header."""
    if not header:
        return None
    ranked: list[tuple[float, int, Language]] = []
    for i, part in enumerate(header.split(",")):
        piece = part.strip()
        if not piece:
            continue
        lang, _, params = piece.partition(";")
        q = 1.0
        for param in params.split(";"):
            key, _, val = param.strip().partition("=")
            if key == "q":
                try:
                    q = float(val)
                except ValueError:
                    q = 0.0
        primary = lang.strip().lower().split("-")[0]
        try:
            supported = Language(primary)
        except ValueError:
            continue
        # negative index keeps header order among equal q values
        ranked.append((q, -i, supported))
    if not ranked:
        return None
    return max(ranked)[-1]


def negotiate_language(profile_language: Optional[Language], header: Optional[str]) -> Language:
    if profile_language is not None:
        return profile_language
    return parse_accept_language(header) or Language.EN
