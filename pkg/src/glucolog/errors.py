"""Shared error types.

Every error carries a machine-readable ``code`` so the HTTP layer can map it
to a stable wire format and a localized message.
"""

from __future__ import annotations


class GlucologError(Exception):
    """Base class for all domain/service errors."""

    code = "error"

    def __init__(self, message: str = "", *, code: str | None = None):
        super().__init__(message or self.__class__.code)
        if code is not None:
            self.code = code
        self.message = message or self.code


class ValidationError(GlucologError):
    """Input violates a stated invariant or precondition (HTTP 422)."""

    code = "validation_failed"

    def __init__(self, message: str = "", *, code: str | None = None, violations=None):
        super().__init__(message, code=code)
        self.violations = list(violations) if violations else []


class NotFoundError(GlucologError):
    """Referenced entity does not exist (HTTP 404)."""

    code = "not_found"


class ConflictError(GlucologError):
    """State conflict, e.g. duplicate email or duplicate active link (HTTP 409)."""

    code = "conflict"


class AuthenticationError(GlucologError):
    """Missing, expired or invalid credentials/session (HTTP 401)."""

    code = "unauthenticated"


class AuthorizationError(GlucologError):
    """Authenticated caller may not perform this action (HTTP 403)."""

    code = "forbidden"
