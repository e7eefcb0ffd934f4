"""Registration, credential hashing, and bearer-token sessions.

Passwords are stored as salted PBKDF2-HMAC-SHA256; tokens are random URL-safe
strings of which only the SHA-256 digest ever reaches the store. Login
failures are indistinguishable between unknown email and wrong password.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import time
from typing import Callable, Optional

from ..domain import (
    DEFAULT_TARGETS,
    Language,
    Role,
    UnitPreferences,
    UserProfile,
)
from ..errors import AuthenticationError, ValidationError
from ..persistence.store import Session, Store, new_id

PASSWORD_MIN_CHARS = 8
DEFAULT_TOKEN_TTL_S = 24 * 3600
DEFAULT_PBKDF2_ITERATIONS = 210_000

_SCHEME = "pbkdf2_sha256"


def hash_password(password: str, iterations: int = DEFAULT_PBKDF2_ITERATIONS) -> str:
    salt = secrets.token_bytes(16)
    digest = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)
    return f"{_SCHEME}${iterations}${salt.hex()}${digest.hex()}"


def verify_password(password: str, encoded: str) -> bool:
    try:
        scheme, iterations, salt_hex, digest_hex = encoded.split("$")
        if scheme != _SCHEME:
            return False
        digest = hashlib.pbkdf2_hmac(
            "sha256", password.encode("utf-8"), bytes.fromhex(salt_hex), int(iterations))
        return hmac.compare_digest(digest.hex(), digest_hex)
    except (ValueError, AttributeError):
        return False


def hash_token(token: str) -> str:
    return hashlib.sha256(token.encode("utf-8")).hexdigest()


class AuthService:
    def __init__(
        self,
        store: Store,
        clock: Callable[[], float] = time.time,
        token_ttl_s: int = DEFAULT_TOKEN_TTL_S,
        pbkdf2_iterations: int = DEFAULT_PBKDF2_ITERATIONS,
    ):
        self._store = store
        self._clock = clock
        self._ttl = token_ttl_s
        self._iterations = pbkdf2_iterations

    def register(
        self,
        role: Role,
        display_name: str,
        email: str,
        password: str,
        language: Language = Language.EN,
    ) -> UserProfile:
        if len(password) < PASSWORD_MIN_CHARS:
            raise ValidationError(
                f"password must be at least {PASSWORD_MIN_CHARS} characters",
                code="auth.weak_password",
            )
        profile = UserProfile(
            id=new_id(),
            role=role,
            display_name=display_name,
            email=email.strip().lower(),
            credential_hash=hash_password(password, self._iterations),
            language=language,
            unit_prefs=UnitPreferences(),
            targets=DEFAULT_TARGETS if role == Role.PATIENT else None,
        )
        self._store.add_user(profile)  # rejects duplicate email
        return profile

    def login(self, email: str, password: str) -> tuple[str, Session]:
        user = self._store.find_user_by_email(email.strip().lower())
        if user is None or not verify_password(password, user.credential_hash):
            raise AuthenticationError("invalid email or password", code="invalid_credentials")
        token = secrets.token_urlsafe(32)
        now = int(self._clock())
        session = Session(
            token_hash=hash_token(token),
            user_id=user.id,
            issued_at=now,
            expires_at=now + self._ttl,
        )
        self._store.add_session(session)
        return token, session

    def logout(self, token: str) -> None:
        self.authenticate(token)
        self._store.delete_session(hash_token(token))

    def authenticate(self, token: Optional[str]) -> UserProfile:
        """Resolve a bearer token to its user or raise an opaque 401."""
        if not token:
            raise AuthenticationError("authentication required", code="unauthenticated")
        session = self._store.get_session(hash_token(token))
        if session is None:
            raise AuthenticationError("authentication required", code="unauthenticated")
        if int(self._clock()) >= session.expires_at:
            self._store.delete_session(session.token_hash)
            raise AuthenticationError("authentication required", code="unauthenticated")
        return self._store.get_user(session.user_id)
