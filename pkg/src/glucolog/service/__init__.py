"""HTTP API, authentication, localization, and operational tooling."""

from .app import create_app
from .auth import AuthService, hash_password, hash_token, verify_password
from .config import ServiceConfig, load_config

__all__ = [
    "AuthService",
    "ServiceConfig",
    "create_app",
    "hash_password",
    "hash_token",
    "load_config",
    "verify_password",
]
