"""Service configuration: JSON file, overridden by GLUCOLOG_* variables."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from typing import Optional

from ..errors import ValidationError


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    store_path: Optional[str] = None  # None runs on the in-memory store
    backup_dir: str = "backups"
    backup_interval_hours: float = 12.0
    token_ttl_hours: float = 24.0
    pbkdf2_iterations: int = 210_000

    @property
    def token_ttl_s(self) -> int:
        return int(self.token_ttl_hours * 3600)

    @property
    def backup_interval_s(self) -> int:
        return int(self.backup_interval_hours * 3600)


_ENV_PREFIX = "GLUCOLOG_"


def load_config(path: Optional[str] = None, env: Optional[dict] = None) -> ServiceConfig:
    """Read the optional JSON config file, then apply environment overrides."""
    values: dict = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise ValidationError(f"cannot read config file {path}: {exc}", code="config.unreadable")
        except ValueError as exc:
            raise ValidationError(f"config file {path} is not valid JSON: {exc}", code="config.bad_json")
        if not isinstance(raw, dict):
            raise ValidationError(f"config file {path} must hold a JSON object", code="config.bad_json")
        values.update(raw)

    environ = os.environ if env is None else env
    for f in fields(ServiceConfig):
        env_key = _ENV_PREFIX + f.name.upper()
        if env_key in environ:
            values[f.name] = environ[env_key]

    known = {f.name: f for f in fields(ServiceConfig)}
    unknown = set(values) - set(known)
    if unknown:
        raise ValidationError(
            f"unknown config keys: {', '.join(sorted(unknown))}", code="config.unknown_key")

    kwargs = {}
    for name, value in values.items():
        target = known[name].type
        try:
            if target in ("int", int):
                value = int(value)
            elif target in ("float", float):
                value = float(value)
        except (TypeError, ValueError):
            raise ValidationError(
                f"config value {name}={value!r} is not a number", code="config.bad_value")
        kwargs[name] = value
    cfg = ServiceConfig(**kwargs)
    if cfg.backup_interval_hours <= 0 or cfg.token_ttl_hours <= 0 or cfg.pbkdf2_iterations <= 0:
        raise ValidationError("intervals and iteration counts must be positive", code="config.bad_value")
    return cfg
