"""Bundled localized documents (FAQ, terms) with English fallback.

Documents live next to this module as ``<name>.<lang>.md`` files whose
first line is a ``<!-- version: N -->`` marker, so translators can edit
them without touching code.
"""

from __future__ import annotations

import re
from importlib import resources
from typing import Optional

from ..domain import Language
from ..errors import NotFoundError

DOCUMENTS = ("faq", "terms")

_VERSION_RE = re.compile(r"<!--\s*version:\s*(\d+)\s*-->")


def load_document(name: str, language: Optional[Language]) -> dict:
    """Return ``{name, language, version, body}``, falling back to English."""
    if name not in DOCUMENTS:
        raise NotFoundError(f"unknown document {name!r}", code="not_found")
    wanted = language or Language.EN
    for lang in (wanted, Language.EN):
        try:
            text = (
                resources.files(__package__)
                .joinpath("content", f"{name}.{lang.value}.md")
                .read_text(encoding="utf-8")
            )
        except FileNotFoundError:
            continue
        match = _VERSION_RE.match(text)
        version = int(match.group(1)) if match else 0
        body = text[match.end():].lstrip("\n") if match else text
        return {
            "name": name,
            "language": lang.value,
            "version": version,
            "format": "markdown",
            "body": body,
        }
    raise NotFoundError(f"document {name!r} has no bundled translation", code="not_found")
