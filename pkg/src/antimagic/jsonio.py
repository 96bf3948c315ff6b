"""Shared helpers for the JSON documents this package reads and writes.

Every document carries a ``schema_version`` field so files can be rejected
instead of misread when the format changes.
"""

from __future__ import annotations

import json
from pathlib import Path

SCHEMA_VERSION = 1


class SchemaVersionError(ValueError):
    """Raised when a document's schema version is missing or unsupported."""


def stamp(payload: dict) -> dict:
    doc = {"schema_version": SCHEMA_VERSION}
    doc.update(payload)
    return doc


def check_version(doc: dict, kind: str = "document") -> None:
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"unsupported {kind} schema_version {version!r} (expected {SCHEMA_VERSION})"
        )


def dump_path(path: str | Path, doc: dict) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=False) + "\n")


def load_path(path: str | Path, kind: str = "document") -> dict:
    doc = json.loads(Path(path).read_text())
    if not isinstance(doc, dict):
        raise SchemaVersionError(f"{kind} at {path} is not a JSON object")
    check_version(doc, kind)
    return doc
