"""Content-addressed on-disk cache for coefficient and count vectors.

Each entry is one JSON file named by the hash of its key.  Entries carry the
package version and a payload checksum; anything stale or corrupt is treated
as a miss and recomputed.  Writes go through a temporary file and an atomic
rename so concurrent runs never observe partial entries.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable

from . import __version__


def resolve_dir(override: str | None = None) -> Path | None:
    """The cache directory to use, or None when caching is disabled."""
    path = override or os.environ.get("HOOKBIAS_CACHE_DIR")
    return Path(path) if path else None


def _key_name(key: dict) -> str:
    blob = json.dumps(key, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:32] + ".json"


def _checksum(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def load(directory: Path, key: dict):
    path = directory / _key_name(key)
    try:
        entry = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if (
        entry.get("version") != __version__
        or entry.get("key") != key
        or entry.get("checksum") != _checksum(entry.get("payload"))
    ):
        return None
    return entry["payload"]


def store(directory: Path, key: dict, payload) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    entry = {
        "version": __version__,
        "key": key,
        "payload": payload,
        "checksum": _checksum(payload),
    }
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, directory / _key_name(key))
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def cached(directory: Path | None, key: dict, compute: Callable[[], list]):
    """Fetch the payload for ``key``, computing and storing it on a miss."""
    if directory is None:
        return compute()
    hit = load(directory, key)
    if hit is not None:
        return hit
    payload = compute()
    store(directory, key, payload)
    return payload
