"""
Count cache storage - Adapters for ICountCacheStoragePort.

JsonLinesCountCacheStorage keeps one record per line:

    {"count": 19, "list": [1, 2, 2]}

Loading validates every record and reports the first bad line by number.
"""
from __future__ import annotations

import json
import os
import tempfile
from collections.abc import Mapping
from pathlib import Path

from pydantic import ValidationError

from forge_words.domain import CacheRecordError
from forge_words.infrastructure.codecs import CacheRecord
from forge_words.infrastructure.logging import LogService


class JsonLinesCountCacheStorage:
    """
    Avoider counts persisted as JSON lines.

    Usage:
        storage = JsonLinesCountCacheStorage(Path("avoiders.jsonl"))
        storage.save({(1, 2, 2): 19})
        storage.load()   # {(1, 2, 2): 19}
    """

    def __init__(self, path: Path | str) -> None:
        self._path = Path(path)
        self._logger = LogService(__name__)

    @property
    def path(self) -> Path:
        return self._path

    def exists(self) -> bool:
        return self._path.is_file()

    def load(self) -> dict[tuple[int, ...], int]:
        """
        Raises:
            CacheRecordError: On a malformed line or a key stored with two counts
        """
        counts: dict[tuple[int, ...], int] = {}
        with self._path.open(encoding="utf-8") as handle:
            for line_number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = CacheRecord.model_validate_json(line)
                except ValidationError as e:
                    raise CacheRecordError(line_number, _first_error(e)) from e
                key = tuple(record.counts)
                if counts.get(key, record.count) != record.count:
                    raise CacheRecordError(line_number, f"conflicting count for list {list(key)}")
                counts[key] = record.count
        self._logger.debug("Cache file read", path=str(self._path), records=len(counts))
        return counts

    def save(self, counts: Mapping[tuple[int, ...], int]) -> None:
        """Rewrite the file atomically, records sorted by list."""
        self._path.parent.mkdir(parents=True, exist_ok=True)
        lines = [
            json.dumps(
                CacheRecord(counts=list(key), count=count).model_dump(by_alias=True),
                sort_keys=True,
            )
            for key, count in sorted(counts.items())
        ]
        fd, tmp_name = tempfile.mkstemp(
            dir=self._path.parent, prefix=self._path.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write("".join(line + "\n" for line in lines))
            os.replace(tmp_name, self._path)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise
        self._logger.debug("Cache file written", path=str(self._path), records=len(lines))


def _first_error(error: ValidationError) -> str:
    details = error.errors()
    if not details:
        return str(error)
    first = details[0]
    location = ".".join(str(part) for part in first.get("loc", ()))
    return f"{location}: {first.get('msg', '')}" if location else str(first.get("msg", ""))


class MemoryCountCacheStorage:
    """
    In-memory storage (not persistent).

    Usage:
        storage = MemoryCountCacheStorage()
        storage.save({(2, 2, 2): 43})
    """

    def __init__(self) -> None:
        self._counts: dict[tuple[int, ...], int] = {}
        self._saved = False

    def exists(self) -> bool:
        return self._saved

    def load(self) -> dict[tuple[int, ...], int]:
        return dict(self._counts)

    def save(self, counts: Mapping[tuple[int, ...], int]) -> None:
        self._counts = dict(counts)
        self._saved = True

    def clear(self) -> None:
        """Clear all counts (for testing)."""
        self._counts.clear()
        self._saved = False
