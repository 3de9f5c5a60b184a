"""Tests for the avoider count storage adapters."""
import pytest

from forge_words.application.ports import ICountCacheStoragePort
from forge_words.domain import CacheRecordError
from forge_words.infrastructure.storage import (
    JsonLinesCountCacheStorage,
    MemoryCountCacheStorage,
)


class TestJsonLinesCountCacheStorage:
    """Tests for JsonLinesCountCacheStorage."""

    def test_implements_port(self, tmp_path):
        assert isinstance(JsonLinesCountCacheStorage(tmp_path / "c.jsonl"), ICountCacheStoragePort)

    def test_save_and_load(self, tmp_path):
        storage = JsonLinesCountCacheStorage(tmp_path / "cache.jsonl")
        assert not storage.exists()
        storage.save({(2, 2, 2): 43, (1, 2, 2): 19})
        assert storage.exists()
        assert storage.load() == {(1, 2, 2): 19, (2, 2, 2): 43}

    def test_file_format_is_sorted_json_lines(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        JsonLinesCountCacheStorage(path).save({(2, 2, 2): 43, (1, 2, 2): 19})
        assert path.read_text().splitlines() == [
            '{"count": 19, "list": [1, 2, 2]}',
            '{"count": 43, "list": [2, 2, 2]}',
        ]

    def test_creates_parent_directories(self, tmp_path):
        storage = JsonLinesCountCacheStorage(tmp_path / "deep" / "dir" / "cache.jsonl")
        storage.save({(1,): 1})
        assert storage.load() == {(1,): 1}

    def test_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text('\n{"count": 2, "list": [1, 1]}\n\n')
        assert JsonLinesCountCacheStorage(path).load() == {(1, 1): 2}

    def test_malformed_line_reported_with_number(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text('{"count": 2, "list": [1, 1]}\n{"count": 2, "list": [2, 1]}\n')
        with pytest.raises(CacheRecordError) as exc_info:
            JsonLinesCountCacheStorage(path).load()
        assert exc_info.value.line_number == 2

    def test_not_json(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text("not json\n")
        with pytest.raises(CacheRecordError) as exc_info:
            JsonLinesCountCacheStorage(path).load()
        assert exc_info.value.line_number == 1

    def test_conflicting_duplicates(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text('{"count": 2, "list": [1, 1]}\n{"count": 3, "list": [1, 1]}\n')
        with pytest.raises(CacheRecordError) as exc_info:
            JsonLinesCountCacheStorage(path).load()
        assert "conflicting" in exc_info.value.detail

    def test_identical_duplicates_accepted(self, tmp_path):
        path = tmp_path / "cache.jsonl"
        path.write_text('{"count": 2, "list": [1, 1]}\n{"count": 2, "list": [1, 1]}\n')
        assert JsonLinesCountCacheStorage(path).load() == {(1, 1): 2}


class TestMemoryCountCacheStorage:
    """Tests for MemoryCountCacheStorage."""

    def test_round_trip_and_clear(self):
        storage = MemoryCountCacheStorage()
        assert isinstance(storage, ICountCacheStoragePort)
        assert not storage.exists()
        storage.save({(1, 1): 2})
        assert storage.exists()
        assert storage.load() == {(1, 1): 2}
        storage.clear()
        assert not storage.exists()
        assert storage.load() == {}
