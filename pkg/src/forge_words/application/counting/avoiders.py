"""
Avoider counts - Memoized A(l), the number of 123-avoiding words of a list.

A is symmetric in its arguments, so counts are cached under the sorted
list with zeros removed. The enumeration extends prefixes letter by
letter and stops as soon as a 123 appears, tracking only two values:
the smallest letter so far, and the smallest letter that already has a
smaller letter before it. A new letter above the latter closes a 123.
"""
from __future__ import annotations

import threading
from collections.abc import Iterator, Mapping
from functools import lru_cache

from forge_words.application.ports import ICountCacheStoragePort
from forge_words.domain.entities import MultiplicityList
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)


def _count_by_pruned_enumeration(key: tuple[int, ...]) -> int:
    """A(key) for a canonical key, enumerating 123-free prefixes only."""
    n = len(key)
    unset = n + 1

    @lru_cache(maxsize=None)
    def extend(remaining: tuple[int, ...], smallest: int, smallest_middle: int) -> int:
        if not any(remaining):
            return 1
        total = 0
        for index, count in enumerate(remaining):
            if count == 0:
                continue
            letter = index + 1
            if letter > smallest_middle:
                continue
            middle = smallest_middle
            if letter > smallest:
                middle = min(middle, letter)
            rest = remaining[:index] + (count - 1,) + remaining[index + 1 :]
            total += extend(rest, min(smallest, letter), middle)
        return total

    return extend(key, unset, unset)


class AvoiderCountCache:
    """
    Grow-only map from canonical multiplicity list to A(l).

    Safe to share between threads: lookups and inserts take a lock,
    computation runs outside it (two threads may compute the same key,
    both store the same value).

    Usage:
        cache = AvoiderCountCache()
        cache.get_or_compute(MultiplicityList.of(2, 2, 2))   # 43
        cache.get_or_compute(MultiplicityList.of(2, 1, 2))   # 19, key (1, 2, 2)
    """

    def __init__(self, storage: ICountCacheStoragePort | None = None) -> None:
        self._counts: dict[tuple[int, ...], int] = {}
        self._lock = threading.Lock()
        self._storage = storage
        self._logger = LogService(__name__)

    def get_or_compute(self, lst: MultiplicityList) -> int:
        key = lst.canonical_key()
        with self._lock:
            cached = self._counts.get(key)
        if cached is not None:
            return cached

        count = _count_by_pruned_enumeration(key)
        with self._lock:
            stored = self._counts.setdefault(key, count)
        self._logger.debug("Avoider count computed", list=list(key), count=count)
        return stored

    def get(self, lst: MultiplicityList) -> int | None:
        with self._lock:
            return self._counts.get(lst.canonical_key())

    def update(self, counts: Mapping[tuple[int, ...], int]) -> None:
        """Merge precomputed counts; keys must already be canonical."""
        with self._lock:
            for key, count in counts.items():
                self._counts.setdefault(key, count)

    def snapshot(self) -> dict[tuple[int, ...], int]:
        with self._lock:
            return dict(sorted(self._counts.items()))

    def load(self) -> int:
        """
        Merge the counts held by the storage port.

        Returns:
            Number of records read

        Raises:
            CacheRecordError: If the storage holds a malformed record
        """
        if self._storage is None or not self._storage.exists():
            return 0
        counts = self._storage.load()
        self.update(counts)
        self._logger.info("Avoider cache loaded", records=len(counts))
        return len(counts)

    def save(self) -> int:
        """Write every cached count through the storage port."""
        if self._storage is None:
            return 0
        counts = self.snapshot()
        self._storage.save(counts)
        self._logger.info("Avoider cache saved", records=len(counts))
        return len(counts)

    def __contains__(self, lst: object) -> bool:
        if not isinstance(lst, MultiplicityList):
            return False
        return self.get(lst) is not None

    def __len__(self) -> int:
        with self._lock:
            return len(self._counts)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.snapshot())


_default_cache = AvoiderCountCache()


def default_cache() -> AvoiderCountCache:
    """Process-wide cache used when callers pass none."""
    return _default_cache


def count_avoiders(lst: MultiplicityList, cache: AvoiderCountCache | None = None) -> int:
    """
    A(l): number of 123-avoiding words associated with lst.

    Zero entries are ignored and the result does not depend on the
    order of the entries. The empty list has one word, the empty one.
    """
    return (cache if cache is not None else _default_cache).get_or_compute(lst)
