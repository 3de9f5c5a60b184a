"""
ICountCacheStoragePort - Interface for persisting avoider counts.

Keys are canonical multiplicity lists (sorted ascending, zeros removed).
"""
from collections.abc import Mapping
from typing import Protocol, runtime_checkable


@runtime_checkable
class ICountCacheStoragePort(Protocol):
    """
    Port interface for avoider-count persistence.

    Usage:
        storage = JsonLinesCountCacheStorage(Path("counts.jsonl"))
        cache = AvoiderCountCache(storage=storage)
        cache.load()
        count_avoiders(MultiplicityList.of(2, 2, 2), cache)
        cache.save()
    """

    def load(self) -> dict[tuple[int, ...], int]:
        """
        Read every stored count.

        Raises:
            CacheRecordError: If a stored record is malformed
        """
        ...

    def save(self, counts: Mapping[tuple[int, ...], int]) -> None:
        """Replace the stored counts."""
        ...

    def exists(self) -> bool:
        """Check if anything has been stored yet."""
        ...
