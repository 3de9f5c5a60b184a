"""
Storage - Persistence adapters.

Exports:
    - JsonLinesCountCacheStorage: Avoider counts in a JSON lines file
    - MemoryCountCacheStorage: Avoider counts in memory
"""
from forge_words.infrastructure.storage.count_cache_storage import (
    JsonLinesCountCacheStorage,
    MemoryCountCacheStorage,
)

__all__ = ["JsonLinesCountCacheStorage", "MemoryCountCacheStorage"]
