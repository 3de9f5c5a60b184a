"""
Ports - Interfaces for external dependencies (Hexagonal Architecture).

Exports:
    - ICountCacheStoragePort: Interface for avoider-count persistence
"""
from forge_words.application.ports.count_cache_port import ICountCacheStoragePort

__all__ = ["ICountCacheStoragePort"]
