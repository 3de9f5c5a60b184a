"""
GTable - The weight enumerators g_r^(i,j) for 0 <= i <= j <= r-1.

Lookup is symmetric: g_r^(s,k) with s > k is the stored entry (k,s).
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from forge_words.domain.value_objects.truncated_series import TruncatedSeries


def g_keys(r: int) -> list[tuple[int, int]]:
    """The C(r+1, 2) index pairs (i, j) with 0 <= i <= j <= r-1."""
    return [(i, j) for i in range(r) for j in range(i, r)]


@dataclass(frozen=True)
class GTable:
    """
    Table of weight enumerators of the 123-avoiding classes W_r^(i,j).

    Attributes:
        r: Copies of every inner letter
        entries: Map (i, j) -> series, for 0 <= i <= j <= r-1 only
    """

    r: int
    entries: Mapping[tuple[int, int], TruncatedSeries]

    def __post_init__(self) -> None:
        if set(self.entries) != set(g_keys(self.r)):
            raise ValueError(
                f"GTable for r={self.r} needs exactly the keys {g_keys(self.r)}"
            )
        object.__setattr__(self, "entries", dict(self.entries))

    def get(self, s: int, k: int) -> TruncatedSeries:
        """g_r^(s,k), reading (k,s) when s > k."""
        return self.entries[(s, k) if s <= k else (k, s)]

    def __getitem__(self, key: tuple[int, int]) -> TruncatedSeries:
        return self.get(*key)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(g_keys(self.r))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def order(self) -> int:
        """Smallest known order among the entries."""
        return min(series.order for series in self.entries.values())
