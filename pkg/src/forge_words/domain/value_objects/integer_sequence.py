"""
IntegerSequence - Finite prefix of an integer sequence indexed from n = 0.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass


@dataclass(frozen=True)
class IntegerSequence:
    """
    Attributes:
        values: a(0), a(1), ...
        label: Origin tag, e.g. "a_2" or "catalan"
    """

    values: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def of(cls, values: Iterable[int], label: str = "") -> IntegerSequence:
        return cls(tuple(values), label)

    def prefix(self, length: int) -> IntegerSequence:
        return IntegerSequence(self.values[:length], self.label)

    def is_zero(self) -> bool:
        return not any(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]
