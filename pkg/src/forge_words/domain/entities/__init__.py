"""
Domain Entities - Words and run configuration.

Exports:
    - Word: Finite sequence of letters
    - MultiplicityList: Letter multiplicities [l_1, ..., l_n]
    - OccurrenceTriple: One occurrence of a length-3 pattern
    - GoodPair: Pair of words from the exactly-one-123 bijection
    - Pattern: Length-3 permutation pattern
    - RunConfig, Command, OutputFormat: CLI configuration
"""
from forge_words.domain.entities.run_config import Command, OutputFormat, RunConfig
from forge_words.domain.entities.word import (
    PATTERN_123,
    PATTERN_132,
    PATTERN_321,
    GoodPair,
    MultiplicityList,
    OccurrenceTriple,
    Pattern,
    Word,
    parse_pattern,
)

__all__ = [
    "Word",
    "MultiplicityList",
    "OccurrenceTriple",
    "GoodPair",
    "Pattern",
    "PATTERN_123",
    "PATTERN_132",
    "PATTERN_321",
    "parse_pattern",
    "RunConfig",
    "Command",
    "OutputFormat",
]
