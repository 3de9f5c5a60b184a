"""
RunConfig - Configuration for one CLI experiment.

Immutable (frozen) so a run is reproducible from its flags alone.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from forge_words.domain.entities.word import MultiplicityList
from forge_words.domain.exceptions import InvalidRunConfigError


class Command(str, Enum):
    """CLI subcommands."""

    COUNT = "count"
    AVOIDERS = "avoiders"
    SERIES = "series"
    GUESS_ALG = "guess-alg"
    GUESS_REC = "guess-rec"
    ASYMPTOTICS = "asymptotics"
    SELFTEST = "selftest"


class OutputFormat(str, Enum):
    """Output renderers. CSV is limited to coefficient tables."""

    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


@dataclass(frozen=True)
class RunConfig:
    """
    Configuration for a CLI run.

    Attributes:
        command: Subcommand to execute
        r: Copies of each letter for the series-based commands
        terms: Number of series coefficients (None = command default)
        multiplicities: Multiplicity list for count/avoiders
        deg_x, deg_y: Degree budget for algebraic guessing
        max_order, max_degree: Order/degree budget for recurrence guessing
            (None = command default)
        guard: Guard window (None = module default)
        n_max: Extension target for asymptotics
        verify: Cross-check count against the brute-force oracle
        compare_fixture: Compare guessed objects with the checked-in fixtures
        cache_path: JSON-lines avoider cache file
        output_format: Renderer for stdout
        quick: Run the fast subset of the selftest ladder
    """

    command: Command
    r: int = 1
    terms: int | None = None
    multiplicities: MultiplicityList | None = None
    deg_x: int = 6
    deg_y: int = 4
    max_order: int | None = None
    max_degree: int | None = None
    guard: int | None = None
    n_max: int = 300
    verify: bool = False
    compare_fixture: bool = False
    cache_path: Path | None = None
    output_format: OutputFormat = OutputFormat.JSON
    quick: bool = False

    # Brute-force cross-checks beyond this total take too long
    MAX_VERIFY_TOTAL = 12
    # Guessed recurrences for asymptotics are fitted on at least this many terms
    MIN_ASYMPTOTIC_GUESS_TERMS = 60
    CACHE_ENV_VAR = "FORGE_WORDS_CACHE"

    def __post_init__(self) -> None:
        errors: list[str] = []
        if self.r < 1:
            errors.append("r must be positive")
        if self.terms is not None and self.terms < 0:
            errors.append("terms must be nonnegative")
        if self.deg_x < 0 or self.deg_y < 1:
            errors.append("degree bounds must satisfy degx >= 0 and degy >= 1")
        if (self.max_order is not None and self.max_order < 1) or (
            self.max_degree is not None and self.max_degree < 0
        ):
            errors.append("recurrence bounds must satisfy order >= 1 and degree >= 0")
        if self.guard is not None and self.guard < 0:
            errors.append("guard must be nonnegative")
        if self.n_max < 1:
            errors.append("nmax must be positive")
        if (
            self.command is Command.ASYMPTOTICS
            and self.terms is not None
            and self.terms < self.MIN_ASYMPTOTIC_GUESS_TERMS
        ):
            errors.append(f"asymptotics needs --terms >= {self.MIN_ASYMPTOTIC_GUESS_TERMS}")
        if self.command in (Command.COUNT, Command.AVOIDERS) and self.multiplicities is None:
            errors.append(f"{self.command.value} requires --list")
        if self.verify and self.multiplicities is not None and (
            self.multiplicities.total > self.MAX_VERIFY_TOTAL
        ):
            errors.append(f"--verify is limited to totals <= {self.MAX_VERIFY_TOTAL}")
        if self.output_format is OutputFormat.CSV and self.command is not Command.SERIES:
            errors.append("csv output is only available for coefficient tables (series)")
        if errors:
            raise InvalidRunConfigError(errors)

    def resolve_cache_path(self) -> Path | None:
        """Explicit --cache wins; otherwise FORGE_WORDS_CACHE, if set."""
        if self.cache_path is not None:
            return self.cache_path
        from_env = os.environ.get(self.CACHE_ENV_VAR)
        return Path(from_env) if from_env else None
