"""Tests for RunConfig validation and cache path resolution."""
from pathlib import Path

import pytest

from forge_words.domain import InvalidRunConfigError
from forge_words.domain.entities import Command, MultiplicityList, OutputFormat, RunConfig


class TestRunConfigDefaults:
    """Tests for default values."""

    def test_defaults(self):
        config = RunConfig(command=Command.SERIES)
        assert config.r == 1
        assert config.terms is None
        assert (config.deg_x, config.deg_y) == (6, 4)
        assert (config.max_order, config.max_degree) == (None, None)
        assert config.n_max == 300
        assert config.output_format is OutputFormat.JSON

    def test_frozen(self):
        config = RunConfig(command=Command.SERIES)
        with pytest.raises(AttributeError):
            config.r = 2  # type: ignore[misc]


class TestRunConfigValidation:
    """Tests for bound checks."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"r": 0},
            {"terms": -1},
            {"deg_y": 0},
            {"deg_x": -1},
            {"max_order": 0},
            {"max_degree": -1},
            {"guard": -1},
            {"n_max": 0},
        ],
    )
    def test_out_of_range(self, kwargs):
        with pytest.raises(InvalidRunConfigError):
            RunConfig(command=Command.SERIES, **kwargs)

    def test_all_errors_collected(self):
        with pytest.raises(InvalidRunConfigError) as exc_info:
            RunConfig(command=Command.SERIES, r=0, terms=-1)
        assert len(exc_info.value.errors) == 2

    def test_asymptotics_guess_prefix_minimum(self):
        RunConfig(command=Command.ASYMPTOTICS, terms=60)
        with pytest.raises(InvalidRunConfigError, match="--terms >= 60"):
            RunConfig(command=Command.ASYMPTOTICS, terms=59)

    def test_count_requires_list(self):
        with pytest.raises(InvalidRunConfigError, match="requires --list"):
            RunConfig(command=Command.COUNT)

    def test_verify_total_limit(self):
        RunConfig(
            command=Command.COUNT, multiplicities=MultiplicityList.uniform(3, 4), verify=True
        )
        with pytest.raises(InvalidRunConfigError, match="--verify"):
            RunConfig(
                command=Command.COUNT,
                multiplicities=MultiplicityList.uniform(3, 5),
                verify=True,
            )

    def test_csv_only_for_series(self):
        RunConfig(command=Command.SERIES, output_format=OutputFormat.CSV)
        with pytest.raises(InvalidRunConfigError, match="csv"):
            RunConfig(
                command=Command.COUNT,
                multiplicities=MultiplicityList.of(1, 1),
                output_format=OutputFormat.CSV,
            )


class TestResolveCachePath:
    """Tests for cache path precedence."""

    def test_explicit_path_wins(self, monkeypatch, tmp_path):
        monkeypatch.setenv(RunConfig.CACHE_ENV_VAR, str(tmp_path / "env.jsonl"))
        config = RunConfig(command=Command.SERIES, cache_path=tmp_path / "flag.jsonl")
        assert config.resolve_cache_path() == tmp_path / "flag.jsonl"

    def test_environment_fallback(self, monkeypatch):
        monkeypatch.setenv("FORGE_WORDS_CACHE", "/tmp/avoiders.jsonl")
        assert RunConfig(command=Command.SERIES).resolve_cache_path() == Path(
            "/tmp/avoiders.jsonl"
        )

    def test_no_cache(self, monkeypatch):
        monkeypatch.delenv("FORGE_WORDS_CACHE", raising=False)
        assert RunConfig(command=Command.SERIES).resolve_cache_path() is None
