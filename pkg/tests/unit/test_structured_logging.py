"""Tests for structured logging module."""
import json
from unittest.mock import patch

import pytest

from forge_words.infrastructure.logging import (
    LOG_LEVEL_ENV_VAR,
    LogService,
    configure_logging,
    get_logger,
    reset_logging,
)


@pytest.fixture(autouse=True)
def reset_logging_state():
    """Reset logging state before and after each test."""
    reset_logging()
    yield
    reset_logging()


def _records(stderr: str) -> list[dict]:
    return [json.loads(line) for line in stderr.splitlines() if line.startswith("{")]


class TestGetLogger:
    """Tests for get_logger function."""

    def test_get_logger_returns_bound_logger(self):
        """get_logger should return a structlog BoundLogger."""
        logger = get_logger("test")
        assert hasattr(logger, "info")
        assert hasattr(logger, "debug")
        assert hasattr(logger, "warning")
        assert hasattr(logger, "error")

    def test_get_logger_configures_logging(self):
        """get_logger should auto-configure logging."""
        with patch("forge_words.infrastructure.logging.configure_logging") as mock_configure:
            get_logger("test1")
            get_logger("test2")
            assert mock_configure.call_count == 2


class TestConfigureLogging:
    """Tests for configure_logging function."""

    def test_json_records_on_stderr(self, capsys):
        """Records are JSON lines on stderr; stdout stays clean."""
        configure_logging(json_output=True, log_level="INFO")
        LogService("forge_words.test").info("series computed", r=2, order=60)
        captured = capsys.readouterr()
        assert captured.out == ""
        record = _records(captured.err)[-1]
        assert record["event"] == "series computed"
        assert record["r"] == 2
        assert record["order"] == 60
        assert record["level"] == "info"
        assert "timestamp" in record

    def test_level_filters_records(self, capsys):
        """Records below the configured level are dropped."""
        configure_logging(json_output=True, log_level="WARNING")
        service = LogService("forge_words.test")
        service.info("hidden")
        service.warning("shown")
        events = [record["event"] for record in _records(capsys.readouterr().err)]
        assert events == ["shown"]

    def test_level_from_environment(self, capsys, monkeypatch):
        """FORGE_WORDS_LOG_LEVEL is the fallback level."""
        monkeypatch.setenv(LOG_LEVEL_ENV_VAR, "ERROR")
        configure_logging(json_output=True)
        service = LogService("forge_words.test")
        service.warning("hidden")
        service.error("shown")
        events = [record["event"] for record in _records(capsys.readouterr().err)]
        assert events == ["shown"]

    def test_console_renderer(self, capsys):
        """Console output is plain text, not JSON."""
        configure_logging(json_output=False, log_level="INFO")
        LogService("forge_words.test").info("console message")
        err = capsys.readouterr().err
        assert "console message" in err
        assert not _records(err)

    def test_configure_only_once(self, capsys):
        """A second call keeps the first configuration."""
        configure_logging(json_output=True, log_level="ERROR")
        configure_logging(json_output=True, log_level="DEBUG")
        LogService("forge_words.test").info("hidden")
        assert _records(capsys.readouterr().err) == []


class TestLogService:
    """Tests for LogService class."""

    def test_log_service_init(self):
        """LogService should initialize with a logger."""
        service = LogService("test_module")
        assert service._logger is not None


class TestCorrelationId:
    """Tests for correlation ID functionality."""

    def test_generate_correlation_id_returns_uuid(self):
        """generate_correlation_id should return a valid UUID string."""
        cid = LogService.generate_correlation_id()
        assert isinstance(cid, str)
        assert len(cid) == 36

    def test_correlation_context_sets_id(self):
        """correlation_context should set the correlation ID."""
        with LogService.correlation_context("run-123") as cid:
            assert cid == "run-123"
            assert LogService.get_correlation_id() == "run-123"

    def test_correlation_context_generates_id_if_none(self):
        """correlation_context should generate ID if not provided."""
        with LogService.correlation_context() as cid:
            assert len(cid) == 36

    def test_correlation_context_restores_previous(self):
        """Nested contexts restore the outer ID on exit."""
        with LogService.correlation_context("outer"):
            with LogService.correlation_context("inner"):
                assert LogService.get_correlation_id() == "inner"
            assert LogService.get_correlation_id() == "outer"
        assert LogService.get_correlation_id() is None

    def test_correlation_id_in_records(self, capsys):
        """Records logged inside the context carry the ID."""
        configure_logging(json_output=True, log_level="INFO")
        service = LogService("forge_words.test")
        with LogService.correlation_context("run-7"):
            service.info("inside")
        service.info("outside")
        inside, outside = _records(capsys.readouterr().err)[-2:]
        assert inside["correlation_id"] == "run-7"
        assert "correlation_id" not in outside


class TestTimed:
    """Tests for LogService.timed."""

    def test_timed_fills_elapsed(self):
        """timed yields a dict that receives the elapsed time."""
        with LogService.timed("solve_g_system", r=2) as timing:
            assert timing["operation"] == "solve_g_system"
            assert timing["r"] == 2
        assert timing["elapsed_seconds"] >= 0
        assert timing["elapsed_ms"] == pytest.approx(timing["elapsed_seconds"] * 1000)

    def test_timed_logs_start_and_completion(self, capsys):
        """timed logs a start and a completion record at the chosen level."""
        configure_logging(json_output=True, log_level="INFO")
        service = LogService("forge_words.test")
        with LogService.timed("compute_f", logger=service, log_level="info", r=1):
            pass
        records = _records(capsys.readouterr().err)
        assert [record["event"] for record in records] == [
            "Starting compute_f",
            "Completed compute_f",
        ]
        assert all(record["r"] == 1 for record in records)
        assert "elapsed_ms" in records[1]

    def test_timed_logs_completion_on_error(self, capsys):
        """The completion record is written even when the block raises."""
        configure_logging(json_output=True, log_level="INFO")
        service = LogService("forge_words.test")
        with pytest.raises(RuntimeError):
            with LogService.timed("guess", logger=service, log_level="info"):
                raise RuntimeError("boom")
        events = [record["event"] for record in _records(capsys.readouterr().err)]
        assert events[-1] == "Completed guess"
