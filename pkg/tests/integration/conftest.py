"""Shared fixtures for integration tests."""
import json

import pytest

from forge_words.cli import main
from forge_words.infrastructure.logging import reset_logging


@pytest.fixture(autouse=True)
def fresh_logging(monkeypatch):
    """Each CLI run configures logging against the current capture streams."""
    monkeypatch.delenv("FORGE_WORDS_CACHE", raising=False)
    reset_logging()
    yield
    reset_logging()


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def run_json(run_cli):
    """Run the CLI with JSON output; returns (exit_code, document)."""

    def _run(*argv: str) -> tuple[int, dict]:
        code, out, _ = run_cli(*argv)
        return code, json.loads(out)

    return _run
