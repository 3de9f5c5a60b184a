"""
Commands - One function per CLI subcommand.

Every command takes a validated RunConfig and returns a CommandResult;
domain errors propagate to the entry point, which maps them to exit codes.
"""
from __future__ import annotations

from typing import Any

from forge_words.application.algebraic import DEFAULT_GUARD as ALGEBRAIC_GUARD
from forge_words.application.algebraic import eval_at_series, guess_algebraic
from forge_words.application.counting import (
    AvoiderCountCache,
    count_avoiders,
    count_exactly_k_bruteforce,
    count_exactly_one_123,
)
from forge_words.application.recurrence import DEFAULT_GUARD as RECURRENCE_GUARD
from forge_words.application.recurrence import (
    annihilates,
    conjecture_check,
    estimate_asymptotics,
    extend_sequence,
    guess_recurrence,
    operators_equivalent,
)
from forge_words.application.sequences import a_r_sequence
from forge_words.application.series import compute_f
from forge_words.cli.output import CommandResult
from forge_words.domain import FixtureFormatError, NoRecurrenceFoundError
from forge_words.domain.entities import PATTERN_123, PATTERN_321, MultiplicityList, RunConfig
from forge_words.domain.value_objects import IntegerSequence
from forge_words.infrastructure.codecs import encode_operator, encode_polynomial, encode_series
from forge_words.infrastructure.fixtures import has_operator_fixture, load_operator, load_quartic
from forge_words.infrastructure.logging import LogService
from forge_words.infrastructure.storage import JsonLinesCountCacheStorage

_logger = LogService(__name__)

DEFAULT_SERIES_TERMS = 10
DEFAULT_GUESS_ALG_TERMS = 80
DEFAULT_GUESS_REC_TERMS = 40
DEFAULT_GUESS_REC_BUDGET = (2, 4)
ASYMPTOTIC_SEED_TERMS = 30
# Order/degree budget and prefix length for guessing when no operator is checked in;
# a_3 satisfies an operator of order 7 and degree 14
ASYMPTOTIC_GUESS_BUDGET = (8, 14)
ASYMPTOTIC_GUESS_TERMS = 260


def _open_cache(config: RunConfig) -> AvoiderCountCache:
    path = config.resolve_cache_path()
    cache = AvoiderCountCache(storage=JsonLinesCountCacheStorage(path) if path else None)
    cache.load()
    return cache


def _require_list(config: RunConfig) -> MultiplicityList:
    assert config.multiplicities is not None  # enforced by RunConfig
    return config.multiplicities


def _budget(config: RunConfig, default: tuple[int, int]) -> tuple[int, int]:
    max_order = default[0] if config.max_order is None else config.max_order
    max_degree = default[1] if config.max_degree is None else config.max_degree
    return max_order, max_degree


def cmd_count(config: RunConfig) -> CommandResult:
    """Exactly-one-123 count of --list, with the reversed-list companion and optional oracle."""
    lst = _require_list(config)
    cache = _open_cache(config)
    count = count_exactly_one_123(lst, cache)
    reversed_count = count_exactly_one_123(lst.reversed(), cache)
    payload: dict[str, Any] = {
        "list": str(lst),
        "count": count,
        "reversed_list_count": reversed_count,
    }
    ok = count == reversed_count

    if config.verify:
        brute_123 = count_exactly_k_bruteforce(lst, PATTERN_123, 1)
        brute_321 = count_exactly_k_bruteforce(lst.reversed(), PATTERN_321, 1)
        verified = brute_123 == count and brute_321 == count
        payload["bruteforce_123"] = brute_123
        payload["bruteforce_321_reversed_list"] = brute_321
        payload["verified"] = verified
        if not verified:
            _logger.error(
                "Formula disagrees with brute force",
                list=str(lst),
                formula=count,
                bruteforce_123=brute_123,
                bruteforce_321=brute_321,
            )
        ok = ok and verified

    cache.save()
    return CommandResult(payload=payload, ok=ok)


def cmd_avoiders(config: RunConfig) -> CommandResult:
    """A(--list), the number of 123-avoiding words."""
    lst = _require_list(config)
    cache = _open_cache(config)
    count = count_avoiders(lst, cache)
    cache.save()
    return CommandResult(
        payload={"list": str(lst), "canonical": list(lst.canonical_key()), "count": count}
    )


def cmd_series(config: RunConfig) -> CommandResult:
    """f_r with --terms coefficients in the series wire format."""
    terms = DEFAULT_SERIES_TERMS if config.terms is None else config.terms
    f = compute_f(config.r, terms)
    return CommandResult(
        payload=encode_series(f, config.r, "f"),
        table=[(n, str(c)) for n, c in enumerate(f.coefficients)],
    )


def cmd_guess_alg(config: RunConfig) -> CommandResult:
    """Guess the algebraic equation of f_r and verify it on every computed coefficient."""
    terms = DEFAULT_GUESS_ALG_TERMS if config.terms is None else config.terms
    guard = ALGEBRAIC_GUARD if config.guard is None else config.guard
    fixture = load_quartic() if config.compare_fixture and config.r == 2 else None
    if config.compare_fixture and fixture is None:
        raise FixtureFormatError("polynomial", f"no checked-in algebraic equation for r={config.r}")

    f = compute_f(config.r, terms)
    polynomial = guess_algebraic(f, config.deg_x, config.deg_y, guard)
    payload: dict[str, Any] = {"r": config.r, "order": f.order, "guard": guard}
    if polynomial is None:
        payload["found"] = False
        return CommandResult(payload=payload, ok=False)

    residual_zero = eval_at_series(polynomial, f).is_zero()
    payload.update(
        found=True,
        polynomial=encode_polynomial(polynomial),
        degree_profile=list(polynomial.degree_profile()),
        residual_zero=residual_zero,
    )
    ok = residual_zero
    if fixture is not None:
        match = polynomial == fixture.normalized()
        payload["fixture_match"] = match
        ok = ok and match
    return CommandResult(payload=payload, ok=ok)


def cmd_guess_rec(config: RunConfig) -> CommandResult:
    """Guess the recurrence of a_r and verify it on every computed term."""
    terms = DEFAULT_GUESS_REC_TERMS if config.terms is None else config.terms
    guard = RECURRENCE_GUARD if config.guard is None else config.guard
    fixture = load_operator(config.r) if config.compare_fixture else None

    seq = a_r_sequence(config.r, terms)
    max_order, max_degree = _budget(config, DEFAULT_GUESS_REC_BUDGET)
    op = guess_recurrence(seq, max_order, max_degree, guard)
    payload: dict[str, Any] = {"r": config.r, "terms": len(seq), "guard": guard}
    if op is None:
        payload["found"] = False
        return CommandResult(payload=payload, ok=False)

    residual_zero = annihilates(op, seq)
    payload.update(found=True, operator=encode_operator(op), residual_zero=residual_zero)
    ok = residual_zero
    if fixture is not None:
        match = operators_equivalent(op, fixture, seq)
        payload["fixture_match"] = match
        payload["fixture_identical"] = op == fixture.normalized()
        ok = ok and match
    return CommandResult(payload=payload, ok=ok)


def asymptotic_sequence(config: RunConfig) -> tuple[IntegerSequence, str]:
    """
    a_r(0..n_max) and where it came from.

    Checked-in operators extend a short series prefix. Otherwise a
    recurrence is guessed on the first --terms series coefficients and
    that recurrence extends them.

    Raises:
        InsufficientTermsError: If --terms is too short for the budget
        NoRecurrenceFoundError: If nothing fits the budget
        LeadingCoefficientZeroError, NonIntegerStepError: If an extension fails
    """
    r, n_max = config.r, config.n_max
    if has_operator_fixture(r):
        op = load_operator(r)
        seed = a_r_sequence(r, max(ASYMPTOTIC_SEED_TERMS, op.order + 1))
        return extend_sequence(op, seed, n_max), "fixture"

    guard = RECURRENCE_GUARD if config.guard is None else config.guard
    max_order, max_degree = _budget(config, ASYMPTOTIC_GUESS_BUDGET)
    terms = ASYMPTOTIC_GUESS_TERMS if config.terms is None else config.terms
    prefix = a_r_sequence(r, terms)
    op = guess_recurrence(prefix, max_order, max_degree, guard)
    if op is None:
        raise NoRecurrenceFoundError(prefix.label, max_order, max_degree)
    _logger.info("Extending with guessed recurrence", r=r, order=op.order, terms=terms)
    return extend_sequence(op, prefix, n_max), "guessed"


def cmd_asymptotics(config: RunConfig) -> CommandResult:
    """Estimate (mu, alpha, C) for a_r and judge them against the growth conjecture."""
    seq, source = asymptotic_sequence(config)
    estimate = estimate_asymptotics(seq)
    report = conjecture_check(config.r, estimate)
    payload = report.to_dict()
    payload.update(source=source, n_max=config.n_max)
    return CommandResult(payload=payload, ok=report.passed)
