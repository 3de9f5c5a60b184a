"""
Selftest - The acceptance ladder as a pass/fail matrix.

Each rung cross-checks one layer against an independent oracle: brute
force against the double-sum formula, the g-system against printed
coefficients, guessed objects against the checked-in fixtures, and the
extrapolated growth against the conjectured constants.

Usage:
    result = run_selftest(quick=True)
    result.payload["passed"]    # True when every rung passed
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from forge_words.application.algebraic import eval_at_series, guess_algebraic
from forge_words.application.combinatorics import (
    decompose,
    enumerate_words,
    multiplicity_lists,
    recompose,
)
from forge_words.application.combinatorics.patterns import count_pattern_occurrences
from forge_words.application.counting import (
    AvoiderCountCache,
    bona_132_count,
    count_avoiders,
    count_exactly_k_bruteforce,
    count_exactly_one_123,
    noonan_count,
)
from forge_words.application.recurrence import (
    annihilates,
    conjecture_check,
    estimate_asymptotics,
    guess_recurrence,
    operators_equivalent,
)
from forge_words.application.sequences import a_r_sequence, noonan_sequence
from forge_words.application.series import (
    compute_f,
    compute_h,
    g_system_residuals,
    h_from_table,
    solve_g_system,
    warmup_h1,
    warmup_h2,
)
from forge_words.cli.commands import asymptotic_sequence
from forge_words.cli.output import CommandResult
from forge_words.domain.entities import (
    PATTERN_123,
    PATTERN_132,
    PATTERN_321,
    Command,
    MultiplicityList,
    RunConfig,
)
from forge_words.domain.value_objects import ConjectureReport
from forge_words.infrastructure.fixtures import load_operator, load_quartic
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)

Outcome = tuple[bool, str]

G1_FIXTURE = [1, 1, 2, 5, 14, 42]
G2_EVEN_FIXTURE = [1, 1, 6, 43, 352, 3114]
G2_ODD_FIXTURE = [1, 3, 19, 145]
ASYMPTOTIC_N_MAX = 300


@dataclass
class _Ladder:
    """Settings and results shared between rungs."""

    quick: bool
    cache: AvoiderCountCache = field(default_factory=AvoiderCountCache)
    reports: dict[int, ConjectureReport] = field(default_factory=dict)

    @property
    def corpus_total(self) -> int:
        return 6 if self.quick else 9

    @property
    def corpus_letters(self) -> int:
        return 4 if self.quick else 5

    @property
    def series_order(self) -> int:
        return 20 if self.quick else 40

    def corpus(self) -> list[MultiplicityList]:
        return list(multiplicity_lists(self.corpus_total, self.corpus_letters))

    def report(self, r: int) -> ConjectureReport:
        if r not in self.reports:
            config = RunConfig(command=Command.ASYMPTOTICS, r=r, n_max=ASYMPTOTIC_N_MAX)
            seq, _ = asymptotic_sequence(config)
            self.reports[r] = conjecture_check(r, estimate_asymptotics(seq))
        return self.reports[r]


def _mismatches(label: str, failures: list[str], checked: int) -> Outcome:
    if failures:
        return False, f"{len(failures)} of {checked} {label} failed, first: {failures[0]}"
    return True, f"{checked} {label} agree"


def check_avoider_fixtures(ladder: _Ladder) -> Outcome:
    g1 = [count_avoiders(MultiplicityList.uniform(1, n), ladder.cache) for n in range(6)]
    g2_even = [count_avoiders(MultiplicityList.uniform(2, n), ladder.cache) for n in range(6)]
    g2_odd = [
        count_avoiders(MultiplicityList((*(2,) * n, 1)), ladder.cache) for n in range(4)
    ]
    table = solve_g_system(2, 10)
    from_series_even = [int(table.get(0, 0)[2 * n]) for n in range(6)]
    from_series_odd = [int(table.get(0, 1)[2 * n + 1]) for n in range(4)]
    ok = (
        g1 == G1_FIXTURE
        and g2_even == from_series_even == G2_EVEN_FIXTURE
        and g2_odd == from_series_odd == G2_ODD_FIXTURE
    )
    return ok, f"g_1={g1} g_2^(0,0)={g2_even} g_2^(0,1)={g2_odd}"


def check_formula_against_bruteforce(ladder: _Ladder) -> Outcome:
    corpus = ladder.corpus()
    failures = []
    for lst in corpus:
        formula = count_exactly_one_123(lst, ladder.cache)
        brute = count_exactly_k_bruteforce(lst, PATTERN_123, 1)
        if formula != brute:
            failures.append(f"{lst}: {formula} != {brute}")
    return _mismatches("lists", failures, len(corpus))


def check_reversal_and_321(ladder: _Ladder) -> Outcome:
    corpus = ladder.corpus()
    failures = []
    for lst in corpus:
        count = count_exactly_one_123(lst, ladder.cache)
        reversed_count = count_exactly_one_123(lst.reversed(), ladder.cache)
        count_321 = count_exactly_k_bruteforce(lst.reversed(), PATTERN_321, 1)
        if not count == reversed_count == count_321:
            failures.append(f"{lst}: {count}, {reversed_count}, {count_321}")
    return _mismatches("lists", failures, len(corpus))


def check_132_separation(ladder: _Ladder) -> Outcome:
    top = 6 if ladder.quick else 7
    sizes = range(1, top + 1)
    brute = [
        count_exactly_k_bruteforce(MultiplicityList.uniform(1, n), PATTERN_132, 1) for n in sizes
    ]
    closed = [bona_132_count(n) for n in sizes]
    separated = noonan_count(5) == 27 and bona_132_count(5) == 21
    return brute == closed and separated, f"exactly-one-132 counts {brute}"


def check_bijection_round_trip(ladder: _Ladder) -> Outcome:
    top = 6 if ladder.quick else 8
    failures = []
    checked = 0
    for lst in multiplicity_lists(top, top):
        for w in enumerate_words(lst):
            if count_pattern_occurrences(w, PATTERN_123) != 1:
                continue
            checked += 1
            if recompose(decompose(w)) != w:
                failures.append(str(w))
    return _mismatches("words", failures, checked)


def check_g_system_residuals(ladder: _Ladder) -> Outcome:
    nonzero = []
    for r in (1, 2, 3):
        table = solve_g_system(r, ladder.series_order)
        residuals = g_system_residuals(table)
        nonzero.extend(f"r={r} {key}" for key, res in residuals.items() if not res.is_zero())
    return not nonzero, "; ".join(nonzero) or f"zero to order {ladder.series_order}"


def check_h_consistency(ladder: _Ladder) -> Outcome:
    order = ladder.series_order
    problems = []
    for r, warmup in ((1, warmup_h1), (2, warmup_h2)):
        table = solve_g_system(r, order + 1)
        if h_from_table(table) != warmup(table):
            problems.append(f"r={r} differs from its warm-up form")
    for r in (1, 2, 3):
        h = compute_h(r, order)
        if h[0] != 0 or any(index % r for index in h.support()):
            problems.append(f"r={r} has support off the multiples of r")
    return not problems, "; ".join(problems) or f"consistent to order {order}"


def check_noonan(ladder: _Ladder) -> Outcome:
    f1 = compute_f(1, 41)
    failures = [f"n={n}" for n in range(3, 41) if f1[n] != noonan_count(n)]
    return _mismatches("coefficients", failures, 38)


def check_quartic(ladder: _Ladder) -> Outcome:
    quartic = load_quartic()
    f2 = compute_f(2, 61)
    vanishes = eval_at_series(quartic, f2).is_zero()
    guessed = guess_algebraic(f2, 6, 4)
    recovered = guessed is not None and guessed == quartic.normalized()
    return vanishes and recovered, f"vanishes={vanishes} recovered={recovered}"


def check_recurrence_fixtures(ladder: _Ladder) -> Outcome:
    op1, op2 = load_operator(1), load_operator(2)
    r1 = annihilates(op1, noonan_sequence(31))
    r2 = annihilates(op2, a_r_sequence(2, 41))
    if ladder.quick:
        return r1 and r2, f"r=1 annihilated={r1} r=2 annihilated={r2}"
    seq = a_r_sequence(2, 80)
    guessed = guess_recurrence(seq, 4, 8)
    equivalent = (
        guessed is not None and guessed.order == 4 and operators_equivalent(guessed, op2, seq)
    )
    detail = f"r=1 annihilated={r1} r=2 annihilated={r2} guessed equivalent={equivalent}"
    return r1 and r2 and equivalent, detail


def check_asymptotics(ladder: _Ladder) -> Outcome:
    reports = [ladder.report(r) for r in (2, 3)]
    detail = " ".join(
        f"r={rep.r} mu={rep.estimate.mu:.6f} alpha={rep.estimate.alpha:.4f} C={rep.estimate.C:.5f}"
        for rep in reports
    )
    return all(rep.passed for rep in reports), detail


def check_conjecture(ladder: _Ladder) -> Outcome:
    reports = [ladder.report(r) for r in (1, 2, 3)]
    return all(rep.mu_ok for rep in reports), " ".join(
        f"r={rep.r} target={rep.target_mu} mu_ok={rep.mu_ok}" for rep in reports
    )


@dataclass(frozen=True)
class Rung:
    number: int
    name: str
    check: Callable[[_Ladder], Outcome]
    quick: bool


LADDER: tuple[Rung, ...] = (
    Rung(1, "avoider fixtures", check_avoider_fixtures, True),
    Rung(2, "double sum equals brute force", check_formula_against_bruteforce, True),
    Rung(3, "reversal and 321 symmetry", check_reversal_and_321, True),
    Rung(4, "exactly-one-132 separation", check_132_separation, True),
    Rung(5, "bijection round trip", check_bijection_round_trip, True),
    Rung(6, "g-system residuals", check_g_system_residuals, True),
    Rung(7, "h_r consistency", check_h_consistency, True),
    Rung(8, "f_1 closed form", check_noonan, True),
    Rung(9, "r=2 algebraic equation", check_quartic, False),
    Rung(10, "recurrence fixtures", check_recurrence_fixtures, True),
    Rung(11, "asymptotic constants", check_asymptotics, False),
    Rung(12, "growth rate conjecture", check_conjecture, False),
)


def run_selftest(quick: bool = False) -> CommandResult:
    """
    Run the ladder (only the fast rungs, at reduced sizes, when quick).

    A rung that raises is recorded as failed with the error message.
    """
    ladder = _Ladder(quick=quick)
    rows: list[dict[str, Any]] = []
    for rung in LADDER:
        if quick and not rung.quick:
            continue
        try:
            with LogService.timed("selftest_rung", logger=_logger, rung=rung.number, quick=quick):
                passed, detail = rung.check(ladder)
        except Exception as e:
            _logger.error("Selftest rung raised", rung=rung.number, error=str(e))
            passed, detail = False, f"{type(e).__name__}: {e}"
        rows.append({"number": rung.number, "name": rung.name, "passed": passed, "detail": detail})

    passed_all = all(row["passed"] for row in rows)
    return CommandResult(
        payload={"quick": quick, "checks": rows, "passed": passed_all},
        ok=passed_all,
    )
