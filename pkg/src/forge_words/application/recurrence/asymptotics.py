"""
Asymptotics - Numerical growth estimates a(n) ~ C * mu^n * n^alpha.

Integers are converted with mpmath at high precision (a_2(300) has
hundreds of digits), and each limit is accelerated by Richardson
extrapolation, which removes the 1/n, ..., 1/n^depth error terms.
"""
from __future__ import annotations

from collections.abc import Callable
from math import factorial

import mpmath

from forge_words.domain import NonPositiveTailError, TooShortError
from forge_words.domain.value_objects import AsymptoticEstimate, ConjectureReport, IntegerSequence
from forge_words.infrastructure.logging import LogService

_logger = LogService(__name__)

DEFAULT_DEPTH = 4
DEFAULT_DPS = 60
MU_TOLERANCE = 1e-3
ALPHA_TOLERANCE = 0.05
C_TOLERANCE = 0.02
TARGET_ALPHA = -1.5


def richardson(
    values: Callable[[int], mpmath.mpf], n0: int, depth: int = DEFAULT_DEPTH
) -> mpmath.mpf:
    """
    Extrapolate lim A(n) from A(n0), ..., A(n0 + depth).

    sum_j A(n0+j) (n0+j)^depth (-1)^(j+depth) / (j! (depth-j)!)
    """
    total = mpmath.mpf(0)
    for j in range(depth + 1):
        n = n0 + j
        sign = -1 if (j + depth) % 2 else 1
        total += values(n) * mpmath.mpf(n) ** depth * sign / (factorial(j) * factorial(depth - j))
    return total


def estimate_asymptotics(
    seq: IntegerSequence,
    depth: int = DEFAULT_DEPTH,
    dps: int = DEFAULT_DPS,
    window_end: int | None = None,
) -> AsymptoticEstimate:
    """
    Estimate mu, alpha and C from the tail of seq.

    mu extrapolates a(n+1)/a(n); alpha extrapolates n*(a(n+1)/(mu a(n)) - 1);
    C extrapolates a(n)/(mu^n n^alpha). The last usable index anchors all three.

    Args:
        seq: At least 30 terms, positive on the extrapolation window
        depth: Richardson depth
        dps: Decimal digits (at least 60 are used)
        window_end: Last index to use (default: the last term)

    Raises:
        TooShortError: If seq has fewer than 30 terms
        NonPositiveTailError: If a term in the window is not positive
    """
    minimum = AsymptoticEstimate.MIN_LENGTH
    if len(seq) < minimum:
        raise TooShortError(len(seq), minimum)
    end = len(seq) - 1 if window_end is None else min(window_end, len(seq) - 1)
    start = end - depth - 1
    if start < 1 or end + 1 < minimum:
        raise TooShortError(end + 1, max(minimum, depth + 3))
    for index in range(start, end + 1):
        if seq[index] <= 0:
            raise NonPositiveTailError(index)

    with mpmath.workdps(max(dps, DEFAULT_DPS)), LogService.timed(
        "estimate_asymptotics", logger=_logger, label=seq.label, end=end, depth=depth
    ):
        a = {n: mpmath.mpf(seq[n]) for n in range(start, end + 1)}

        def ratio(n: int) -> mpmath.mpf:
            return a[n + 1] / a[n]

        mu = richardson(ratio, start, depth)

        def exponent(n: int) -> mpmath.mpf:
            return n * (ratio(n) / mu - 1)

        alpha = richardson(exponent, start, depth)

        def constant(n: int) -> mpmath.mpf:
            return a[n] / (mu**n * mpmath.mpf(n) ** alpha)

        c = richardson(constant, end - depth, depth)
        estimate = AsymptoticEstimate(
            mu=float(mu), alpha=float(alpha), C=float(c), n_used=end, depth=depth
        )

    _logger.info("Asymptotics estimated", label=seq.label, **estimate.to_dict())
    return estimate


def _c1() -> mpmath.mpf:
    return 3 / mpmath.sqrt(mpmath.pi)


def _c2() -> mpmath.mpf:
    return 3 * (13 - mpmath.sqrt(21)) / (49 * mpmath.sqrt(mpmath.pi))


def _c3() -> mpmath.mpf:
    return (-7 + 6 * mpmath.sqrt(7)) / (56 * mpmath.sqrt(mpmath.pi))


KNOWN_CONSTANTS: dict[int, Callable[[], mpmath.mpf]] = {1: _c1, 2: _c2, 3: _c3}


def known_constant(r: int) -> float | None:
    """Closed-form C_r where one is known (r = 1, 2, 3)."""
    closed_form = KNOWN_CONSTANTS.get(r)
    return None if closed_form is None else float(closed_form())


def growth_target(r: int) -> int:
    """(r + 1) * 2^r."""
    return (r + 1) * 2**r


def conjecture_check(r: int, est: AsymptoticEstimate) -> ConjectureReport:
    """
    Judge an estimate of a_r against C_r ((r+1) 2^r)^n n^(-3/2).

    Tolerances: relative mu error below 1e-3, |alpha + 3/2| below 0.05,
    and C within 2% where C_r has a known closed form.
    """
    target_mu = growth_target(r)
    target_c = known_constant(r)
    mu_ok = abs(est.mu - target_mu) / target_mu < MU_TOLERANCE
    alpha_ok = abs(est.alpha - TARGET_ALPHA) < ALPHA_TOLERANCE
    c_ok = None if target_c is None else abs(est.C - target_c) / target_c < C_TOLERANCE
    report = ConjectureReport(
        r=r,
        estimate=est,
        target_mu=target_mu,
        target_alpha=TARGET_ALPHA,
        target_C=target_c,
        mu_ok=mu_ok,
        alpha_ok=alpha_ok,
        C_ok=c_ok,
    )
    _logger.info(
        "Conjecture checked",
        r=r,
        passed=report.passed,
        mu_ok=mu_ok,
        alpha_ok=alpha_ok,
        C_ok=c_ok,
    )
    return report
