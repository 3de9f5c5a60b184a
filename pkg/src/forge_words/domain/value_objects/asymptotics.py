"""
Asymptotics Value Objects - Growth estimates and conjecture reports.

Estimates model a(n) ~ C * mu^n * n^alpha.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class AsymptoticEstimate:
    """
    Extrapolated growth of a sequence.

    Attributes:
        mu: Exponential growth rate
        alpha: Polynomial exponent
        C: Leading constant
        n_used: Index of the last term used in the extrapolation window
        depth: Richardson extrapolation depth
    """

    mu: float
    alpha: float
    C: float  # noqa: N815
    n_used: int
    depth: int = 4

    MIN_LENGTH = 30

    def to_dict(self) -> dict[str, Any]:
        return {
            "mu": self.mu,
            "alpha": self.alpha,
            "C": self.C,
            "n_used": self.n_used,
            "depth": self.depth,
        }


@dataclass(frozen=True)
class ConjectureReport:
    """
    Comparison of an estimate with a_r(n) ~ C_r ((r+1) 2^r)^n n^(-3/2).

    Attributes:
        r: Copies of each letter
        estimate: The estimate being judged
        target_mu: (r+1) * 2^r
        target_alpha: -3/2
        target_C: Known closed-form constant, if any
        mu_ok, alpha_ok: Tolerance checks
        C_ok: Constant check (None when no closed form is known)
    """

    r: int
    estimate: AsymptoticEstimate
    target_mu: int
    target_alpha: float
    target_C: float | None  # noqa: N815
    mu_ok: bool
    alpha_ok: bool
    C_ok: bool | None  # noqa: N815

    @property
    def passed(self) -> bool:
        return self.mu_ok and self.alpha_ok and self.C_ok is not False

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "estimate": self.estimate.to_dict(),
            "target_mu": self.target_mu,
            "target_alpha": self.target_alpha,
            "target_C": self.target_C,
            "mu_ok": self.mu_ok,
            "alpha_ok": self.alpha_ok,
            "C_ok": self.C_ok,
            "passed": self.passed,
        }
