"""Earlier interval-valued score functions, kept for diagnostics only.

These are reference implementations used by the comparison tests; the
ranking pipeline never calls them.  Each fails to separate certain pairs
that the main score function distinguishes.
"""

from __future__ import annotations

from .core import IVqROFN, FuzzyDomainError


def score_cheng(a: IVqROFN) -> float:
    return 0.5 * (a.mu_lo - a.nu_lo + a.mu_hi - a.nu_hi) + 1.0


def score_bai(a: IVqROFN) -> float:
    return 0.5 * (
        a.mu_lo
        + a.mu_hi
        + a.mu_lo * (1.0 - a.mu_lo - a.nu_lo)
        + a.mu_hi * (1.0 - a.mu_hi - a.nu_hi)
    )


def score_gongma(a: IVqROFN) -> float:
    den = a.nu_hi + a.nu_lo + a.mu_hi + a.mu_lo
    if den == 0.0:
        raise FuzzyDomainError("all four components are zero")
    return 0.5 * (a.nu_hi + a.nu_lo - a.mu_hi - a.mu_lo) + (
        a.mu_hi + a.mu_lo + 2.0 * (a.mu_hi * a.mu_lo - a.nu_hi * a.nu_lo)
    ) / den
