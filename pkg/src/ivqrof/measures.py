"""Distances to ideal points, the score function, and the induced order."""

from __future__ import annotations

from dataclasses import dataclass

from .core import IVqROFN, RungContext, FuzzyDomainError


@dataclass(frozen=True)
class ScoreParams:
    """Weights of the lower and upper interval bounds in the score; they
    must be positive and sum to 1."""

    alpha: float = 0.5
    beta: float = 0.5

    def __post_init__(self):
        if self.alpha <= 0.0 or self.beta <= 0.0:
            raise FuzzyDomainError("alpha and beta must be > 0")
        if abs(self.alpha + self.beta - 1.0) > 1e-12:
            raise FuzzyDomainError(
                f"alpha + beta must equal 1, got {self.alpha + self.beta}"
            )


@dataclass(frozen=True)
class CISParams:
    """Mixing weight between the positive- and negative-ideal distances."""

    theta: float = 0.5

    def __post_init__(self):
        if not (0.0 <= self.theta <= 1.0):
            raise FuzzyDomainError(f"theta must lie in [0, 1], got {self.theta}")


def distance(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> float:
    """Separation of two numbers through the signed q-th-power differences
    of membership against non-membership, one absolute term per bound."""
    q = ctx.q
    return 0.25 * (
        abs(a.mu_lo ** q - b.mu_lo ** q - (a.nu_lo ** q - b.nu_lo ** q))
        + abs(a.mu_hi ** q - b.mu_hi ** q - (a.nu_hi ** q - b.nu_hi ** q))
    )


def nis(a: IVqROFN, ctx: RungContext) -> float:
    """Distance from the negative ideal <[0,0],[1,1]>."""
    q = ctx.q
    return 0.25 * (
        abs(a.mu_lo ** q - (a.nu_lo ** q - 1.0))
        + abs(a.mu_hi ** q - (a.nu_hi ** q - 1.0))
    )


def pis(a: IVqROFN, ctx: RungContext) -> float:
    """Distance from the positive ideal <[1,1],[0,0]>."""
    q = ctx.q
    return 0.25 * (
        abs(a.mu_lo ** q - 1.0 - a.nu_lo ** q)
        + abs(a.mu_hi ** q - 1.0 - a.nu_hi ** q)
    )


def cis(a: IVqROFN, params: CISParams, ctx: RungContext) -> float:
    """Compromise distance: theta-blend of the two ideal distances."""
    return params.theta * pis(a, ctx) + (1.0 - params.theta) * nis(a, ctx)


def _score_raw(a: IVqROFN, alpha: float, beta: float, q: float) -> float:
    return 0.5 * (
        alpha * (a.mu_lo ** (1.0 / q) + (1.0 - a.nu_lo) ** (1.0 / q))
        + beta * (a.mu_hi ** (1.0 / q) + (1.0 - a.nu_hi) ** (1.0 / q))
    )


def score(a: IVqROFN, params: ScoreParams, ctx: RungContext) -> float:
    """Scalar score in [0, 1]; strictly increasing in the membership bounds
    and decreasing in the non-membership bounds.  Requires q > 1."""
    if ctx.q <= 1.0:
        raise FuzzyDomainError(f"the score function requires q > 1, got {ctx.q}")
    return _score_raw(a, params.alpha, params.beta, ctx.q)


def compare(a: IVqROFN, b: IVqROFN, params: ScoreParams, ctx: RungContext) -> int:
    """-1, 0 or +1 as ``a`` scores below, equal to, or above ``b``.

    Exact score ties report 0; callers that need a total order break ties
    by original position.
    """
    sa, sb = score(a, params, ctx), score(b, params, ctx)
    if sa > sb:
        return 1
    if sa < sb:
        return -1
    return 0
