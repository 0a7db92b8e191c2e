"""Yager t-norm / t-conorm arithmetic on IVq-ROFNs.

All four operations share one template: the active channel combines the
p-th powers of the q-th powers and saturates at 1 before the roots are
taken, exactly where the min{1, .} appears in the closed forms.  No
re-normalization happens after saturation.
"""

from __future__ import annotations

from .core import IVqROFN, RungContext, FuzzyDomainError, clamp01


def _conorm(x: float, y: float, p: float) -> float:
    # min{1, (x^p + y^p)^(1/p)} for x, y already raised to the q-th power
    return min(1.0, (x ** p + y ** p) ** (1.0 / p))


def yager_add(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> IVqROFN:
    q, p = ctx.q, ctx.p
    return IVqROFN(
        _conorm(a.mu_lo ** q, b.mu_lo ** q, p) ** (1.0 / q),
        _conorm(a.mu_hi ** q, b.mu_hi ** q, p) ** (1.0 / q),
        clamp01(1.0 - _conorm(1.0 - a.nu_lo ** q, 1.0 - b.nu_lo ** q, p)) ** (1.0 / q),
        clamp01(1.0 - _conorm(1.0 - a.nu_hi ** q, 1.0 - b.nu_hi ** q, p)) ** (1.0 / q),
    )


def yager_mul(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> IVqROFN:
    q, p = ctx.q, ctx.p
    return IVqROFN(
        clamp01(1.0 - _conorm(1.0 - a.mu_lo ** q, 1.0 - b.mu_lo ** q, p)) ** (1.0 / q),
        clamp01(1.0 - _conorm(1.0 - a.mu_hi ** q, 1.0 - b.mu_hi ** q, p)) ** (1.0 / q),
        _conorm(a.nu_lo ** q, b.nu_lo ** q, p) ** (1.0 / q),
        _conorm(a.nu_hi ** q, b.nu_hi ** q, p) ** (1.0 / q),
    )


def yager_scale(delta: float, a: IVqROFN, ctx: RungContext) -> IVqROFN:
    if delta <= 0.0:
        raise FuzzyDomainError(f"scale factor must be > 0, got {delta}")
    q, p = ctx.q, ctx.p
    return IVqROFN(
        min(1.0, (delta * a.mu_lo ** (q * p)) ** (1.0 / p)) ** (1.0 / q),
        min(1.0, (delta * a.mu_hi ** (q * p)) ** (1.0 / p)) ** (1.0 / q),
        clamp01(1.0 - min(1.0, (delta * (1.0 - a.nu_lo ** q) ** p) ** (1.0 / p))) ** (1.0 / q),
        clamp01(1.0 - min(1.0, (delta * (1.0 - a.nu_hi ** q) ** p) ** (1.0 / p))) ** (1.0 / q),
    )


def yager_power(a: IVqROFN, delta: float, ctx: RungContext) -> IVqROFN:
    if delta <= 0.0:
        raise FuzzyDomainError(f"exponent must be > 0, got {delta}")
    q, p = ctx.q, ctx.p
    return IVqROFN(
        clamp01(1.0 - min(1.0, (delta * (1.0 - a.mu_lo ** q) ** p) ** (1.0 / p))) ** (1.0 / q),
        clamp01(1.0 - min(1.0, (delta * (1.0 - a.mu_hi ** q) ** p) ** (1.0 / p))) ** (1.0 / q),
        min(1.0, (delta * a.nu_lo ** (q * p)) ** (1.0 / p)) ** (1.0 / q),
        min(1.0, (delta * a.nu_hi ** (q * p)) ** (1.0 / p)) ** (1.0 / q),
    )
