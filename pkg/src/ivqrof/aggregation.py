"""Weighted Yager aggregation of IVq-ROFN sequences.

The closed forms are weighted sums in a transformed coordinate; since the
weights sum to 1 the saturation guard can never trigger here, and the
result is permutation-exact because the inner sums use exact float
summation (math.fsum).
"""

from __future__ import annotations

import math
from typing import Sequence

from .core import IVqROFN, RungContext, FuzzyDomainError, ShapeError, clamp01


class WeightVector(tuple):
    """Nonnegative weights summing to 1 (within 1e-9); used as given, never
    re-normalized, so inconsistent inputs surface instead of hiding."""

    def __new__(cls, weights: Sequence[float]):
        ws = tuple(float(w) for w in weights)
        if not ws:
            raise ShapeError("weight vector must not be empty")
        for w in ws:
            if not (0.0 <= w <= 1.0):
                raise FuzzyDomainError(f"weight {w} outside [0, 1]")
        total = math.fsum(ws)
        if abs(total - 1.0) > 1e-9:
            raise FuzzyDomainError(f"weights sum to {total!r}, expected 1")
        return super().__new__(cls, ws)


def _as_weights(w: Sequence[float]) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(w)


def _check_lengths(items: Sequence[IVqROFN], w: Sequence[float]) -> None:
    if len(items) == 0:
        raise ShapeError("cannot aggregate an empty sequence")
    if len(items) != len(w):
        raise ShapeError(f"{len(items)} items but {len(w)} weights")


def ivqrofywa(items: Sequence[IVqROFN], w: Sequence[float], ctx: RungContext) -> IVqROFN:
    """Yager weighted average: memberships pool through the (q*p)-th powers,
    non-memberships through the p-th powers of their complements."""
    w = _as_weights(w)
    _check_lengths(items, w)
    q, p = ctx.q, ctx.p
    s_ul = math.fsum(wi * a.mu_lo ** (q * p) for wi, a in zip(w, items))
    s_uh = math.fsum(wi * a.mu_hi ** (q * p) for wi, a in zip(w, items))
    s_vl = math.fsum(wi * (1.0 - a.nu_lo ** q) ** p for wi, a in zip(w, items))
    s_vh = math.fsum(wi * (1.0 - a.nu_hi ** q) ** p for wi, a in zip(w, items))
    return IVqROFN(
        min(1.0, s_ul ** (1.0 / p)) ** (1.0 / q),
        min(1.0, s_uh ** (1.0 / p)) ** (1.0 / q),
        clamp01(1.0 - min(1.0, s_vl ** (1.0 / p))) ** (1.0 / q),
        clamp01(1.0 - min(1.0, s_vh ** (1.0 / p))) ** (1.0 / q),
    )


def ivqrofywg(items: Sequence[IVqROFN], w: Sequence[float], ctx: RungContext) -> IVqROFN:
    """Yager weighted geometric mean, the membership/non-membership mirror
    image of :func:`ivqrofywa`."""
    w = _as_weights(w)
    _check_lengths(items, w)
    q, p = ctx.q, ctx.p
    s_ul = math.fsum(wi * (1.0 - a.mu_lo ** q) ** p for wi, a in zip(w, items))
    s_uh = math.fsum(wi * (1.0 - a.mu_hi ** q) ** p for wi, a in zip(w, items))
    s_vl = math.fsum(wi * a.nu_lo ** (q * p) for wi, a in zip(w, items))
    s_vh = math.fsum(wi * a.nu_hi ** (q * p) for wi, a in zip(w, items))
    return IVqROFN(
        clamp01(1.0 - min(1.0, s_ul ** (1.0 / p))) ** (1.0 / q),
        clamp01(1.0 - min(1.0, s_uh ** (1.0 / p))) ** (1.0 / q),
        min(1.0, s_vl ** (1.0 / p)) ** (1.0 / q),
        min(1.0, s_vh ** (1.0 / p)) ** (1.0 / q),
    )
