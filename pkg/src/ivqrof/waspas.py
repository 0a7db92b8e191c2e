"""Ranking by the blend of weighted-sum and weighted-product importance."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .aggregation import ivqrofywa, ivqrofywg
from .core import IVqROFN, RungContext, FuzzyDomainError, add, scale
from .matrix import DecisionMatrix
from .measures import ScoreParams, score


@dataclass(frozen=True)
class WaspasParams:
    """Blend weight between the weighted-sum (1.0) and weighted-product
    (0.0) importance values."""

    lam: float = 0.5

    def __post_init__(self):
        if not (0.0 <= self.lam <= 1.0):
            raise FuzzyDomainError(f"lambda must lie in [0, 1], got {self.lam}")


class Ranking(NamedTuple):
    """Descending order of alternatives (0-based indices) and their scores
    in the original alternative order."""

    order: tuple[int, ...]
    scores: tuple[float, ...]


def wsm_importance(
    x: DecisionMatrix, w: Sequence[float], ctx: RungContext
) -> tuple[IVqROFN, ...]:
    """Weighted-sum importance: the Yager average of each row."""
    return tuple(ivqrofywa(row, w, ctx) for row in x.cells)


def wpm_importance(
    x: DecisionMatrix, w: Sequence[float], ctx: RungContext
) -> tuple[IVqROFN, ...]:
    """Weighted-product importance: the Yager geometric mean of each row."""
    return tuple(ivqrofywg(row, w, ctx) for row in x.cells)


def blend(q1: IVqROFN, q2: IVqROFN, params: WaspasParams, ctx: RungContext) -> IVqROFN:
    """Convex blend lam*q1 + (1-lam)*q2 in the plain algebra; the endpoints
    return the operand itself rather than taking a degenerate scale."""
    if params.lam >= 1.0:
        return q1
    if params.lam <= 0.0:
        return q2
    return add(scale(params.lam, q1, ctx), scale(1.0 - params.lam, q2, ctx), ctx)


def rank(
    importance: Sequence[IVqROFN], score_params: ScoreParams, ctx: RungContext
) -> Ranking:
    """Total order by descending score; exact ties keep the earlier
    alternative first."""
    scores = tuple(score(r, score_params, ctx) for r in importance)
    order = tuple(sorted(range(len(scores)), key=lambda i: (-scores[i], i)))
    return Ranking(order=order, scores=scores)
