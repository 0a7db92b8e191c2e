"""Objective attribute weighting from contrast and inter-attribute
correlation, carried out inside the fuzzy algebra.

Stages: standardize the matrix, take fuzzy column means, fold squared
deviations into per-column (and per-pair) accumulators, read dispersion and
correlation out of those accumulators, combine them into one index per
attribute, normalize to interval-valued weights, and finally realize real
weights through an ideal-point distance.

Deviations of a cell from its column mean concentrate their information in
the non-membership channel (subtracting two nearby numbers yields a small
membership product and a large non-membership combination), so dispersion
and correlation are read from that channel; the membership channel of the
accumulator acts as a noise floor and is carried along explicitly.  The
dispersion's membership interval is reported upper-bound-first and may
therefore be unordered; downstream operations are componentwise and
consume it as raw channel data, and the pipeline flags it in the audit
trail.
"""

from __future__ import annotations

import enum
import math
from typing import Sequence

from .aggregation import WeightVector, ivqrofywa
from .audit import AuditTrail
from .core import (
    IVqROFN,
    POSITIVE_IDEAL,
    RungContext,
    ShapeError,
    add,
    clamp01,
    div,
    mul,
    scale,
    sub,
)
from .matrix import DecisionMatrix, Polarity
from .measures import CISParams, ScoreParams, cis, nis, pis, score


class DistanceMode(enum.Enum):
    """Which ideal-point distance turns interval weights into real ones."""

    NIS = "nis"
    PIS = "pis"
    CIS = "cis"

    @classmethod
    def parse(cls, text: str) -> "DistanceMode":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(
                f"distance mode must be one of nis/pis/cis, got {text!r}"
            ) from None


def standardize(
    a: DecisionMatrix,
    ctx: RungContext,
    score_params: ScoreParams = ScoreParams(),
    audit: AuditTrail | None = None,
) -> DecisionMatrix:
    """Column-wise min-max standardization in the fuzzy algebra.

    Per column the score-maximal and score-minimal cells anchor the range
    (ties resolved to the lowest row index); benefit columns map a cell to
    (a - min) / (max - min), cost columns to (max - a) / (max - min).
    Columns whose extremes tie in score pass through unchanged and are
    flagged.
    """
    m, n = a.shape
    if m < 2:
        raise ShapeError("standardization needs at least two alternatives")
    columns = []
    for j in range(n):
        col = a.column(j)
        scores = [score(c, score_params, ctx) for c in col]
        i_max = max(range(m), key=lambda i: scores[i])
        i_min = min(range(m), key=lambda i: scores[i])
        if scores[i_max] == scores[i_min]:
            if audit is not None:
                audit.flag(
                    "degenerate-column",
                    f"attribute {j + 1}",
                    "score range is empty; column passed through unchanged",
                )
            columns.append(col)
            continue
        spread = sub(col[i_max], col[i_min], ctx)
        if a.polarity[j] is Polarity.BENEFIT:
            columns.append(
                tuple(div(sub(c, col[i_min], ctx), spread, ctx) for c in col)
            )
        else:
            columns.append(
                tuple(div(sub(col[i_max], c, ctx), spread, ctx) for c in col)
            )
    cells = tuple(tuple(columns[j][i] for j in range(n)) for i in range(m))
    return DecisionMatrix(cells, tuple(Polarity.BENEFIT for _ in range(n)))


def column_mean(x: DecisionMatrix, j: int, ctx: RungContext) -> IVqROFN:
    """Equal-weight Yager average of column j."""
    col = x.column(j)
    return ivqrofywa(col, [1.0 / len(col)] * len(col), ctx)


def _deviation_columns(x: DecisionMatrix, ctx: RungContext) -> list[list[IVqROFN]]:
    m, n = x.shape
    means = [column_mean(x, j, ctx) for j in range(n)]
    return [[sub(x.cells[i][j], means[j], ctx) for i in range(m)] for j in range(n)]


def _fold_products(
    left: Sequence[IVqROFN], right: Sequence[IVqROFN], ctx: RungContext
) -> IVqROFN:
    """Accumulate pairwise products of two deviation columns."""
    acc = None
    for dj, dk in zip(left, right):
        term = mul(dj, dk, ctx)
        acc = term if acc is None else add(acc, term, ctx)
    return acc


def _root_mean_mass(t: float, ctx: RungContext) -> float:
    # square root, in the algebra's coordinates, of a non-membership mass
    return clamp01(1.0 - (1.0 - t ** ctx.q) ** 0.5) ** (1.0 / ctx.q)


def _dispersion(codev: IVqROFN, m: int, ctx: RungContext) -> IVqROFN:
    mean = scale(1.0 / m, codev, ctx)
    return IVqROFN(
        _root_mean_mass(mean.nu_hi, ctx),
        _root_mean_mass(mean.nu_lo, ctx),
        math.sqrt(codev.mu_lo),
        math.sqrt(codev.mu_hi),
    )


def _pair_correlation(codev: IVqROFN, m: int, ctx: RungContext) -> IVqROFN:
    mean = scale(1.0 / m, codev, ctx)
    s = _root_mean_mass(mean.nu_hi, ctx)
    return IVqROFN(s, s, codev.mu_lo, codev.mu_hi)


def column_stddev(x: DecisionMatrix, j: int, ctx: RungContext) -> IVqROFN:
    """Dispersion of column j around its fuzzy mean.

    Membership: root-mean non-membership mass of the accumulated squared
    deviations, upper bound first (the pair may be unordered).
    Non-membership: componentwise square root of the accumulator's
    membership noise floor.
    """
    dev = _deviation_columns(x, ctx)
    codev = _fold_products(dev[j], dev[j], ctx)
    return _dispersion(codev, x.shape[0], ctx)


def correlation(x: DecisionMatrix, j: int, k: int, ctx: RungContext) -> IVqROFN:
    """Association of columns j and k via their co-deviation accumulator.

    Membership: the degenerate interval [s, s], s being the root-mean upper
    non-membership mass of the accumulator, so correlation(j, k) equals
    correlation(k, j) exactly.  Non-membership: the accumulator's
    membership noise floor.
    """
    dev = _deviation_columns(x, ctx)
    codev = _fold_products(dev[j], dev[k], ctx)
    return _pair_correlation(codev, x.shape[0], ctx)


def attribute_index(
    sigma_j: IVqROFN, rhos_j: Sequence[IVqROFN], ctx: RungContext
) -> IVqROFN:
    """Contrast-times-independence index: dispersion multiplied by the
    folded complements of the correlations with every attribute."""
    acc = None
    for rho in rhos_j:
        term = sub(POSITIVE_IDEAL, rho, ctx)
        acc = term if acc is None else add(acc, term, ctx)
    if acc is None:
        raise ShapeError("attribute index needs at least one correlation")
    return mul(sigma_j, acc, ctx)


def interval_weights_standardized(
    x: DecisionMatrix, ctx: RungContext, audit: AuditTrail | None = None
) -> tuple[IVqROFN, ...]:
    """Interval-valued attribute weights from an already-standardized
    matrix; the index of each attribute is normalized through
    self-division, which maps it onto the weight scale used by the
    realization step."""
    m, n = x.shape
    dev = _deviation_columns(x, ctx)
    codev = [[_fold_products(dev[j], dev[k], ctx) for k in range(n)] for j in range(n)]
    weights = []
    for j in range(n):
        sigma = _dispersion(codev[j][j], m, ctx)
        if audit is not None and not sigma.interval_ordered:
            audit.flag(
                "unordered-interval",
                f"dispersion of attribute {j + 1}",
                f"membership bounds {sigma.mu_lo:.4f} > {sigma.mu_hi:.4f} "
                "(upper-first channel layout)",
            )
        rhos = [_pair_correlation(codev[j][k], m, ctx) for k in range(n)]
        index = attribute_index(sigma, rhos, ctx)
        weights.append(div(index, index, ctx))
    return tuple(weights)


def interval_weights(
    a: DecisionMatrix,
    ctx: RungContext,
    score_params: ScoreParams = ScoreParams(),
    audit: AuditTrail | None = None,
) -> tuple[IVqROFN, ...]:
    """Full weighting pipeline from a raw decision matrix."""
    x = standardize(a, ctx, score_params=score_params, audit=audit)
    return interval_weights_standardized(x, ctx, audit=audit)


def realize_weights(
    w: Sequence[IVqROFN],
    mode: DistanceMode,
    ctx: RungContext,
    cis_params: CISParams = CISParams(),
    audit: AuditTrail | None = None,
) -> WeightVector:
    """Collapse interval weights to real ones through an ideal distance.

    NIS keeps the negative-ideal distance itself; PIS and CIS keep the
    complement of their distance, so that in every mode a larger value
    means a more important attribute.
    """
    if isinstance(mode, str):
        mode = DistanceMode.parse(mode)
    if mode is DistanceMode.NIS:
        raw = [nis(wj, ctx) for wj in w]
    elif mode is DistanceMode.PIS:
        raw = [1.0 - pis(wj, ctx) for wj in w]
    else:
        raw = [1.0 - cis(wj, cis_params, ctx) for wj in w]
    total = math.fsum(raw)
    if total <= 0.0:
        if audit is not None:
            audit.flag(
                "uniform-fallback",
                "attribute weights",
                "all realized distances are zero; using equal weights",
            )
        return WeightVector([1.0 / len(w)] * len(w))
    return WeightVector([r / total for r in raw])
