"""End-to-end group decision pipeline and parameter sensitivity sweeps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Sequence

from .aggregation import WeightVector, ivqrofywa
from .audit import AuditEvent, AuditTrail
from .core import IVqROFN, RungContext, ValidityError, infer_q
from .critic import (
    DistanceMode,
    interval_weights_standardized,
    realize_weights,
    standardize,
)
from .dm_weights import DMWeightMatrix, dm_weight_matrix
from .matrix import DecisionMatrix, require_same_shape
from .measures import CISParams, ScoreParams
from .waspas import Ranking, WaspasParams, blend, rank, wpm_importance, wsm_importance


@dataclass(frozen=True)
class GroupProblem:
    """k expert matrices of identical shape plus the global parameters.

    ``q`` of None means "use the smallest feasible integer rung"; an
    explicit value must be at least that rung or validation fails.
    """

    experts: tuple[DecisionMatrix, ...]
    q: float | None = None
    p: float = 2.0
    score_params: ScoreParams = ScoreParams()
    waspas_params: WaspasParams = WaspasParams()
    cis_params: CISParams = CISParams()
    distance_mode: DistanceMode = DistanceMode.NIS
    alternative_names: tuple[str, ...] | None = None
    attribute_names: tuple[str, ...] | None = None

    def __post_init__(self):
        shape = require_same_shape(self.experts)
        pol = self.experts[0].polarity
        for t, mtx in enumerate(self.experts[1:], start=2):
            if mtx.polarity != pol:
                raise ValidityError(f"expert {t} disagrees on attribute polarity")
        if self.alternative_names is not None and len(self.alternative_names) != shape[0]:
            raise ValidityError("one alternative name per row is required")
        if self.attribute_names is not None and len(self.attribute_names) != shape[1]:
            raise ValidityError("one attribute name per column is required")

    @property
    def shape(self) -> tuple[int, int, int]:
        m, n = self.experts[0].shape
        return (len(self.experts), m, n)

    def resolve_q(self) -> float:
        inferred = infer_q(self.experts)
        if self.q is None:
            return float(inferred)
        if self.q < inferred:
            raise ValidityError(
                f"q = {self.q} is below the smallest feasible rung {inferred}"
            )
        return float(self.q)

    def context(self) -> RungContext:
        return RungContext(q=self.resolve_q(), p=self.p)


@dataclass(frozen=True)
class RankingResult:
    """Everything `solve` computes, kept for audit and reporting."""

    effective_q: float
    context: RungContext
    dm_weights: DMWeightMatrix
    aggregated: DecisionMatrix
    standardized: DecisionMatrix
    interval_weights: tuple[IVqROFN, ...]
    weights: WeightVector
    wsm: tuple[IVqROFN, ...]
    wpm: tuple[IVqROFN, ...]
    blended: tuple[IVqROFN, ...]
    scores: tuple[float, ...]
    order: tuple[int, ...]
    audit: tuple[AuditEvent, ...] = ()

    def ranking_line(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"y{i + 1}" for i in range(len(self.scores))]
        return " > ".join(names[i] for i in self.order)


@dataclass(frozen=True)
class SweepPoint:
    params: tuple[tuple[str, Any], ...]
    scores: tuple[float, ...]
    order: tuple[int, ...]

    def param_dict(self) -> dict[str, Any]:
        return dict(self.params)


@dataclass(frozen=True)
class SensitivityReport:
    axes: tuple[tuple[str, tuple[Any, ...]], ...]
    points: tuple[SweepPoint, ...]
    stable: bool
    first_divergence: tuple[tuple[str, Any], ...] | None = None


def aggregate_experts(
    problem: GroupProblem, lam: DMWeightMatrix, ctx: RungContext
) -> DecisionMatrix:
    """Pool the expert matrices cell by cell with the per-alternative expert
    weights (row i of the weight matrix applies to every attribute of
    alternative i)."""
    k, m, n = problem.shape
    if lam.shape != (m, k):
        raise ValidityError(
            f"weight matrix shape {lam.shape} does not match {m} alternatives"
            f" x {k} experts"
        )
    cells = tuple(
        tuple(
            ivqrofywa(
                [problem.experts[t].cells[i][j] for t in range(k)],
                lam.row(i),
                ctx,
            )
            for j in range(n)
        )
        for i in range(m)
    )
    return DecisionMatrix(cells, problem.experts[0].polarity)


def solve(problem: GroupProblem) -> RankingResult:
    """Run the full nine-step group decision chain.

    Steps: resolve the rung, validate inputs, derive per-alternative expert
    weights, aggregate expert matrices, standardize once, derive interval
    attribute weights, realize real weights through the configured ideal
    distance, compute weighted-sum and weighted-product importance, blend,
    score, and rank.
    """
    audit = AuditTrail()
    ctx = problem.context()
    for t, mtx in enumerate(problem.experts, start=1):
        mtx.validate(ctx, where=f"expert {t}")
    lam = dm_weight_matrix(problem.experts, ctx, audit=audit)
    aggregated = aggregate_experts(problem, lam, ctx)
    standardized = standardize(
        aggregated, ctx, score_params=problem.score_params, audit=audit
    )
    w_int = interval_weights_standardized(standardized, ctx, audit=audit)
    weights = realize_weights(
        w_int,
        problem.distance_mode,
        ctx,
        cis_params=problem.cis_params,
        audit=audit,
    )
    wsm = wsm_importance(standardized, weights, ctx)
    wpm = wpm_importance(standardized, weights, ctx)
    blended = tuple(
        blend(q1, q2, problem.waspas_params, ctx) for q1, q2 in zip(wsm, wpm)
    )
    ranking: Ranking = rank(blended, problem.score_params, ctx)
    return RankingResult(
        effective_q=ctx.q,
        context=ctx,
        dm_weights=lam,
        aggregated=aggregated,
        standardized=standardized,
        interval_weights=w_int,
        weights=weights,
        wsm=wsm,
        wpm=wpm,
        blended=blended,
        scores=ranking.scores,
        order=ranking.order,
        audit=tuple(audit.events),
    )


_AXIS_NAMES = ("q", "p", "alpha", "lam", "theta", "mode")


def _with_point(problem: GroupProblem, point: Mapping[str, Any]) -> GroupProblem:
    updates: dict[str, Any] = {}
    if "q" in point:
        updates["q"] = float(point["q"])
    if "p" in point:
        updates["p"] = float(point["p"])
    if "alpha" in point:
        a = float(point["alpha"])
        updates["score_params"] = ScoreParams(alpha=a, beta=1.0 - a)
    if "lam" in point:
        updates["waspas_params"] = WaspasParams(lam=float(point["lam"]))
    if "theta" in point:
        updates["cis_params"] = CISParams(theta=float(point["theta"]))
    if "mode" in point:
        mode = point["mode"]
        updates["distance_mode"] = (
            mode if isinstance(mode, DistanceMode) else DistanceMode.parse(mode)
        )
    return replace(problem, **updates)


def sweep(problem: GroupProblem, axes: Mapping[str, Sequence[Any]]) -> SensitivityReport:
    """Re-solve the problem on the cartesian grid of the given axes.

    Axis names: q, p, alpha, lam, theta, mode.  The report records scores
    and ranking per grid point plus whether the ranking ever changes.
    """
    for name in axes:
        if name not in _AXIS_NAMES:
            raise ValueError(
                f"unknown sweep axis {name!r}; expected one of {_AXIS_NAMES}"
            )
    names = [n for n in _AXIS_NAMES if n in axes]
    value_lists = [tuple(axes[n]) for n in names]
    if not names:
        names, value_lists = [], [()]
        grid = [()]
    else:
        grid = list(itertools.product(*value_lists))
    points: list[SweepPoint] = []
    baseline: tuple[int, ...] | None = None
    first_divergence = None
    stable = True
    for combo in grid:
        point = dict(zip(names, combo))
        result = solve(_with_point(problem, point))
        sp = SweepPoint(
            params=tuple(point.items()), scores=result.scores, order=result.order
        )
        points.append(sp)
        if baseline is None:
            baseline = result.order
        elif result.order != baseline:
            stable = False
            if first_divergence is None:
                first_divergence = sp.params
    return SensitivityReport(
        axes=tuple((n, tuple(axes[n])) for n in names),
        points=tuple(points),
        stable=stable,
        first_divergence=first_divergence,
    )
