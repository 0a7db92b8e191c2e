"""scikit-learn style facade over the group decision pipeline.

The estimator consumes a stacked array of expert matrices with shape
(n_experts, n_alternatives, n_attributes, 4), the last axis being
[mu_lo, mu_hi, nu_lo, nu_hi].  ``fit`` runs the full chain and exposes the
learned weights, scores, and ranking as fitted attributes; ``transform``
maps a problem array to its per-alternative score vector, so the class
composes with sklearn tooling (get_params/set_params, clone, pipelines).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .critic import DistanceMode
from .matrix import DecisionMatrix, Polarity
from .measures import CISParams, ScoreParams
from .pipeline import GroupProblem, solve
from .waspas import WaspasParams


def check_problem_array(X) -> np.ndarray:
    """Validate and coerce a problem array to float64 of shape (k, m, n, 4)."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 4 or arr.shape[-1] != 4:
        raise ValueError(
            f"expected an array of shape (experts, alternatives, attributes, 4), "
            f"got {arr.shape}"
        )
    if arr.shape[0] < 1 or arr.shape[1] < 2 or arr.shape[2] < 1:
        raise ValueError(
            "need at least 1 expert, 2 alternatives, and 1 attribute"
        )
    if not np.isfinite(arr).all():
        raise ValueError("problem array contains non-finite values")
    return arr


class CriticWaspasRanker(TransformerMixin, BaseEstimator):
    """Rank alternatives judged by several experts on fuzzy-interval scales.

    Parameters mirror the pipeline: ``q`` (None infers the smallest
    feasible rung), Yager power ``p``, score weight ``alpha``, blend weight
    ``lam``, compromise weight ``theta``, ``distance_mode`` in
    {"nis", "pis", "cis"}, and ``cost_attributes`` naming the 0-based
    columns to standardize as costs.
    """

    def __init__(
        self,
        q=None,
        p=2.0,
        alpha=0.5,
        lam=0.5,
        theta=0.5,
        distance_mode="nis",
        cost_attributes=(),
    ):
        self.q = q
        self.p = p
        self.alpha = alpha
        self.lam = lam
        self.theta = theta
        self.distance_mode = distance_mode
        self.cost_attributes = cost_attributes

    def _build_problem(self, X) -> GroupProblem:
        arr = check_problem_array(X)
        n = arr.shape[2]
        cost = set(int(j) for j in self.cost_attributes)
        if cost and (min(cost) < 0 or max(cost) >= n):
            raise ValueError(f"cost_attributes out of range for {n} attributes")
        polarity = tuple(
            Polarity.COST if j in cost else Polarity.BENEFIT for j in range(n)
        )
        experts = tuple(
            DecisionMatrix.from_rows(expert, polarity) for expert in arr
        )
        return GroupProblem(
            experts=experts,
            q=self.q,
            p=self.p,
            score_params=ScoreParams(alpha=self.alpha, beta=1.0 - self.alpha),
            waspas_params=WaspasParams(lam=self.lam),
            cis_params=CISParams(theta=self.theta),
            distance_mode=DistanceMode.parse(self.distance_mode),
        )

    def fit(self, X, y=None):
        result = solve(self._build_problem(X))
        self.result_ = result
        self.effective_q_ = result.effective_q
        self.dm_weights_ = np.array(result.dm_weights.weights)
        self.attribute_weights_ = np.array(result.weights)
        self.scores_ = np.array(result.scores)
        self.ranking_ = np.array(result.order)
        return self

    def transform(self, X) -> np.ndarray:
        """Score the alternatives of each problem in ``X`` (a single problem
        array is also accepted); returns the per-alternative score vector."""
        return np.array(solve(self._build_problem(X)).scores)
