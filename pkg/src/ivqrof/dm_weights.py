"""Per-alternative decision-maker weights from similarity to the ideals.

Each expert gets one weight per alternative, not a single global weight:
an expert may judge some alternatives more decisively than others, and the
weight matrix preserves that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .audit import AuditTrail
from .core import RungContext
from .matrix import DecisionMatrix, require_same_shape
from .measures import nis, pis


@dataclass(frozen=True)
class SimilarityMatrix:
    """Per-cell closeness to the positive ideal, in [0, 1]."""

    sim: tuple[tuple[float, ...], ...]

    def row_sums(self) -> tuple[float, ...]:
        return tuple(math.fsum(row) for row in self.sim)


@dataclass(frozen=True)
class DMWeightMatrix:
    """m x k matrix; row i holds the experts' weights for alternative i and
    sums to 1."""

    weights: tuple[tuple[float, ...], ...]

    def row(self, i: int) -> tuple[float, ...]:
        return self.weights[i]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.weights), len(self.weights[0]))


def similarity_matrix(a: DecisionMatrix, ctx: RungContext) -> SimilarityMatrix:
    """Cell similarity = d- / (d- + d+), the share of a cell's ideal-point
    distance budget that sits on the negative side.

    For any well-formed number the two distances sum to one, so the ratio
    never degenerates; the guard below keeps malformed inputs from
    crashing and pins them to the neutral 0.5.
    """
    rows = []
    for row in a.cells:
        out = []
        for cell in row:
            d_neg = nis(cell, ctx)
            d_pos = pis(cell, ctx)
            total = d_neg + d_pos
            out.append(d_neg / total if total > 0.0 else 0.5)
        rows.append(tuple(out))
    return SimilarityMatrix(tuple(rows))


def dm_weight_matrix(
    matrices: Sequence[DecisionMatrix],
    ctx: RungContext,
    sim_decimals: int | None = None,
    audit: AuditTrail | None = None,
) -> DMWeightMatrix:
    """Normalize per-alternative similarity sums across experts.

    ``sim_decimals`` rounds each cell similarity before summing; the
    reference tables for the bundled case were produced from two-decimal
    similarities, so their regression tests pass 2 here.  Leave it None for
    full-precision weights.
    """
    m, _ = require_same_shape(matrices)
    sims = [similarity_matrix(a, ctx) for a in matrices]
    if sim_decimals is not None:
        sims = [
            SimilarityMatrix(
                tuple(
                    tuple(round(s, sim_decimals) for s in row) for row in sm.sim
                )
            )
            for sm in sims
        ]
    per_expert_sums = [sm.row_sums() for sm in sims]
    rows = []
    for i in range(m):
        row = [per_expert_sums[t][i] for t in range(len(matrices))]
        total = math.fsum(row)
        if total <= 0.0:
            if audit is not None:
                audit.flag(
                    "uniform-fallback",
                    f"alternative {i + 1}",
                    "all expert similarities are zero; using equal weights",
                )
            rows.append(tuple(1.0 / len(matrices) for _ in row))
        else:
            rows.append(tuple(x / total for x in row))
    return DMWeightMatrix(tuple(rows))
