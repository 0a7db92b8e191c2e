"""Problem files in, result files out.

A problem file is JSON with a version tag, global parameters, named
attributes with polarity, alternative names, and one matrix of
[mu_lo, mu_hi, nu_lo, nu_hi] rows per expert.  Parsing errors carry the
expert/row/column coordinates of the offending value.
"""

from __future__ import annotations

import importlib.resources
import json
from typing import Any

from .core import IVqROFN, RungContext, ValidityError, infer_q, validate_number
from .critic import DistanceMode
from .matrix import DecisionMatrix, Polarity
from .measures import CISParams, ScoreParams
from .pipeline import GroupProblem, RankingResult, SensitivityReport
from .waspas import WaspasParams

FORMAT_VERSION = 1


class ProblemFormatError(ValueError):
    """The document cannot be parsed into a valid group problem."""


def _fail(msg: str) -> "ProblemFormatError":
    return ProblemFormatError(msg)


def _require(mapping: Any, key: str, kind, where: str):
    if not isinstance(mapping, dict) or key not in mapping:
        raise _fail(f"{where}: missing required key {key!r}")
    value = mapping[key]
    if kind is float and isinstance(value, int):
        value = float(value)
    if not isinstance(value, kind):
        raise _fail(f"{where}: {key!r} must be {kind.__name__}, got {type(value).__name__}")
    return value


def _parse_cell(raw: Any, where: str) -> IVqROFN:
    if not isinstance(raw, (list, tuple)) or len(raw) != 4:
        raise _fail(f"{where}: a cell must be a list of 4 numbers")
    vals = []
    for v in raw:
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise _fail(f"{where}: cell components must be numbers")
        vals.append(float(v))
    ul, uh, vl, vh = vals
    for name, x in zip(("mu_lo", "mu_hi", "nu_lo", "nu_hi"), vals):
        if not (0.0 <= x <= 1.0):
            raise _fail(f"{where}: {name} = {x} outside [0, 1]")
    if ul > uh:
        raise _fail(f"{where}: mu_lo = {ul} > mu_hi = {uh}")
    if vl > vh:
        raise _fail(f"{where}: nu_lo = {vl} > nu_hi = {vh}")
    return IVqROFN(ul, uh, vl, vh)


def parse_problem(document: str | dict) -> GroupProblem:
    """Parse and validate a problem document (JSON text or mapping)."""
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise _fail(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise _fail("top level must be an object")
    version = _require(doc, "version", int, "document")
    if version != FORMAT_VERSION:
        raise _fail(f"document: unsupported version {version}, expected {FORMAT_VERSION}")

    params = doc.get("parameters", {})
    if not isinstance(params, dict):
        raise _fail("parameters: must be an object")
    q = params.get("q")
    if q is not None and (not isinstance(q, (int, float)) or isinstance(q, bool)):
        raise _fail("parameters: q must be a number or null")
    p = float(params.get("p", 2.0))
    alpha = float(params.get("alpha", 0.5))
    lam = float(params.get("lambda", 0.5))
    theta = float(params.get("theta", 0.5))
    mode_text = params.get("distance_mode", "nis")
    try:
        mode = DistanceMode.parse(str(mode_text))
    except ValueError as exc:
        raise _fail(f"parameters: {exc}") from None

    attributes = _require(doc, "attributes", list, "document")
    if not attributes:
        raise _fail("attributes: must not be empty")
    attr_names, polarity = [], []
    for j, attr in enumerate(attributes, start=1):
        name = _require(attr, "name", str, f"attribute {j}")
        pol_text = _require(attr, "polarity", str, f"attribute {j}")
        try:
            polarity.append(Polarity.parse(pol_text))
        except ValidityError as exc:
            raise _fail(f"attribute {j}: {exc}") from None
        attr_names.append(name)

    alternatives = _require(doc, "alternatives", list, "document")
    if not alternatives or not all(isinstance(a, str) for a in alternatives):
        raise _fail("alternatives: must be a non-empty list of names")

    experts_doc = _require(doc, "experts", list, "document")
    if not experts_doc:
        raise _fail("experts: must not be empty")
    m, n = len(alternatives), len(attributes)
    experts = []
    for t, expert in enumerate(experts_doc, start=1):
        matrix = _require(expert, "matrix", list, f"expert {t}")
        if len(matrix) != m:
            raise _fail(f"expert {t}: expected {m} rows, got {len(matrix)}")
        rows = []
        for i, row in enumerate(matrix, start=1):
            if not isinstance(row, list) or len(row) != n:
                raise _fail(f"expert {t}, row {i}: expected {n} cells")
            rows.append(
                tuple(
                    _parse_cell(cell, f"expert {t}, row {i}, col {j}")
                    for j, cell in enumerate(row, start=1)
                )
            )
        experts.append(DecisionMatrix(tuple(rows), tuple(polarity)))

    problem = GroupProblem(
        experts=tuple(experts),
        q=float(q) if q is not None else None,
        p=p,
        score_params=ScoreParams(alpha=alpha, beta=1.0 - alpha),
        waspas_params=WaspasParams(lam=lam),
        cis_params=CISParams(theta=theta),
        distance_mode=mode,
        alternative_names=tuple(alternatives),
        attribute_names=tuple(attr_names),
    )

    try:
        ctx = problem.context()
    except ValidityError as exc:
        raise _fail(str(exc)) from None
    for t, mtx in enumerate(problem.experts, start=1):
        for i, row_cells in enumerate(mtx.cells, start=1):
            for j, cell in enumerate(row_cells, start=1):
                try:
                    validate_number(cell, ctx)
                except ValidityError as exc:
                    raise _fail(f"expert {t}, row {i}, col {j}: {exc}") from None
    return problem


def load_problem(path: str) -> GroupProblem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_problem(fh.read())


def serialize_problem(problem: GroupProblem) -> dict:
    """Inverse of :func:`parse_problem`; a parse of the output reproduces
    the problem exactly."""
    m, n = problem.experts[0].shape
    alt_names = problem.alternative_names or tuple(f"y{i + 1}" for i in range(m))
    attr_names = problem.attribute_names or tuple(f"C{j + 1}" for j in range(n))
    return {
        "version": FORMAT_VERSION,
        "parameters": {
            "q": problem.q,
            "p": problem.p,
            "alpha": problem.score_params.alpha,
            "lambda": problem.waspas_params.lam,
            "theta": problem.cis_params.theta,
            "distance_mode": problem.distance_mode.value,
        },
        "attributes": [
            {"name": name, "polarity": pol.value}
            for name, pol in zip(attr_names, problem.experts[0].polarity)
        ],
        "alternatives": list(alt_names),
        "experts": [
            {
                "name": f"e{t + 1}",
                "matrix": [
                    [list(cell.astuple()) for cell in row] for row in mtx.cells
                ],
            }
            for t, mtx in enumerate(problem.experts)
        ],
    }


def _number_views(a: IVqROFN) -> dict:
    return {
        "value": list(a.astuple()),
        "printed": [round(c, 5) for c in a.astuple()],
    }


def serialize_result(result: RankingResult, problem: GroupProblem) -> dict:
    """Result document: every intermediate at full float precision plus
    5-decimal printed views (round-half-even) and the audit log."""
    m, n = result.aggregated.shape
    alt_names = problem.alternative_names or tuple(f"y{i + 1}" for i in range(m))
    attr_names = problem.attribute_names or tuple(f"C{j + 1}" for j in range(n))
    return {
        "version": FORMAT_VERSION,
        "rounding_rule": "printed views use round-half-even at 5 decimals",
        "parameters": {
            "effective_q": result.effective_q,
            "p": result.context.p,
            "alpha": problem.score_params.alpha,
            "lambda": problem.waspas_params.lam,
            "theta": problem.cis_params.theta,
            "distance_mode": problem.distance_mode.value,
        },
        "dm_weights": [list(row) for row in result.dm_weights.weights],
        "aggregated": [
            [_number_views(c) for c in row] for row in result.aggregated.cells
        ],
        "standardized": [
            [_number_views(c) for c in row] for row in result.standardized.cells
        ],
        "interval_weights": {
            name: _number_views(w)
            for name, w in zip(attr_names, result.interval_weights)
        },
        "attribute_weights": {
            name: w for name, w in zip(attr_names, result.weights)
        },
        "wsm": {name: _number_views(v) for name, v in zip(alt_names, result.wsm)},
        "wpm": {name: _number_views(v) for name, v in zip(alt_names, result.wpm)},
        "blended": {
            name: _number_views(v) for name, v in zip(alt_names, result.blended)
        },
        "scores": {name: s for name, s in zip(alt_names, result.scores)},
        "ranking": [alt_names[i] for i in result.order],
        "ranking_line": result.ranking_line(alt_names),
        "audit": [str(event) for event in result.audit],
    }


def serialize_sweep(report: SensitivityReport, problem: GroupProblem) -> dict:
    m = problem.experts[0].shape[0]
    alt_names = problem.alternative_names or tuple(f"y{i + 1}" for i in range(m))
    return {
        "version": FORMAT_VERSION,
        "axes": {name: list(values) for name, values in report.axes},
        "stable": report.stable,
        "first_divergence": (
            dict(report.first_divergence) if report.first_divergence else None
        ),
        "points": [
            {
                "params": point.param_dict(),
                "scores": {name: s for name, s in zip(alt_names, point.scores)},
                "ranking": [alt_names[i] for i in point.order],
            }
            for point in report.points
        ],
    }


def sweep_series_rows(report: SensitivityReport, problem: GroupProblem) -> list[list]:
    """Plot-ready rows: one per (grid point, alternative) with the varied
    parameter values, the alternative's score, and its rank (1 = best)."""
    m = problem.experts[0].shape[0]
    alt_names = problem.alternative_names or tuple(f"y{i + 1}" for i in range(m))
    axis_names = [name for name, _ in report.axes]
    rows: list[list] = [axis_names + ["alternative", "score", "rank"]]
    for point in report.points:
        values = point.param_dict()
        ranks = {alt: pos + 1 for pos, alt in enumerate(point.order)}
        for i, name in enumerate(alt_names):
            rows.append(
                [values[a] for a in axis_names]
                + [name, repr(point.scores[i]), ranks[i]]
            )
    return rows


def load_case_study() -> GroupProblem:
    """The bundled hypertension risk screening example (five experts, five
    alternatives, five benefit attributes)."""
    text = (
        importlib.resources.files("ivqrof.data")
        .joinpath("hypertension.json")
        .read_text(encoding="utf-8")
    )
    return parse_problem(text)
