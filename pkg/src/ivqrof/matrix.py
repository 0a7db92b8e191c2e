"""Decision matrices: rectangular grids of IVq-ROFNs with column polarity."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import IVqROFN, RungContext, ShapeError, ValidityError, validate_number


class Polarity(enum.Enum):
    BENEFIT = "benefit"
    COST = "cost"

    @classmethod
    def parse(cls, text: str) -> "Polarity":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValidityError(
                f"polarity must be 'benefit' or 'cost', got {text!r}"
            ) from None


@dataclass(frozen=True)
class DecisionMatrix:
    """m alternatives (rows) by n attributes (columns) of fuzzy numbers."""

    cells: tuple[tuple[IVqROFN, ...], ...]
    polarity: tuple[Polarity, ...]

    def __post_init__(self):
        if not self.cells or not self.cells[0]:
            raise ShapeError("decision matrix must have at least one cell")
        n = len(self.cells[0])
        for i, row in enumerate(self.cells):
            if len(row) != n:
                raise ShapeError(f"row {i + 1} has {len(row)} cells, expected {n}")
        if len(self.polarity) != n:
            raise ShapeError(
                f"{len(self.polarity)} polarity tags for {n} attributes"
            )

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Sequence[Sequence[float]]],
        polarity: Sequence[Polarity | str] | None = None,
    ) -> "DecisionMatrix":
        cells = tuple(
            tuple(IVqROFN.from_sequence(c) for c in row) for row in rows
        )
        n = len(cells[0]) if cells else 0
        if polarity is None:
            tags = tuple(Polarity.BENEFIT for _ in range(n))
        else:
            tags = tuple(
                t if isinstance(t, Polarity) else Polarity.parse(t) for t in polarity
            )
        return cls(cells, tags)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.cells), len(self.cells[0]))

    def row(self, i: int) -> tuple[IVqROFN, ...]:
        return self.cells[i]

    def column(self, j: int) -> tuple[IVqROFN, ...]:
        return tuple(row[j] for row in self.cells)

    def validate(self, ctx: RungContext, where: str = "") -> None:
        prefix = f"{where}, " if where else ""
        for i, row in enumerate(self.cells):
            for j, cell in enumerate(row):
                validate_number(cell, ctx, where=f"{prefix}row {i + 1}, col {j + 1}")


def require_same_shape(matrices: Sequence[DecisionMatrix]) -> tuple[int, int]:
    if not matrices:
        raise ShapeError("expected at least one decision matrix")
    shape = matrices[0].shape
    for t, m in enumerate(matrices[1:], start=2):
        if m.shape != shape:
            raise ShapeError(
                f"matrix {t} has shape {m.shape}, expected {shape}"
            )
    return shape
