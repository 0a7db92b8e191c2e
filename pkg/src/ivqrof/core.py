"""Interval-valued q-rung orthopair fuzzy numbers and their basic arithmetic.

A number holds a membership interval [mu_lo, mu_hi] and a non-membership
interval [nu_lo, nu_hi], both inside [0, 1], constrained by
mu_hi**q + nu_hi**q <= 1 for the ambient rung q.  The rung is not stored on
the number; it travels alongside the data in a :class:`RungContext`, because
a decision problem fixes a single q for all of its numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class FuzzyDomainError(ValueError):
    """A parameter is outside the domain an operation is defined on."""


class ValidityError(ValueError):
    """A number (or matrix cell) violates the orthopair constraints."""


class ShapeError(ValueError):
    """Collections that must agree in shape do not."""


class RungInfeasibleError(ValidityError):
    """No finite rung can make the given data satisfy the constraint."""


@dataclass(frozen=True)
class IVqROFN:
    """One interval-valued q-rung orthopair fuzzy number.

    The constructor performs no checking: intermediate results of some
    pipeline stages legitimately carry unordered component pairs, and the
    arithmetic below is defined componentwise regardless.  Boundary
    validation lives in :func:`validate_number`.
    """

    mu_lo: float
    mu_hi: float
    nu_lo: float
    nu_hi: float

    def astuple(self) -> tuple[float, float, float, float]:
        return (self.mu_lo, self.mu_hi, self.nu_lo, self.nu_hi)

    @classmethod
    def from_sequence(cls, seq: Sequence[float]) -> "IVqROFN":
        if len(seq) != 4:
            raise ShapeError(f"expected 4 components, got {len(seq)}")
        return cls(float(seq[0]), float(seq[1]), float(seq[2]), float(seq[3]))

    @property
    def interval_ordered(self) -> bool:
        return self.mu_lo <= self.mu_hi and self.nu_lo <= self.nu_hi

    def __iter__(self):
        return iter(self.astuple())


POSITIVE_IDEAL = IVqROFN(1.0, 1.0, 0.0, 0.0)
NEGATIVE_IDEAL = IVqROFN(0.0, 0.0, 1.0, 1.0)


@dataclass(frozen=True)
class RungContext:
    """Global parameters shared by every number of one problem.

    q is the rung of the orthopair constraint, p the power of the Yager
    operators.  eps_valid is the slack allowed when checking the constraint,
    eps_clamp the width of the band around [0, 1] inside which float
    roundoff is silently snapped to the boundary.
    """

    q: float = 3.0
    p: float = 2.0
    eps_valid: float = 1e-9
    eps_clamp: float = 1e-12

    def __post_init__(self):
        if self.q < 1.0:
            raise FuzzyDomainError(f"rung q must be >= 1, got {self.q}")
        if self.p < 1.0:
            raise FuzzyDomainError(f"Yager power p must be >= 1, got {self.p}")
        if self.eps_valid < 0.0 or self.eps_clamp < 0.0:
            raise FuzzyDomainError("epsilon policy values must be >= 0")


DEFAULT_CONTEXT = RungContext()


def clamp01(x: float) -> float:
    """Snap float roundoff just outside [0, 1] back onto the interval."""
    if x < 0.0:
        return 0.0
    if x > 1.0:
        return 1.0
    return x


def validate_number(a: IVqROFN, ctx: RungContext, where: str = "") -> None:
    """Raise ValidityError unless ``a`` is a well-formed number under ctx.q."""
    loc = f"{where}: " if where else ""
    ul, uh, vl, vh = a.astuple()
    for name, x in (("mu_lo", ul), ("mu_hi", uh), ("nu_lo", vl), ("nu_hi", vh)):
        if not (0.0 <= x <= 1.0):
            raise ValidityError(f"{loc}{name} = {x} outside [0, 1]")
    if ul > uh:
        raise ValidityError(f"{loc}mu_lo = {ul} > mu_hi = {uh}")
    if vl > vh:
        raise ValidityError(f"{loc}nu_lo = {vl} > nu_hi = {vh}")
    excess = uh ** ctx.q + vh ** ctx.q - 1.0
    if excess > ctx.eps_valid:
        raise ValidityError(
            f"{loc}mu_hi^q + nu_hi^q = {uh ** ctx.q + vh ** ctx.q:.6f} > 1 at q = {ctx.q}"
        )


def is_valid(a: IVqROFN, ctx: RungContext) -> bool:
    try:
        validate_number(a, ctx)
    except ValidityError:
        return False
    return True


def hesitancy(a: IVqROFN, ctx: RungContext) -> tuple[float, float]:
    """Residual indeterminacy interval; the lower bound comes from the
    upper membership/non-membership pair and vice versa."""
    validate_number(a, ctx)
    q = ctx.q
    lo = clamp01(1.0 - a.mu_hi ** q - a.nu_hi ** q) ** (1.0 / q)
    hi = clamp01(1.0 - a.mu_lo ** q - a.nu_lo ** q) ** (1.0 / q)
    return (clamp01(lo), clamp01(hi))


def _t_sum(x: float, y: float) -> float:
    # probabilistic-sum combination of q-th powers: x + y - x*y on [0, 1]
    return clamp01(x + y - x * y)


def add(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> IVqROFN:
    """Algebraic sum: memberships combine, non-memberships multiply."""
    q = ctx.q
    return IVqROFN(
        _t_sum(a.mu_lo ** q, b.mu_lo ** q) ** (1.0 / q),
        _t_sum(a.mu_hi ** q, b.mu_hi ** q) ** (1.0 / q),
        a.nu_lo * b.nu_lo,
        a.nu_hi * b.nu_hi,
    )


def mul(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> IVqROFN:
    """Algebraic product: memberships multiply, non-memberships combine."""
    q = ctx.q
    return IVqROFN(
        a.mu_lo * b.mu_lo,
        a.mu_hi * b.mu_hi,
        _t_sum(a.nu_lo ** q, b.nu_lo ** q) ** (1.0 / q),
        _t_sum(a.nu_hi ** q, b.nu_hi ** q) ** (1.0 / q),
    )


def scale(lam: float, a: IVqROFN, ctx: RungContext) -> IVqROFN:
    """Scalar multiple: lam * a with lam > 0."""
    if lam <= 0.0:
        raise FuzzyDomainError(f"scale factor must be > 0, got {lam}")
    q = ctx.q
    return IVqROFN(
        clamp01(1.0 - (1.0 - a.mu_lo ** q) ** lam) ** (1.0 / q),
        clamp01(1.0 - (1.0 - a.mu_hi ** q) ** lam) ** (1.0 / q),
        a.nu_lo ** lam,
        a.nu_hi ** lam,
    )


def power(a: IVqROFN, lam: float, ctx: RungContext) -> IVqROFN:
    """Exponentiation a**lam with lam > 0; lam = 0.5 is the fuzzy square root."""
    if lam <= 0.0:
        raise FuzzyDomainError(f"exponent must be > 0, got {lam}")
    q = ctx.q
    return IVqROFN(
        a.mu_lo ** lam,
        a.mu_hi ** lam,
        clamp01(1.0 - (1.0 - a.nu_lo ** q) ** lam) ** (1.0 / q),
        clamp01(1.0 - (1.0 - a.nu_hi ** q) ** lam) ** (1.0 / q),
    )


def sub(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> IVqROFN:
    """Difference a (-) b; closed on valid inputs (memberships become
    products with the subtrahend's non-memberships)."""
    q = ctx.q
    return IVqROFN(
        a.mu_lo * b.nu_lo,
        a.mu_hi * b.nu_hi,
        _t_sum(a.nu_lo ** q, b.mu_lo ** q) ** (1.0 / q),
        _t_sum(a.nu_hi ** q, b.mu_hi ** q) ** (1.0 / q),
    )


def div(a: IVqROFN, b: IVqROFN, ctx: RungContext) -> IVqROFN:
    """Quotient a (/) b, the mirror image of :func:`sub`; never divides by
    zero because the combination is polynomial."""
    q = ctx.q
    return IVqROFN(
        _t_sum(a.mu_lo ** q, b.nu_lo ** q) ** (1.0 / q),
        _t_sum(a.mu_hi ** q, b.nu_hi ** q) ** (1.0 / q),
        a.nu_lo * b.mu_lo,
        a.nu_hi * b.mu_hi,
    )


def _iter_numbers(data: Iterable) -> Iterable[IVqROFN]:
    for item in data:
        cells = getattr(item, "cells", None)
        if cells is not None:
            for row in cells:
                yield from row
        else:
            yield item


def infer_q(data: Iterable) -> int:
    """Smallest integer rung q >= 1 under which every entry satisfies the
    orthopair constraint.

    Accepts decision matrices, numbers, or a mix.  Raises
    RungInfeasibleError when an entry has a component pinned at 1 together
    with a positive partner, since no finite q can then work.
    """
    numbers = list(_iter_numbers(data))
    if not numbers:
        raise ShapeError("cannot infer a rung from no entries")
    for a in numbers:
        hi, lo = max(a.mu_hi, a.nu_hi), min(a.mu_hi, a.nu_hi)
        if hi >= 1.0 and lo > 0.0:
            raise RungInfeasibleError(
                f"entry {a.astuple()} admits no finite rung (a bound is 1 "
                "while the other side is positive)"
            )
    q = 1
    while True:
        if all(a.mu_hi ** q + a.nu_hi ** q <= 1.0 + 1e-15 for a in numbers):
            return q
        q += 1


def dominates(a: IVqROFN, b: IVqROFN) -> bool:
    """Componentwise order: every membership bound of ``a`` at least as
    large, every non-membership bound at most as large."""
    return (
        a.mu_lo >= b.mu_lo
        and a.mu_hi >= b.mu_hi
        and a.nu_lo <= b.nu_lo
        and a.nu_hi <= b.nu_hi
    )


def componentwise_min(items: Sequence[IVqROFN]) -> IVqROFN:
    return IVqROFN(
        min(a.mu_lo for a in items),
        min(a.mu_hi for a in items),
        max(a.nu_lo for a in items),
        max(a.nu_hi for a in items),
    )


def componentwise_max(items: Sequence[IVqROFN]) -> IVqROFN:
    return IVqROFN(
        max(a.mu_lo for a in items),
        max(a.mu_hi for a in items),
        min(a.nu_lo for a in items),
        min(a.nu_hi for a in items),
    )
