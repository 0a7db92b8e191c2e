import random

import pytest
from hypothesis import strategies as st

from ivqrof import IVqROFN, RungContext, load_case_study


@pytest.fixture
def ctx():
    return RungContext(q=3.0, p=2.0)


@pytest.fixture(scope="session")
def case_study():
    return load_case_study()


def random_number(rng: random.Random, q: float = 3.0) -> IVqROFN:
    """Uniformly-ish sampled valid number at rung q."""
    mu_hi = rng.random() ** 0.5
    nu_cap = (1.0 - mu_hi ** q) ** (1.0 / q)
    nu_hi = rng.random() * nu_cap
    mu_lo = rng.random() * mu_hi
    nu_lo = rng.random() * nu_hi
    return IVqROFN(mu_lo, mu_hi, nu_lo, nu_hi)


def numbers(q: float = 3.0):
    """Hypothesis strategy for valid numbers at rung q.

    Draws are quantized to 6 decimals so that q*p-th powers stay far away
    from the subnormal range.
    """
    unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, width=64).map(
        lambda x: round(x, 6)
    )

    def build(mu_hi, nu_frac, mu_frac, nu_lo_frac):
        nu_hi = nu_frac * (1.0 - mu_hi ** q) ** (1.0 / q)
        return IVqROFN(mu_frac * mu_hi, mu_hi, nu_lo_frac * nu_hi, nu_hi)

    return st.builds(build, unit, unit, unit, unit)


def assert_close(a: IVqROFN, expected, tol=1e-12):
    got = a.astuple()
    for g, e in zip(got, expected):
        assert abs(g - e) <= tol, f"{got} vs {tuple(expected)} (tol {tol})"
