import pytest
from hypothesis import HealthCheck, settings

from cyhopf import (
    AbelianGroup,
    CartanDatum,
    CartanMatrix,
    LinkingParameter,
    root_of_unity,
)

settings.register_profile(
    "cyhopf",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cyhopf")


def a2_z2z2_datum() -> CartanDatum:
    """First bundled example: Gamma = Z2 x Z2, type A2, lambda = 0."""
    group = AbelianGroup((2, 2))
    g = (group.element((1, 0)), group.element((0, 1)))
    chi = (group.character((1, 0)), group.character((1, 1)))
    return CartanDatum(group, g, chi, CartanMatrix(((2, -1), (-1, 2))))


def a1a1_znzn_datum(n: int) -> CartanDatum:
    """Second bundled example: Gamma = Zn x Zn, type A1 x A1, lambda = 1,
    chi_1 = q on both generators, chi_2 = q^{-1}."""
    group = AbelianGroup((n, n))
    g = (group.element((1, 0)), group.element((0, 1)))
    chi = (group.character((1, 1)), group.character((n - 1, n - 1)))
    return CartanDatum(
        group,
        g,
        chi,
        CartanMatrix(((2, 0), (0, 2))),
        (LinkingParameter(0, 1, root_of_unity(0, 1)),),
    )


@pytest.fixture
def example_a2():
    return a2_z2z2_datum()


@pytest.fixture
def example_a1a1():
    return a1a1_znzn_datum(3)
